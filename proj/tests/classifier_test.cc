// Copyright 2026 The invsg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "invsg/algebra.h"
#include "invsg/catalog.h"
#include "invsg/classifier.h"

namespace invsg {
namespace {

FBVerdict classify_named(const std::string& name) {
  auto e = find_table1(name);
  REQUIRE(e);
  return classify(e->s);
}

}  // namespace

TEST_CASE("classify examples") {
  CHECK(classify_named("A1").name() == "C1");
  CHECK(classify_named("B4").name() == "C2(3)");
  CHECK(classify_named("B7").name() == "C2(3)");
  CHECK(classify_named("C6").name() == "KnownBasis(A0)");
  CHECK(classify_named("C7").name() == "KnownBasis(B0)");
  CHECK(classify_named("A4").tag == FBTag::kC3);
  auto b2 = classify_named("B2");
  CHECK(b2.tag == FBTag::kC4);
  REQUIRE(b2.permutation);
  CHECK(b2.permutation->render() == "abcd = acbd");
}

TEST_CASE("every catalog entry gets its listed label") {
  for (const auto& e : table1_catalog())
    CHECK_MESSAGE(classify(e.s).label() == e.label, e.name);
}

TEST_CASE("verdicts are invariant under relabeling") {
  std::mt19937 rng(9);
  for (const auto& e : table1_catalog()) {
    auto base = classify(e.s);
    for (int t = 0; t < 3; ++t) {
      Perm p = identity_perm(e.s.n);
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(classify(relabel(e.s, p)).name() == base.name());
    }
  }
}

TEST_CASE("C2 and C4 verdicts re-verify by brute force") {
  for (const auto& e : table1_catalog()) {
    auto v = classify(e.s);
    if (v.tag == FBTag::kC2) {
      auto z = zero_element(e.s.reduct());
      REQUIRE(z);
      // All products of length d are zero and some of length d-1 is not.
      int n = e.s.n;
      std::vector<Element> cur(n);
      for (int a = 0; a < n; ++a) cur[a] = static_cast<Element>(a);
      for (int len = 2; len <= v.degree; ++len) {
        std::vector<Element> next;
        for (auto x : cur)
          for (int a = 0; a < n; ++a) next.push_back(e.s.op(x, a));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (len == v.degree - 1) CHECK(next != std::vector<Element>{*z});
        cur = next;
      }
      CHECK(cur == std::vector<Element>{*z});
    }
    if (v.tag == FBTag::kC4) {
      REQUIRE(v.permutation);
      Word lhs, rhs;
      for (int i = 0; i < v.permutation->m; ++i) {
        lhs.push_back(Letter{static_cast<uint8_t>(i), false});
        rhs.push_back(
            Letter{static_cast<uint8_t>(v.permutation->perm[i]), false});
      }
      CHECK_FALSE(satisfies(e.s, lhs, rhs));
      for (const char* id : {"x*tx", "xtx*", "x*x", "xx*"}) {
        Word mid = parse_word(std::string(id).find('t') != std::string::npos
                                  ? "xtx"
                                  : "xx");
        CHECK_FALSE(satisfies(e.s, parse_word(id), mid));
      }
    }
  }
}

TEST_CASE("census classification") {
  std::map<std::string, int> m4;
  for (const auto& c : classify_census(4)) {
    ++m4[c.verdict.label()];
    CHECK(c.verdict.tag != FBTag::kUnresolved);
    if (c.table1_name) {
      auto e = find_table1(*c.table1_name);
      REQUIRE(e);
      CHECK(e->label == c.verdict.label());
    }
  }
  CHECK(m4 == std::map<std::string, int>{{"C0", 58}, {"C1", 19}, {"C2", 2},
                                         {"C3", 1},  {"C4", 1},  {"A0", 1},
                                         {"B0", 1}});
  std::map<std::string, int> m3;
  for (const auto& c : classify_census(3)) ++m3[c.verdict.label()];
  CHECK(m3 == std::map<std::string, int>{{"C0", 12}, {"C1", 3}});
  std::map<std::string, int> m2;
  for (const auto& c : classify_census(2)) ++m2[c.verdict.label()];
  CHECK(m2 == std::map<std::string, int>{{"C0", 3}});
}

TEST_CASE("condition hypotheses") {
  auto b2 = find_table1("B2");
  REQUIRE(b2);
  for (const auto& h : check_condition_hypotheses(b2->s, Condition::kC4))
    CHECK_MESSAGE(h.pass, h.name);
  bool failed_eq = false;
  for (const auto& h : check_condition_hypotheses(model_a0(), Condition::kC4)) {
    if (h.name == "x*Tx = xTx") {
      failed_eq = true;
      CHECK_FALSE(h.pass);
      CHECK(h.witness == "T=1 x=3");
    }
  }
  CHECK(failed_eq);
  for (const auto& h : check_condition_hypotheses(model_sl3(), Condition::kC1))
    CHECK(h.pass);
  CHECK(parse_condition("C3") == Condition::kC3);
  CHECK_FALSE(parse_condition("C5"));
}

}  // namespace invsg
