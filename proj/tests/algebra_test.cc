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
#include <numeric>
#include <random>

#include "doctest.h"
#include "invsg/algebra.h"
#include "invsg/catalog.h"
#include "invsg/enumerator.h"

namespace invsg {
namespace {

Assignment assign(std::initializer_list<std::pair<char, int>> vals) {
  Assignment a;
  for (auto [c, v] : vals) a.value[c - 'a'] = static_cast<int8_t>(v - 1);
  return a;
}

int eval1(const InvolutionSemigroup& s, const std::string& w,
          const Assignment& a) {
  return evaluate(s, parse_word(w), a) + 1;
}

// Plain reference: all n^v assignments, no early exit.
bool brute_holds(const InvolutionSemigroup& s, const Word& u, const Word& v) {
  auto bases = bases_of(concat({u, v}));
  size_t total = 1;
  for (size_t i = 0; i < bases.size(); ++i) total *= s.n;
  for (size_t code = 0; code < total; ++code) {
    Assignment a;
    size_t c = code;
    for (size_t i = 0; i < bases.size(); ++i) {
      a.value[bases[i]] = static_cast<int8_t>(c % s.n);
      c /= s.n;
    }
    if (evaluate(s, u, a) != evaluate(s, v, a)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate catalog and small tables") {
  for (const auto& e : table1_catalog()) {
    CHECK_MESSAGE(validate(e.s).ok, e.name);
  }
  auto lz = parse_table("n=2 mul=1122 inv=21");
  auto r = validate(lz);
  CHECK_FALSE(r.ok);
  CHECK(r.witness == std::vector<int>{1, 2});
  CHECK(validate(parse_table("n=4 mul=2222222222222222 inv=3214")).ok);
  CHECK(validate(parse_table("n=2 mul=1221 inv=12")).ok);
  CHECK_THROWS(parse_table("n=2 mul=1132 inv=12"));
  auto nonassoc = parse_table("n=2 mul=2111 inv=12");
  auto ra = validate(nonassoc);
  CHECK_FALSE(ra.ok);
  CHECK(ra.witness.size() == 3);
}

TEST_CASE("evaluate examples") {
  const auto& a0 = model_a0();
  CHECK(eval1(a0, "xx*x", assign({{'x', 4}})) == 2);
  CHECK(eval1(a0, "xy", assign({{'x', 4}, {'y', 3}})) == 1);
  CHECK(eval1(a0, "yx", assign({{'x', 4}, {'y', 3}})) == 2);
  for (int e = 1; e <= 4; ++e) CHECK(eval1(a0, "x", assign({{'x', e}})) == e);
  CHECK_THROWS(evaluate(a0, parse_word("xy"), assign({{'x', 1}})));
}

TEST_CASE("evaluate commutes with star") {
  std::mt19937 rng(7);
  for (const auto& e : table1_catalog()) {
    for (int t = 0; t < 50; ++t) {
      Word w;
      int len = 1 + rng() % 6;
      for (int i = 0; i < len; ++i)
        w.push_back(Letter{static_cast<uint8_t>(rng() % 3), rng() % 2 == 1});
      Assignment a;
      for (int b = 0; b < 3; ++b) a.value[b] = rng() % e.s.n;
      CHECK(evaluate(e.s, star_word(w), a) == e.s.inv[evaluate(e.s, w, a)]);
    }
  }
}

TEST_CASE("satisfies examples") {
  const auto& a0 = model_a0();
  CHECK_FALSE(satisfies(a0, parse_word("xyx*"), parse_word("xy*x*")));
  auto cx = satisfies(a0, parse_word("xy"), parse_word("yx"));
  REQUIRE(cx);
  CHECK(evaluate(a0, parse_word("xy"), *cx) !=
        evaluate(a0, parse_word("yx"), *cx));
  auto other = assign({{'x', 4}, {'y', 3}});
  CHECK(evaluate(a0, parse_word("xy"), other) !=
        evaluate(a0, parse_word("yx"), other));
  CHECK_FALSE(satisfies(a0, parse_word("x"), parse_word("x")));
  CHECK_THROWS_AS(satisfies(a0, parse_word("abcdefghi"), parse_word("a")),
                  VarCapExceeded);
}

TEST_CASE("satisfies agrees with brute force and is symmetric") {
  std::mt19937 rng(11);
  auto rand_word = [&] {
    Word w;
    int len = 1 + rng() % 5;
    for (int i = 0; i < len; ++i)
      w.push_back(Letter{static_cast<uint8_t>(rng() % 3), rng() % 2 == 1});
    return w;
  };
  for (const auto& e : table1_catalog()) {
    for (int t = 0; t < 40; ++t) {
      Word u = rand_word(), v = rand_word();
      bool holds = !satisfies(e.s, u, v).has_value();
      CHECK(holds == brute_holds(e.s, u, v));
      CHECK(holds == !satisfies(e.s, v, u).has_value());
      CHECK(holds == !satisfies(e.s, star_word(u), star_word(v)).has_value());
    }
  }
}

TEST_CASE("satisfies_zero") {
  CHECK(satisfies_zero(model_a0(), parse_word("xx*x")));
  CHECK_FALSE(satisfies_zero(model_a0(), parse_word("xx*")));
  CHECK(satisfies_zero(model_b0(), parse_word("xx*")));
  CHECK(satisfies_zero(model_b0(), parse_word("x*x")));
  CHECK_FALSE(satisfies_zero(model_b0(), parse_word("xy")));
  std::mt19937 rng(3);
  for (const auto& e : table1_catalog()) {
    auto z = zero_element(e.s.reduct());
    for (int t = 0; t < 30; ++t) {
      Word w;
      int len = 1 + rng() % 5;
      for (int i = 0; i < len; ++i)
        w.push_back(Letter{static_cast<uint8_t>(rng() % 2), rng() % 2 == 1});
      bool zs = satisfies_zero(e.s, w);
      if (z) {
        auto vals = evaluation_table(e.s, w, bases_of(w));
        bool all_z = std::all_of(vals.begin(), vals.end(),
                                 [&](Element x) { return x == *z; });
        CHECK(zs == all_z);
      }
    }
  }
}

TEST_CASE("structural predicates") {
  auto a0 = model_a0().reduct();
  REQUIRE(zero_element(a0));
  CHECK(*zero_element(a0) + 1 == 2);
  CHECK(periodicity(a0).m0 == 2);
  CHECK(periodicity(a0).k0 == 1);
  CHECK_FALSE(is_commutative(a0));
  auto sl3 = model_sl3().reduct();
  CHECK(periodicity(sl3).m0 == 1);
  CHECK(periodicity(sl3).k0 == 1);
  CHECK(is_commutative(sl3));
  auto b4 = find_table1("B4");
  REQUIRE(b4);
  REQUIRE(nilpotency_degree(b4->s.reduct()));
  CHECK(*nilpotency_degree(b4->s.reduct()) == 3);
  auto z2 = parse_table("n=2 mul=1221 inv=12").reduct();
  CHECK_FALSE(zero_element(z2));
  CHECK(periodicity(z2).m0 == 1);
  CHECK(periodicity(z2).k0 == 2);
  CHECK_FALSE(nilpotency_degree(z2));
}

TEST_CASE("periodicity profile characterizes x^m = x^(m+k)") {
  for (const auto& e : table1_catalog()) {
    auto p = periodicity(e.s.reduct());
    for (int m = 1; m <= 4; ++m) {
      for (int k = 1; k <= 4; ++k) {
        Word lhs(m, make_letter('x')), rhs(m + k, make_letter('x'));
        bool holds = !satisfies(e.s, lhs, rhs).has_value();
        CHECK(holds == (m >= p.m0 && k % p.k0 == 0));
      }
    }
  }
}

TEST_CASE("condition predicates") {
  auto a4 = find_table1("A4");
  REQUIRE(a4);
  CHECK(satisfies_xyz_eq_xz(a4->s));
  auto b2 = find_table1("B2");
  REQUIRE(b2);
  CHECK(satisfies_C4_identities(b2->s));
  auto ps = find_permutation_identity(b2->s);
  REQUIRE(ps.found);
  CHECK(ps.found->render() == "abcd = acbd");
  auto com = find_permutation_identity(model_sl3());
  REQUIRE(com.found);
  CHECK(com.found->m == 2);
  CHECK(com.found->perm == std::vector<int>{1, 0});
  CHECK_FALSE(satisfies_C4_identities(model_a0()));
}

TEST_CASE("involutions") {
  auto lz = parse_table("n=2 mul=1122 inv=12").reduct();
  CHECK(involutions_of(lz).empty());
  CHECK_FALSE(involution_obstructions(lz).empty());
  auto z2 = parse_table("n=2 mul=1221 inv=12").reduct();
  auto inv = involutions_of(z2);
  REQUIRE(inv.size() == 1);
  CHECK(format_perm(inv[0]) == "12");
  auto a0 = model_a0().reduct();
  bool found = false;
  for (const auto& p : involutions_of(a0)) found |= format_perm(p) == "1243";
  CHECK(found);
}

TEST_CASE("obstructions never reject a table with an involution") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_semigroups(n, Equivalence::kIso)) {
      bool has = !involutions_of(t).empty();
      if (has) CHECK(involution_obstructions(t).empty());
      if (has) {
        for (const auto& p : involutions_of(t))
          CHECK(validate(with_involution(t, p)).ok);
      }
    }
  }
}

TEST_CASE("isomorphism and canonical key") {
  auto c6 = find_table1("C6");
  REQUIRE(c6);
  CHECK(is_isomorphic(c6->s, model_a0()));
  CHECK(is_isomorphic(model_a0(), model_a0()) ==
        std::optional<Perm>(identity_perm(4)));
  CHECK_FALSE(is_isomorphic(model_a0(), model_b0()));
  CHECK(is_homomorphism(model_a0(), model_sl3(), Perm{0, 0, 1, 2}));
  CHECK_FALSE(is_homomorphism(model_a0(), model_sl3(), Perm{0, 1, 1, 2}));

  std::mt19937 rng(5);
  const auto& cat = table1_catalog();
  for (const auto& e : cat) {
    Perm p = identity_perm(e.s.n);
    std::shuffle(p.begin(), p.end(), rng);
    auto r = relabel(e.s, p);
    CHECK(validate(r).ok);
    CHECK(canonical_key(r) == canonical_key(e.s));
    auto iso = is_isomorphic(e.s, r);
    REQUIRE(iso);
    CHECK(relabel(e.s, *iso) == r);
  }
  for (size_t i = 0; i < cat.size(); ++i) {
    for (size_t j = 0; j < cat.size(); ++j) {
      bool same_key = canonical_key(cat[i].s) == canonical_key(cat[j].s);
      CHECK(same_key == is_isomorphic(cat[i].s, cat[j].s).has_value());
    }
  }
}

}  // namespace invsg
