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

#include <random>

#include "doctest.h"
#include "invsg/algebra.h"
#include "invsg/basis.h"
#include "invsg/catalog.h"

namespace invsg {
namespace {

Substitution sub(std::initializer_list<std::pair<char, const char*>> m) {
  Substitution s;
  for (auto [v, w] : m) s[v - 'a'] = parse_word(w);
  return s;
}

bool holds(const InvolutionSemigroup& s, const Word& u, const Word& v) {
  return !satisfies(s, u, v).has_value();
}

bool rule_holds(const InvolutionSemigroup& s, const IdentityRule& r) {
  return r.zero_rule ? satisfies_zero(s, r.lhs) : holds(s, r.lhs, r.rhs);
}

Word random_word(std::mt19937& rng, int bases, int max_len) {
  Word w;
  int len = 1 + rng() % max_len;
  for (int i = 0; i < len; ++i)
    w.push_back(Letter{static_cast<uint8_t>(rng() % bases), rng() % 2 == 1});
  return w;
}

std::string std_render(const Word& w) { return render(w, false); }

}  // namespace

TEST_CASE("rules hold in their models") {
  for (const auto& r : basis_a0().rules) CHECK_MESSAGE(rule_holds(model_a0(), r), r.tag);
  for (const auto& r : system_a0().rules) CHECK_MESSAGE(rule_holds(model_a0(), r), r.tag);
  for (const auto& r : basis_b0().rules) CHECK_MESSAGE(rule_holds(model_b0(), r), r.tag);
  for (const auto& r : system_b0().rules) CHECK_MESSAGE(rule_holds(model_b0(), r), r.tag);
  const auto& a0 = model_a0();
  CHECK(holds(a0, parse_word("yxx*y"), parse_word("yy*zz*")));
  CHECK(holds(a0, parse_word("yy*zz*"), parse_word("x*xx*")));
  CHECK(holds(a0, parse_word("x*xx*"), parse_word("xx*x")));
  CHECK(satisfies_zero(model_b0(), parse_word("xx*")));
  CHECK(satisfies_zero(model_b0(), parse_word("xx*x")));
  CHECK(satisfies_zero(model_b0(), parse_word("x*x")));
}

TEST_CASE("star mirrors are present") {
  const auto& sys = system_a0();
  REQUIRE(sys.find("6c1"));
  REQUIRE(sys.find("6c1*"));
  CHECK(sys.find("6c1*")->lhs == star_word(sys.find("6c1")->lhs));
  // 4c is its own mirror up to renaming and side swap.
  CHECK_FALSE(sys.find("4c*"));
  CHECK_FALSE(sys.find("nope"));
}

TEST_CASE("apply_rule") {
  const auto& sys = system_a0();
  auto w = apply_rule(parse_word("xyx*"), *sys.find("4b"), true, 0,
                      sub({{'x', "x"}, {'y', "y"}}));
  CHECK(std_render(w) == "xy*x*");
  auto v = apply_rule(parse_word("axxb"), *sys.find("4e1"), true, 1,
                      sub({{'x', "x"}}));
  CHECK(std_render(v) == "axxxb");
  CHECK(std_render(apply_rule(v, *sys.find("4e1"), false, 1,
                              sub({{'x', "x"}}))) == "axxb");
  CHECK_THROWS_AS(apply_rule(parse_word("xyx*"), *sys.find("4c"), true, 0,
                             [] {
                               auto s = sub({{'x', "x"}, {'y', "y"}});
                               s[kVarT] = Word{};
                               return s;
                             }()),
                  RuleMatchError);
  auto primed = apply_rule(parse_word("xx*y"), *sys.find("4c'"), true, 0,
                           sub({{'x', "x"}, {'y', "y"}}));
  CHECK(std_render(primed) == "y*xx*");
  CHECK_THROWS_AS(apply_rule(parse_word("xyz"), *sys.find("4b"), true, 0,
                             sub({{'x', "x"}, {'y', "y"}})),
                  RuleMatchError);
  CHECK_THROWS_AS(apply_rule(parse_word("xx*x"), *sys.find("4a"), true, 0,
                             sub({{'x', "x"}})),
                  RuleMatchError);
  auto big = apply_rule(parse_word("abc*b*a*"), *sys.find("4b"), true, 0,
                        sub({{'x', "ab"}, {'y', "c*"}}));
  CHECK(std_render(big) == "abcb*a*");
}

TEST_CASE("verify_trace") {
  const auto& sys = system_a0();
  DerivationTrace chain;
  chain.start = parse_word("yxx*y");
  chain.end = parse_word("y*xx*x");
  chain.steps = {
      {"4c'", false, 0, sub({{'x', "x"}, {'y', "y*"}})},
      {"6e'", true, 1, sub({{'x', "x*"}, {'y', "y*"}})},
      {"6c1'", true, 0, sub({{'y', "x"}, {'z', "y*"}, {'x', "x*"}})},
  };
  auto ok = verify_trace(chain, sys, &model_a0());
  CHECK_MESSAGE(ok.ok, ok.message);
  auto wz = a_zero_witness(chain.end);
  REQUIRE(wz);
  CHECK(wz->hit->pattern == "xx*x");

  auto round = trace_from_json(trace_to_json(chain));
  CHECK(verify_trace(round, sys).ok);

  DerivationTrace bad;
  bad.start = parse_word("xyx*");
  bad.end = parse_word("xyx*");
  bad.steps = {{"4b", true, 0, sub({{'x', "x"}, {'y', "y"}})}};
  auto r = verify_trace(bad, sys);
  CHECK_FALSE(r.ok);
  CHECK(r.failed_step == 1);

  DerivationTrace empty;
  empty.start = empty.end = parse_word("xy");
  CHECK(verify_trace(empty, sys).ok);
  empty.end = parse_word("yx");
  CHECK_FALSE(verify_trace(empty, sys).ok);

  DerivationTrace mismatch = chain;
  mismatch.steps[1].pos = 0;
  auto m = verify_trace(mismatch, sys);
  CHECK_FALSE(m.ok);
  CHECK(m.failed_step == 2);

  CHECK_THROWS_AS(trace_from_json("{\"start\": 3}"), std::invalid_argument);
  CHECK_THROWS_AS(trace_from_json("not json"), std::invalid_argument);
}

TEST_CASE("zero witnesses") {
  auto w = a_zero_witness(parse_word("axbx*cxd"));
  REQUIRE(w);
  REQUIRE(w->hit);
  CHECK(w->hit->pattern == "xx*x");
  CHECK(w->hit->positions == std::vector<size_t>{1, 3, 5});
  CHECK_FALSE(a_zero_witness(parse_word("xyxy")));
  CHECK_FALSE(b_zero_witness(parse_word("xyxy")));
  CHECK_FALSE(a_zero_witness(parse_word("yxx*z")));
  auto bz = b_zero_witness(parse_word("yxx*z"));
  REQUIRE(bz);
  CHECK(bz->reason == "factor");
  CHECK_FALSE(satisfies_zero(model_a0(), parse_word("yxx*z")));
  CHECK(satisfies_zero(model_b0(), parse_word("yxx*z")));
  // Only visible after rewriting.
  CHECK_FALSE(zero_pattern_scan(parse_word("aybay*b")));
  auto late = a_zero_witness(parse_word("aybay*b"));
  REQUIRE(late);
  CHECK_FALSE(late->trace.steps.empty());
  CHECK(verify_trace(late->trace, system_a0(), &model_a0()).ok);
  CHECK(satisfies_zero(model_a0(), parse_word("aybay*b")));
}

TEST_CASE("zero witnesses are sound") {
  std::mt19937 rng(21);
  for (int t = 0; t < 400; ++t) {
    Word w = random_word(rng, 3, 7);
    if (a_zero_witness(w)) CHECK(satisfies_zero(model_a0(), w));
    if (b_zero_witness(w)) CHECK(satisfies_zero(model_b0(), w));
    if (is_mixed(w)) {
      CHECK(a_zero_witness(w).has_value() == satisfies_zero(model_a0(), w));
      CHECK(b_zero_witness(w).has_value() == satisfies_zero(model_b0(), w));
    }
  }
}

TEST_CASE("normalize examples") {
  auto id = normalize_a(parse_word("xyx*"));
  CHECK(std_render(id.form.word()) == "xyx*");
  CHECK(id.trace.steps.empty());
  auto rot = normalize_a(parse_word("axbx*c"));
  CHECK(std_render(rot.form.word()) == "ac*xbx*");
  auto n = normalize_a(parse_word("xyx*y"));
  CHECK(is_a_standard(n.form.word()));
  CHECK(holds(model_a0(), parse_word("xyx*y"), n.form.word()));
  CHECK_THROWS_AS(normalize_a(parse_word("xy")), PreconditionError);
  CHECK_THROWS_AS(normalize_a(parse_word("xx*x")), PreconditionError);

  auto b1 = normalize_b(parse_word("xsyytx*"));
  CHECK(std_render(b1.form.word()) == "xsyytx*");
  auto b2 = normalize_b(parse_word("xyzzywx*"));
  CHECK(is_b_standard(b2.form.word()));
  CHECK(holds(model_b0(), parse_word("xyzzywx*"), b2.form.word()));
  CHECK(holds(model_b0(), parse_word("xyyzzwx*"), b2.form.word()));
  CHECK_THROWS_AS(normalize_b(parse_word("xyx*y")), PreconditionError);
  CHECK(b_zero_witness(parse_word("xyx*y")));

  CHECK(is_a_standard(parse_word("xyx*")));
  CHECK_FALSE(is_a_standard(parse_word("xx*x")));
  CHECK_FALSE(is_a_standard(parse_word("xy")));
}

TEST_CASE("normalize property run") {
  std::mt19937 rng(20261019);
  int a_done = 0, b_done = 0;
  for (int t = 0; a_done < 200 || b_done < 200; ++t) {
    Word w = random_word(rng, 4, 9);
    if (!is_mixed(w)) continue;
    if (a_done < 200 && !a_zero_witness(w)) {
      ++a_done;
      auto r = normalize_a(w);
      CHECK(is_a_standard(r.form.word()));
      CHECK(r.trace.start == w);
      CHECK(r.trace.end == r.form.word());
      auto c = verify_trace(r.trace, system_a0(), &model_a0());
      CHECK_MESSAGE(c.ok, render(w) << ": " << c.message);
      CHECK(holds(model_a0(), w, r.form.word()));
    }
    if (b_done < 200 && !b_zero_witness(w)) {
      ++b_done;
      auto r = normalize_b(w);
      CHECK(is_b_standard(r.form.word()));
      auto c = verify_trace(r.trace, system_b0(), &model_b0());
      CHECK_MESSAGE(c.ok, render(w) << ": " << c.message);
      CHECK(holds(model_b0(), w, r.form.word()));
    }
  }
}

TEST_CASE("decide examples") {
  auto d1 = decide(System::kA0, parse_word("xyx*"), parse_word("xy*x*"));
  CHECK(d1.holds);
  CHECK(d1.certificate.kind == CertificateKind::kCanonicalMatch);
  auto d2 = decide(System::kA0, parse_word("xx*"), parse_word("x*x"));
  CHECK_FALSE(d2.holds);
  REQUIRE(d2.certificate.counterexample);
  CHECK(evaluate(model_a0(), parse_word("xx*"), *d2.certificate.counterexample) !=
        evaluate(model_a0(), parse_word("x*x"), *d2.certificate.counterexample));
  auto d3 = decide(System::kB0, parse_word("xx*"), parse_word("x*x"));
  CHECK(d3.holds);
  CHECK(d3.certificate.kind == CertificateKind::kBothZero);
  auto d4 = decide(System::kA0, parse_word("xy"), parse_word("yx"));
  CHECK_FALSE(d4.holds);
  CHECK(d4.certificate.kind == CertificateKind::kBothBipartite);
  auto d5 = decide(System::kA0, parse_word("xyx*"), parse_word("xy"));
  CHECK_FALSE(d5.holds);
  CHECK(d5.certificate.kind == CertificateKind::kMixedBipartiteMismatch);
  REQUIRE(d5.certificate.counterexample);
  auto d6 = decide(System::kA0, parse_word("xx*x"), parse_word("xy*x*"));
  CHECK_FALSE(d6.holds);
  CHECK(d6.certificate.kind == CertificateKind::kZeroNonzeroMismatch);
  auto d7 = decide(System::kA0, parse_word("xyx*"), parse_word("xzx*"));
  CHECK_FALSE(d7.holds);
  CHECK(d7.certificate.kind == CertificateKind::kCanonicalMismatch);
}

TEST_CASE("decide agrees with the models and star symmetry") {
  std::mt19937 rng(77);
  for (int t = 0; t < 300; ++t) {
    Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    for (System sys : {System::kA0, System::kB0}) {
      auto d = decide(sys, u, v);
      CHECK(d.holds == holds(model_of(sys), u, v));
      auto ds = decide(sys, star_word(u), star_word(v));
      CHECK(ds.holds == d.holds);
      CHECK(ds.certificate.kind == d.certificate.kind);
    }
  }
}

TEST_CASE("canonical_mixed") {
  CHECK(canonical_mixed(System::kA0, parse_word("xyx*")) ==
        canonical_mixed(System::kA0, parse_word("xy*x*")));
  std::mt19937 rng(31);
  int pairs = 0;
  for (int t = 0; pairs < 100 && t < 100000; ++t) {
    Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    if (!is_mixed(u) || !is_mixed(v) || a_zero_witness(u) || a_zero_witness(v))
      continue;
    if (canonical_mixed(System::kA0, u) != canonical_mixed(System::kA0, v))
      continue;
    ++pairs;
    CHECK(holds(model_a0(), u, v));
  }
  CHECK(pairs == 100);
}

TEST_CASE("bounded_search") {
  auto t = bounded_search(system_a0(), parse_word("xyx*"), parse_word("xy*x*"), 2);
  REQUIRE(t);
  CHECK(verify_trace(*t, system_a0()).ok);
  CHECK_FALSE(bounded_search(system_a0(), parse_word("xy"), parse_word("yx"), 2));
}

}  // namespace invsg
