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

#include "invsg/classifier.h"

#include <map>

#include "invsg/catalog.h"
#include "invsg/parallel.h"
#include "json.hpp"

namespace invsg {

namespace {

// Rule context variables are written with the base t; reports call it T.
std::string show_assignment(const Assignment& a) {
  std::string s = a.to_string();
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] == 't' && (i == 0 || s[i - 1] == ' ') && i + 1 < s.size() &&
        s[i + 1] == '=')
      s[i] = 'T';
  return s;
}

std::string show_word(const Word& w) {
  std::string s = render(w, false);
  for (auto& c : s)
    if (c == 't') c = 'T';
  return s;
}

struct C4Identity {
  const char* lhs;
  const char* rhs;
};

constexpr C4Identity kC4[] = {
    {"x*tx", "xtx"}, {"xtx", "xtx*"}, {"x*x", "xx"}, {"xx", "xx*"}};

std::string first_noncommuting(const Table& t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      if (t.op(a, b) != t.op(b, a))
        return "x=" + std::to_string(a + 1) + " y=" + std::to_string(b + 1);
  return {};
}

}  // namespace

std::string FBVerdict::name() const {
  switch (tag) {
    case FBTag::kC0:
      return "C0-trivial-involution";
    case FBTag::kC1:
      return "C1";
    case FBTag::kC2:
      return "C2(" + std::to_string(degree) + ")";
    case FBTag::kC3:
      return "C3";
    case FBTag::kC4:
      return "C4";
    case FBTag::kKnownA0:
      return "KnownBasis(A0)";
    case FBTag::kKnownB0:
      return "KnownBasis(B0)";
    case FBTag::kUnresolved:
      return "Unresolved";
  }
  return "?";
}

std::string FBVerdict::label() const {
  switch (tag) {
    case FBTag::kC0:
      return "C0";
    case FBTag::kC1:
      return "C1";
    case FBTag::kC2:
      return "C2";
    case FBTag::kC3:
      return "C3";
    case FBTag::kC4:
      return "C4";
    case FBTag::kKnownA0:
      return "A0";
    case FBTag::kKnownB0:
      return "B0";
    case FBTag::kUnresolved:
      return "Unresolved";
  }
  return "?";
}

FBVerdict classify(const InvolutionSemigroup& s, const ClassifyOptions& opt) {
  FBVerdict v;
  Table t = s.reduct();
  if (s.trivial_involution()) {
    v.tag = FBTag::kC0;
    v.evidence = "identity involution; reduct of order " + std::to_string(s.n) +
                 " is finitely based";
    return v;
  }
  if (is_commutative(t)) {
    auto p = periodicity(t);
    v.tag = FBTag::kC1;
    v.evidence = "commutative, (" + std::to_string(p.m0) + "," +
                 std::to_string(p.k0) + ")-periodic";
    return v;
  }
  v.failed.push_back("C1: not commutative (" + first_noncommuting(t) + ")");
  if (auto d = nilpotency_degree(t)) {
    v.tag = FBTag::kC2;
    v.degree = *d;
    v.evidence = "every product of length " + std::to_string(*d) + " is zero";
    return v;
  }
  v.failed.push_back("C2: not nilpotent");
  auto c3 = check_identity(s, parse_word("xyz"), parse_word("xz"), opt.var_cap);
  if (c3.holds) {
    v.tag = FBTag::kC3;
    v.evidence = "satisfies xyz = xz";
    return v;
  }
  v.failed.push_back("C3: xyz = xz fails at " + c3.counterexample.to_string());
  auto c4 = check_c4_identities(s);
  if (c4.holds) {
    auto ps = find_permutation_identity(s, opt.perm_bound, opt.var_cap);
    if (ps.found) {
      v.tag = FBTag::kC4;
      v.permutation = ps.found;
      v.evidence = "permutative (" + ps.found->render() +
                   ") and satisfies x*Tx = xTx = xTx*, x*x = xx = xx*";
      return v;
    }
    v.perm_bound_exhausted = ps.bound_exhausted;
    v.failed.push_back("C4: no permutation identity of length <= " +
                       std::to_string(opt.perm_bound));
  } else {
    v.failed.push_back("C4: " + show_word(parse_word(c4.failed.substr(0, c4.failed.find(" = ")))) +
                       " = " + show_word(parse_word(c4.failed.substr(c4.failed.find(" = ") + 3))) +
                       " fails at " + show_assignment(c4.counterexample));
  }
  if (is_isomorphic(s, model_a0())) {
    v.tag = FBTag::kKnownA0;
    v.evidence = "isomorphic to (A0,*)";
    return v;
  }
  if (is_isomorphic(s, model_b0())) {
    v.tag = FBTag::kKnownB0;
    v.evidence = "isomorphic to (B0,*)";
    return v;
  }
  v.tag = FBTag::kUnresolved;
  for (const auto& f : v.failed) {
    if (!v.evidence.empty()) v.evidence += "; ";
    v.evidence += f;
  }
  return v;
}

std::vector<ClassifiedClass> classify_census(int n, const ClassifyOptions& opt) {
  EnumerateOptions eo{opt.jobs, opt.cache_dir};
  auto classes = enumerate_involution_semigroups(n, Equivalence::kIso, eo);
  std::map<std::string, std::string> names;
  if (n == 4)
    for (const auto& e : table1_catalog()) names[canonical_key(e.s)] = e.name;
  std::vector<ClassifiedClass> out(classes.size());
  parallel_for(classes.size(), opt.jobs, [&](size_t i) {
    out[i].s = classes[i];
    out[i].verdict = classify(classes[i], opt);
    auto it = names.find(canonical_key(classes[i]));
    if (it != names.end()) out[i].table1_name = it->second;
  });
  return out;
}

std::string classification_json(const std::vector<ClassifiedClass>& cls) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cls) {
    nlohmann::ordered_json j;
    j["canonical_table"] = format_mul(c.s.reduct());
    j["inv"] = format_perm(c.s.inv);
    j["verdict"] = c.verdict.name();
    j["evidence"] = c.verdict.evidence;
    if (c.verdict.perm_bound_exhausted) j["perm_bound_exhausted"] = true;
    if (c.table1_name) j["table1_name"] = *c.table1_name;
    arr.push_back(j);
  }
  return arr.dump();
}

std::optional<Condition> parse_condition(const std::string& s) {
  if (s == "C1" || s == "c1") return Condition::kC1;
  if (s == "C2" || s == "c2") return Condition::kC2;
  if (s == "C3" || s == "c3") return Condition::kC3;
  if (s == "C4" || s == "c4") return Condition::kC4;
  return std::nullopt;
}

std::vector<Hypothesis> check_condition_hypotheses(const InvolutionSemigroup& s,
                                                   Condition c,
                                                   const ClassifyOptions& opt) {
  std::vector<Hypothesis> out;
  Table t = s.reduct();
  auto p = periodicity(t);
  Hypothesis periodic{"periodic", true,
                      "finite, (" + std::to_string(p.m0) + "," +
                          std::to_string(p.k0) + ")-periodic"};
  switch (c) {
    case Condition::kC1: {
      out.push_back(periodic);
      bool comm = is_commutative(t);
      out.push_back({"commutative", comm, comm ? "" : first_noncommuting(t)});
      break;
    }
    case Condition::kC2: {
      auto d = nilpotency_degree(t);
      out.push_back({"nilpotent", d.has_value(),
                     d ? "x1...x" + std::to_string(*d) + " = 0" : "no power of S is {0}"});
      break;
    }
    case Condition::kC3: {
      auto r = check_identity(s, parse_word("xyz"), parse_word("xz"), opt.var_cap);
      out.push_back({"xyz = xz", r.holds, r.holds ? "" : r.counterexample.to_string()});
      break;
    }
    case Condition::kC4: {
      out.push_back(periodic);
      auto ps = find_permutation_identity(s, opt.perm_bound, opt.var_cap);
      out.push_back({"permutative", ps.found.has_value(),
                     ps.found ? ps.found->render()
                              : "none of length <= " + std::to_string(ps.bound) +
                                    (ps.bound_exhausted ? " (bound exhausted)" : "")});
      for (const auto& id : kC4) {
        Word l = parse_word(id.lhs), r = parse_word(id.rhs);
        auto chk = check_identity(s, l, r, opt.var_cap);
        out.push_back({show_word(l) + " = " + show_word(r), chk.holds,
                       chk.holds ? "" : show_assignment(chk.counterexample)});
      }
      break;
    }
  }
  return out;
}

}  // namespace invsg
