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

#include "invsg/basis.h"
#include "invsg/catalog.h"

namespace invsg {

const char* system_name(System s) { return s == System::kA0 ? "A0" : "B0"; }

const InvolutionSemigroup& model_of(System s) {
  return s == System::kA0 ? model_a0() : model_b0();
}

const RuleSystem& rules_of(System s) {
  return s == System::kA0 ? system_a0() : system_b0();
}

const char* certificate_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::kBothBipartite:
      return "BothBipartite";
    case CertificateKind::kMixedBipartiteMismatch:
      return "MixedBipartiteMismatch";
    case CertificateKind::kBothZero:
      return "BothZero";
    case CertificateKind::kZeroNonzeroMismatch:
      return "ZeroNonzeroMismatch";
    case CertificateKind::kCanonicalMatch:
      return "CanonicalMatch";
    case CertificateKind::kCanonicalMismatch:
      return "CanonicalMismatch";
  }
  return "?";
}

namespace {

Normalized normalize_in(System sys, const Word& w) {
  return sys == System::kA0 ? normalize_a(w) : normalize_b(w);
}

std::optional<ZeroWitness> zero_in(System sys, const Word& w) {
  return sys == System::kA0 ? a_zero_witness(w) : b_zero_witness(w);
}

std::string content_key(const Word& w) {
  std::set<Letter> c(w.begin(), w.end());
  return render(Word(c.begin(), c.end()), false);
}

// Sl3 elements 0, e, f lifted to their preimages 2, 3, 4 (0-based 1, 2, 3).
Assignment lift_from_sl3(const Assignment& a) {
  Assignment out;
  for (int b = 0; b < kAlphabetSize; ++b)
    if (a.has(b)) out.value[b] = static_cast<int8_t>(a.value[b] + 1);
  return out;
}

}  // namespace

Word canonical_mixed(System sys, const Word& w) {
  StandardForm f = normalize_in(sys, w).form;
  StandardForm flipped = f;
  flipped.middle = {Segment{false, star_word(f.middle_word())}};
  StandardForm g = normalize_in(sys, flipped.word()).form;
  Word a = f.word(), b = g.word();
  return render(b, false) < render(a, false) ? b : a;
}

std::string decision_key(System sys, const Word& w) {
  if (w.empty()) throw std::invalid_argument("decision_key of the empty word");
  if (!is_mixed(w)) {
    std::string key = "B:" + content_key(w) + ":";
    for (Element e :
         evaluation_table(model_of(sys), plain_projection(w), bases_of(w)))
      key += static_cast<char>('1' + e);
    return key;
  }
  if (zero_in(sys, w)) return "Z";
  return "M:" + render(canonical_mixed(sys, w), false);
}

Decision decide(System sys, const Word& u, const Word& v, int var_cap) {
  if (u.empty() || v.empty())
    throw std::invalid_argument("decide needs nonempty words");
  const InvolutionSemigroup& model = model_of(sys);
  auto oracle = satisfies(model, u, v, var_cap);
  Decision d;
  bool mu = is_mixed(u), mv = is_mixed(v);
  Certificate& c = d.certificate;
  if (mu != mv) {
    d.holds = false;
    c.kind = CertificateKind::kMixedBipartiteMismatch;
    if (auto w = satisfies(model_sl3(), u, v, var_cap)) {
      c.counterexample = lift_from_sl3(*w);
      c.detail = "separated in Sl3 by " + w->to_string() + ", lifted";
    } else {
      c.counterexample = oracle;
      c.detail = "Sl3 does not separate; model counterexample";
    }
  } else if (!mu) {
    c.kind = CertificateKind::kBothBipartite;
    bool same_content = content_key(u) == content_key(v);
    auto plain = satisfies(model, plain_projection(u), plain_projection(v), var_cap);
    d.holds = same_content && !plain;
    if (!same_content)
      c.detail = "contents differ: {" + content_key(u) + "} vs {" +
                 content_key(v) + "}";
    else if (plain)
      c.detail = "plain projections differ at " + plain->to_string();
    else
      c.detail = "equal contents, plain projections equivalent";
    if (!d.holds) c.counterexample = oracle;
  } else {
    auto zu = zero_in(sys, u), zv = zero_in(sys, v);
    if (zu && zv) {
      d.holds = true;
      c.kind = CertificateKind::kBothZero;
      c.detail = "u: " + zu->describe() + "; v: " + zv->describe();
    } else if (zu || zv) {
      d.holds = false;
      c.kind = CertificateKind::kZeroNonzeroMismatch;
      c.detail = std::string(zu ? "u" : "v") + " is zero: " +
                 (zu ? zu : zv)->describe();
      c.counterexample = oracle;
    } else {
      Word cu = canonical_mixed(sys, u), cv = canonical_mixed(sys, v);
      c.canonical_u = render(cu);
      c.canonical_v = render(cv);
      d.holds = cu == cv;
      c.kind = d.holds ? CertificateKind::kCanonicalMatch
                       : CertificateKind::kCanonicalMismatch;
      c.detail = d.holds ? "both sides have canonical form " + *c.canonical_u
                         : "canonical forms " + *c.canonical_u + " and " +
                               *c.canonical_v + " differ";
      if (!d.holds) c.counterexample = oracle;
    }
  }
  if (d.holds == oracle.has_value())
    throw InternalError(std::string("decide(") + system_name(sys) + ", " +
                        render(u) + ", " + render(v) + ") gives " +
                        (d.holds ? "holds" : "fails") + " via " +
                        certificate_name(c.kind) + " but the model disagrees");
  if (!d.holds && !c.counterexample)
    throw InternalError("no counterexample for a failing identity");
  return d;
}

}  // namespace invsg
