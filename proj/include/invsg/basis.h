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

#ifndef INVSG_BASIS_H_
#define INVSG_BASIS_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invsg/algebra.h"
#include "invsg/word.h"

namespace invsg {

// Rule variables are letters too; the context variable T is the base 't'
// and is rendered as "T".
constexpr uint8_t kVarT = 't' - 'a';

struct IdentityRule {
  std::string tag;
  Word lhs;
  Word rhs;        // empty for zero rules
  bool zero_rule = false;

  std::string render() const;
};

struct RuleSystem {
  std::string name;
  // Closure: every listed rule plus its star-mirror (tag suffixed by "*")
  // when the mirror differs. Orientation flips are steps with dir = "<-".
  std::vector<IdentityRule> rules;

  const IdentityRule* find(const std::string& tag) const;
};

IdentityRule make_rule(const std::string& tag, const std::string& lhs,
                       const std::string& rhs);
IdentityRule make_zero_rule(const std::string& tag, const std::string& lhs);
RuleSystem close_system(const std::string& name,
                        const std::vector<IdentityRule>& rules);

std::vector<IdentityRule> basis_a0_rules();
std::vector<IdentityRule> derived_rules_a0();
std::vector<IdentityRule> basis_b0_rules();
std::vector<IdentityRule> derived_rules_b0();

RuleSystem basis_a0();
RuleSystem basis_b0();
// Closed systems used for derivation traces: basis plus derived rules.
const RuleSystem& system_a0();
const RuleSystem& system_b0();

using Substitution = std::map<uint8_t, Word>;

struct DerivationStep {
  std::string rule;
  bool forward = true;
  size_t pos = 0;
  Substitution subst;
};

struct DerivationTrace {
  Word start;
  Word end;
  std::vector<DerivationStep> steps;
};

class RuleMatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Word instantiate(const Word& pattern, const Substitution& subst);
Word apply_rule(const Word& w, const IdentityRule& rule, bool forward,
                size_t pos, const Substitution& subst);

struct TraceCheck {
  bool ok = true;
  size_t failed_step = 0;  // 1-based; 0 when the endpoints are at fault
  std::string message;
};

TraceCheck verify_trace(const DerivationTrace& trace, const RuleSystem& rules,
                        const InvolutionSemigroup* model = nullptr);

std::string trace_to_json(const DerivationTrace& trace);
DerivationTrace trace_from_json(const std::string& text);

// Pattern instance witnessing a zero word: which of xx*x, xx*yy*, xyy*x,
// the instantiated letters, and the matched positions.
struct PatternHit {
  std::string pattern;
  Word instance;
  std::vector<size_t> positions;
};

std::optional<PatternHit> zero_pattern_scan(const Word& w);

struct ZeroWitness {
  // "pattern", "factor" (xx* or x*x, B only) or "empty-middle" (B only).
  std::string reason;
  std::optional<PatternHit> hit;
  Word stage;              // word on which the witness is read off
  DerivationTrace trace;   // from the input to `stage`
  std::string describe() const;
};

std::optional<ZeroWitness> a_zero_witness(const Word& w);
std::optional<ZeroWitness> b_zero_witness(const Word& w);

struct Segment {
  bool block = false;  // q_i when true, p_i otherwise
  Word word;
};

struct StandardForm {
  Word prefix;
  Letter pivot;
  std::vector<Segment> middle;  // alternating p/q segments, p's may be empty

  Word middle_word() const;
  Word word() const;
};

std::optional<StandardForm> parse_a_standard(const Word& w);
std::optional<StandardForm> parse_b_standard(const Word& w);
bool is_a_standard(const Word& w);
bool is_b_standard(const Word& w);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Normalized {
  StandardForm form;
  DerivationTrace trace;
};

Normalized normalize_a(const Word& w);
Normalized normalize_b(const Word& w);

enum class System { kA0, kB0 };
const char* system_name(System s);
const InvolutionSemigroup& model_of(System s);
const RuleSystem& rules_of(System s);

Word canonical_mixed(System sys, const Word& w);

// Equal keys <=> the model satisfies u = v. Mixed zero words share one key;
// bipartite words are keyed by content plus the model's value table on the
// plain projection.
std::string decision_key(System sys, const Word& w);

enum class CertificateKind {
  kBothBipartite,
  kMixedBipartiteMismatch,
  kBothZero,
  kZeroNonzeroMismatch,
  kCanonicalMatch,
  kCanonicalMismatch,
};
const char* certificate_name(CertificateKind k);

struct Certificate {
  CertificateKind kind;
  std::string detail;
  std::optional<Assignment> counterexample;
  std::optional<std::string> canonical_u, canonical_v;
};

struct Decision {
  bool holds = false;
  Certificate certificate;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Decision decide(System sys, const Word& u, const Word& v,
                int var_cap = kDefaultVarCap);

// Bounded breadth-first search over single rule applications with
// letter-sized substitutions; a diagnostic, not a decision procedure.
std::optional<DerivationTrace> bounded_search(const RuleSystem& rules,
                                              const Word& from, const Word& to,
                                              int depth);

}  // namespace invsg

#endif  // INVSG_BASIS_H_
