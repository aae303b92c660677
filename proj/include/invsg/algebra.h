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

#ifndef INVSG_ALGEBRA_H_
#define INVSG_ALGEBRA_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsg/word.h"

namespace invsg {

// Elements are stored 0-based; the text format and all reports use 1..n.
using Element = uint8_t;
using Perm = std::vector<Element>;

struct Table {
  int n = 0;
  std::vector<Element> mul;  // row-major, mul[a * n + b] = ab

  Element op(Element a, Element b) const { return mul[a * n + b]; }
  Table transposed() const;
  friend bool operator==(const Table&, const Table&) = default;
};

struct InvolutionSemigroup {
  int n = 0;
  std::vector<Element> mul;
  Perm inv;

  Element op(Element a, Element b) const { return mul[a * n + b]; }
  Table reduct() const { return Table{n, mul}; }
  bool trivial_involution() const;
  friend bool operator==(const InvolutionSemigroup&,
                         const InvolutionSemigroup&) = default;
};

InvolutionSemigroup with_involution(const Table& t, Perm inv);

// "n=4 mul=2212222222321214 inv=1243"
InvolutionSemigroup parse_table(const std::string& line);
InvolutionSemigroup make_table(const std::string& mul_digits,
                               const std::string& inv_digits);
std::string format_table(const InvolutionSemigroup& s);
std::string format_mul(const Table& t);
std::string format_perm(const Perm& p);

class VarCapExceeded : public std::runtime_error {
 public:
  explicit VarCapExceeded(int vars, int cap)
      : std::runtime_error("identity has " + std::to_string(vars) +
                           " variables, above the cap of " +
                           std::to_string(cap)) {}
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  // Failing triple (a, b, c) for associativity, or pair (a, b) for the
  // antimorphism law, 1-based in the message.
  std::vector<int> witness;
};

ValidationReport validate(const InvolutionSemigroup& s);
bool is_associative(const Table& t);

// value[b] = element assigned to base b, or -1.
struct Assignment {
  std::array<int8_t, kAlphabetSize> value;
  Assignment() { value.fill(-1); }
  bool has(uint8_t b) const { return value[b] >= 0; }
  std::string to_string() const;  // "x=4 y=3"
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

Element evaluate(const InvolutionSemigroup& s, const Word& w,
                 const Assignment& a);

constexpr int kDefaultVarCap = 8;

// Exhaustive check over all n^v assignments in lexicographic order (the
// alphabetically first base is the most significant digit). Returns the
// first counterexample, or nullopt when the identity holds.
std::optional<Assignment> satisfies(const InvolutionSemigroup& s,
                                    const Word& lhs, const Word& rhs,
                                    int var_cap = kDefaultVarCap);
bool satisfies_zero(const InvolutionSemigroup& s, const Word& w,
                    int var_cap = kDefaultVarCap);

// Values of w under all assignments of the given bases (lexicographic order,
// first base most significant). Bases of w must be among `bases`.
std::vector<Element> evaluation_table(const InvolutionSemigroup& s,
                                      const Word& w,
                                      const std::vector<uint8_t>& bases);

std::optional<Element> zero_element(const Table& t);
bool is_commutative(const Table& t);

struct PeriodicityProfile {
  int m0 = 1;
  int k0 = 1;
};
PeriodicityProfile periodicity(const Table& t);
std::optional<int> nilpotency_degree(const Table& t);

struct IdentityCheck {
  bool holds = true;
  std::string failed;  // rendered failing identity
  Assignment counterexample;
};

IdentityCheck check_identity(const InvolutionSemigroup& s, const Word& lhs,
                             const Word& rhs, int var_cap = kDefaultVarCap);
bool satisfies_xyz_eq_xz(const InvolutionSemigroup& s);
IdentityCheck check_c4_identities(const InvolutionSemigroup& s);
bool satisfies_C4_identities(const InvolutionSemigroup& s);

struct PermutationIdentity {
  int m = 0;
  std::vector<int> perm;  // x_1..x_m -> x_{perm[0]+1} ... x_{perm[m-1]+1}
  std::string render() const;
};

constexpr int kDefaultPermBound = 6;

struct PermutationSearch {
  std::optional<PermutationIdentity> found;
  int bound = kDefaultPermBound;
  // True when nothing was found and the search was cut off by the bound.
  bool bound_exhausted = false;
};

PermutationSearch find_permutation_identity(const InvolutionSemigroup& s,
                                            int max_len = kDefaultPermBound,
                                            int var_cap = kDefaultVarCap);

std::vector<Perm> involutions_of(const Table& t);
std::vector<std::string> involution_obstructions(const Table& t);

Perm identity_perm(int n);
InvolutionSemigroup relabel(const InvolutionSemigroup& s, const Perm& p);
Table relabel(const Table& t, const Perm& p);
std::optional<Perm> is_isomorphic(const InvolutionSemigroup& a,
                                  const InvolutionSemigroup& b);
std::string canonical_key(const InvolutionSemigroup& s);
std::string canonical_key(const Table& t);
InvolutionSemigroup canonical_form(const InvolutionSemigroup& s);
Table canonical_form(const Table& t);
bool is_homomorphism(const InvolutionSemigroup& s,
                     const InvolutionSemigroup& t, const Perm& map);

}  // namespace invsg

#endif  // INVSG_ALGEBRA_H_
