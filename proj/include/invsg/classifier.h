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

#ifndef INVSG_CLASSIFIER_H_
#define INVSG_CLASSIFIER_H_

#include <optional>
#include <string>
#include <vector>

#include "invsg/algebra.h"
#include "invsg/enumerator.h"

namespace invsg {

enum class FBTag { kC0, kC1, kC2, kC3, kC4, kKnownA0, kKnownB0, kUnresolved };

struct FBVerdict {
  FBTag tag = FBTag::kUnresolved;
  int degree = 0;                                // C2
  std::optional<PermutationIdentity> permutation;  // C4
  bool perm_bound_exhausted = false;             // Unresolved
  std::vector<std::string> failed;               // Unresolved
  std::string evidence;

  // "C0-trivial-involution", "C1", "C2(3)", "C3", "C4", "KnownBasis(A0)",
  // "KnownBasis(B0)" or "Unresolved".
  std::string name() const;
  // Label as printed in Table 1: C1..C4, A0, B0.
  std::string label() const;
};

struct ClassifyOptions {
  int perm_bound = kDefaultPermBound;
  int var_cap = kDefaultVarCap;
  int jobs = 0;
  std::string cache_dir;
};

FBVerdict classify(const InvolutionSemigroup& s, const ClassifyOptions& opt = {});

struct ClassifiedClass {
  InvolutionSemigroup s;
  FBVerdict verdict;
  std::optional<std::string> table1_name;
};

std::vector<ClassifiedClass> classify_census(int n,
                                             const ClassifyOptions& opt = {});
std::string classification_json(const std::vector<ClassifiedClass>& cls);

enum class Condition { kC1, kC2, kC3, kC4 };
std::optional<Condition> parse_condition(const std::string& s);

struct Hypothesis {
  std::string name;
  bool pass = false;
  std::string witness;  // witness on success, counterexample on failure
};

std::vector<Hypothesis> check_condition_hypotheses(const InvolutionSemigroup& s,
                                                   Condition c,
                                                   const ClassifyOptions& opt = {});

}  // namespace invsg

#endif  // INVSG_CLASSIFIER_H_
