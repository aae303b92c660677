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

#ifndef INVSG_CATALOG_H_
#define INVSG_CATALOG_H_

#include <optional>
#include <string>
#include <vector>

#include "invsg/algebra.h"

namespace invsg {

struct CatalogEntry {
  std::string name;   // "A1" .. "C7"
  std::string label;  // "C1".."C4", "A0" or "B0"
  InvolutionSemigroup s;
};

// The 25 order-4 involution semigroups with non-trivial involution, as
// printed, in row order A1..A9, B1..B9, C1..C7.
const std::vector<CatalogEntry>& table1_catalog();
const CatalogEntry* find_table1(const std::string& name);

const InvolutionSemigroup& model_a0();
const InvolutionSemigroup& model_b0();
const InvolutionSemigroup& model_sl3();

// a0, b0, sl3 or a Table 1 name, case-insensitive.
std::optional<InvolutionSemigroup> named_model(const std::string& name);

}  // namespace invsg

#endif  // INVSG_CATALOG_H_
