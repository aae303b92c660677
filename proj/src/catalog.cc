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

#include "invsg/catalog.h"

#include <algorithm>
#include <cctype>

namespace invsg {

namespace {

struct Raw {
  const char* name;
  const char* mul;
  const char* inv;
  const char* label;
};

constexpr Raw kTable1[] = {
    {"A1", "1111121111311114", "1243", "C1"},
    {"A2", "1111121211331234", "1324", "C1"},
    {"A3", "1111122212321224", "1243", "C1"},
    {"A4", "1133224411332244", "4231", "C3"},
    {"A5", "2111122212221222", "1243", "C1"},
    {"A6", "2111122212321224", "1243", "C1"},
    {"A7", "2122121121222122", "1243", "C1"},
    {"A8", "2143123443123421", "1243", "C1"},
    {"A9", "2143123443213412", "1243", "C1"},
    {"B1", "2212222212342242", "4231", "C1"},
    {"B2", "2212222222342222", "4231", "C4"},
    {"B3", "2222222222112211", "1243", "C1"},
    {"B4", "2222222222112221", "1243", "C2"},
    {"B5", "2222222222122221", "1243", "C1"},
    {"B6", "2222222222212212", "1243", "C1"},
    {"B7", "2222222222212222", "1243", "C2"},
    {"B8", "2222222222222222", "3214", "C1"},
    {"B9", "2222222222222224", "3214", "C1"},
    {"C1", "2222222222322224", "1243", "C1"},
    {"C2", "2224222422244444", "3214", "C1"},
    {"C3", "2234223433424423", "1243", "C1"},
    {"C4", "2311312212331234", "2134", "C1"},
    {"C5", "2314312412344444", "2134", "C1"},
    {"C6", "2212222222321214", "1243", "A0"},
    {"C7", "2212222222321224", "1243", "B0"},
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

const std::vector<CatalogEntry>& table1_catalog() {
  static const std::vector<CatalogEntry> cat = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : kTable1)
      out.push_back(CatalogEntry{r.name, r.label, make_table(r.mul, r.inv)});
    return out;
  }();
  return cat;
}

const CatalogEntry* find_table1(const std::string& name) {
  for (const auto& e : table1_catalog())
    if (lower(e.name) == lower(name)) return &e;
  return nullptr;
}

const InvolutionSemigroup& model_a0() {
  static const InvolutionSemigroup s = make_table("2212222222321214", "1243");
  return s;
}

const InvolutionSemigroup& model_b0() {
  static const InvolutionSemigroup s = make_table("2212222222321224", "1243");
  return s;
}

const InvolutionSemigroup& model_sl3() {
  static const InvolutionSemigroup s = make_table("111121113", "132");
  return s;
}

std::optional<InvolutionSemigroup> named_model(const std::string& name) {
  std::string n = lower(name);
  if (n == "a0") return model_a0();
  if (n == "b0") return model_b0();
  if (n == "sl3") return model_sl3();
  if (const auto* e = find_table1(n)) return e->s;
  return std::nullopt;
}

}  // namespace invsg
