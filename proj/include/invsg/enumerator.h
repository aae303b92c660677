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

#ifndef INVSG_ENUMERATOR_H_
#define INVSG_ENUMERATOR_H_

#include <optional>
#include <string>
#include <vector>

#include "invsg/algebra.h"
#include "invsg/catalog.h"

namespace invsg {

// kIsoAnti identifies a semigroup with its transposed table; for involution
// semigroups it identifies (S, *) with (S^op, *).
enum class Equivalence { kIso, kIsoAnti };
const char* equivalence_tag(Equivalence e);  // "iso" or "iso+anti"
std::optional<Equivalence> parse_equivalence(const std::string& tag);

constexpr int kMaxOrder = 5;

struct EnumerateOptions {
  int jobs = 0;
  std::string cache_dir;  // empty: no cache
};

// Canonical representatives, sorted by their table text.
std::vector<Table> enumerate_semigroups(int n, Equivalence eq,
                                        const EnumerateOptions& opt = {});
std::vector<InvolutionSemigroup> enumerate_involution_semigroups(
    int n, Equivalence eq = Equivalence::kIso, const EnumerateOptions& opt = {});

std::string semigroup_key(const Table& t, Equivalence eq);
std::string involution_key(const InvolutionSemigroup& s, Equivalence eq);

struct CensusReport {
  int n = 0;
  std::string equivalence;  // for the involution counts
  long semigroups_up_to_iso = 0;
  long semigroups_up_to_iso_antiiso = 0;
  long no_involution = 0;
  long involution_semigroups = 0;
  long trivial_involution = 0;
  long nontrivial_involution = 0;

  std::string to_json() const;
  std::string to_text() const;
};

CensusReport census(int n, Equivalence eq = Equivalence::kIso,
                    const EnumerateOptions& opt = {});

struct Table1Match {
  bool ok = false;
  std::vector<std::pair<std::string, std::string>> pairs;  // name, canonical
  std::vector<std::string> unmatched_catalog;
  std::vector<std::string> unmatched_enumerated;
};

Table1Match match_table1(const std::vector<InvolutionSemigroup>& enumerated,
                         const std::vector<CatalogEntry>& catalog =
                             table1_catalog());

}  // namespace invsg

#endif  // INVSG_ENUMERATOR_H_
