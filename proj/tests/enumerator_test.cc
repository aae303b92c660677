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

#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "invsg/algebra.h"
#include "invsg/catalog.h"
#include "invsg/enumerator.h"

namespace invsg {
namespace {

// Every n^(n*n) table, filtered and deduplicated by brute force.
struct BruteCensus {
  std::set<std::string> semigroups;
  std::set<std::string> semigroups_anti;
  std::set<std::string> involution;
  std::set<std::string> trivial;
};

BruteCensus brute_census(int n) {
  BruteCensus c;
  int cells = n * n;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  std::vector<Perm> perms;
  Perm p = identity_perm(n);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (long code = 0; code < total; ++code) {
    Table t{n, std::vector<Element>(cells)};
    long x = code;
    for (int i = 0; i < cells; ++i) {
      t.mul[i] = static_cast<Element>(x % n);
      x /= n;
    }
    if (!is_associative(t)) continue;
    std::string k = canonical_key(t);
    c.semigroups.insert(k);
    c.semigroups_anti.insert(std::min(k, canonical_key(t.transposed())));
    for (const auto& q : perms) {
      InvolutionSemigroup s = with_involution(t, q);
      if (!validate(s).ok) continue;
      c.involution.insert(canonical_key(s));
      if (s.trivial_involution()) c.trivial.insert(canonical_key(s));
    }
  }
  return c;
}

}  // namespace

TEST_CASE("census counts") {
  auto r1 = census(1);
  CHECK(r1.semigroups_up_to_iso == 1);
  CHECK(r1.involution_semigroups == 1);
  auto r2 = census(2);
  CHECK(r2.semigroups_up_to_iso == 5);
  CHECK(r2.semigroups_up_to_iso_antiiso == 4);
  CHECK(r2.no_involution == 1);
  CHECK(r2.involution_semigroups == 3);
  auto r3 = census(3);
  CHECK(r3.semigroups_up_to_iso == 24);
  CHECK(r3.semigroups_up_to_iso_antiiso == 18);
  CHECK(r3.involution_semigroups == 15);
  CHECK(r3.nontrivial_involution == 3);
  auto r4 = census(4);
  CHECK(r4.semigroups_up_to_iso == 188);
  CHECK(r4.semigroups_up_to_iso_antiiso == 126);
  CHECK(r4.no_involution == 62);
  CHECK(r4.involution_semigroups == 83);
  CHECK(r4.trivial_involution == 58);
  CHECK(r4.nontrivial_involution == 25);
  auto r4a = census(4, Equivalence::kIsoAnti);
  CHECK(r4a.involution_semigroups == 83);
  CHECK(r4a.nontrivial_involution == 25);
}

TEST_CASE("census agrees with exhaustive table scan") {
  for (int n = 1; n <= 3; ++n) {
    auto b = brute_census(n);
    auto r = census(n);
    CHECK(r.semigroups_up_to_iso == static_cast<long>(b.semigroups.size()));
    CHECK(r.semigroups_up_to_iso_antiiso ==
          static_cast<long>(b.semigroups_anti.size()));
    CHECK(r.involution_semigroups == static_cast<long>(b.involution.size()));
    CHECK(r.trivial_involution == static_cast<long>(b.trivial.size()));
    std::set<std::string> got;
    for (const auto& s : enumerate_involution_semigroups(n))
      got.insert(canonical_key(s));
    CHECK(got == b.involution);
  }
}

TEST_CASE("counting invariants") {
  for (int n = 1; n <= 4; ++n) {
    auto r = census(n);
    CHECK(r.trivial_involution + r.nontrivial_involution ==
          r.involution_semigroups);
    // Semigroups without involution are counted up to iso and anti-iso.
    long with_inv = 0;
    for (const auto& t : enumerate_semigroups(n, Equivalence::kIsoAnti))
      with_inv += !involutions_of(t).empty();
    CHECK(with_inv + r.no_involution == r.semigroups_up_to_iso_antiiso);
    long orbits = 0;
    for (const auto& t : enumerate_semigroups(n, Equivalence::kIso)) {
      std::set<std::string> keys;
      for (const auto& p : involutions_of(t))
        keys.insert(canonical_key(with_involution(t, p)));
      orbits += static_cast<long>(keys.size());
    }
    CHECK(orbits == r.involution_semigroups);
    // A trivial involution exists exactly on commutative semigroups.
    long comm = 0;
    for (const auto& t : enumerate_semigroups(n, Equivalence::kIso))
      comm += is_commutative(t);
    CHECK(comm == r.trivial_involution);
  }
}

TEST_CASE("enumeration is deterministic across job counts") {
  EnumerateOptions one{1, ""}, many{4, ""};
  auto a = enumerate_involution_semigroups(4, Equivalence::kIso, one);
  auto b = enumerate_involution_semigroups(4, Equivalence::kIso, many);
  CHECK(a == b);
  CHECK(census(4, Equivalence::kIso, one).to_json() ==
        census(4, Equivalence::kIso, many).to_json());
}

TEST_CASE("cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "invsg_enum_cache_test";
  std::filesystem::remove_all(dir);
  EnumerateOptions opt{1, dir.string()};
  auto first = enumerate_involution_semigroups(3, Equivalence::kIso, opt);
  CHECK(std::filesystem::exists(dir / "involution-n3-iso.txt"));
  CHECK(std::filesystem::exists(dir / "semigroups-n3-iso.txt"));
  auto second = enumerate_involution_semigroups(3, Equivalence::kIso, opt);
  CHECK(first == second);
  {
    std::ofstream out(dir / "involution-n3-iso.txt");
    out << "# census n=2 equivalence=iso\n";
  }
  auto third = enumerate_involution_semigroups(3, Equivalence::kIso, opt);
  CHECK(first == third);
  std::filesystem::remove_all(dir);
}

TEST_CASE("census output formats") {
  auto r = census(2);
  CHECK(r.to_json().find("\"involution_semigroups\":3") != std::string::npos);
  CHECK_FALSE(r.to_text().empty());
  CHECK(parse_equivalence("iso") == Equivalence::kIso);
  CHECK(parse_equivalence("iso+anti") == Equivalence::kIsoAnti);
  CHECK_FALSE(parse_equivalence("anti"));
}

TEST_CASE("Table 1 matches the order-4 census") {
  auto all = enumerate_involution_semigroups(4);
  auto m = match_table1(all);
  CHECK(m.ok);
  CHECK(m.pairs.size() == 25);
  CHECK(m.unmatched_catalog.empty());
  CHECK(m.unmatched_enumerated.empty());
}

TEST_CASE("corrupted catalog is rejected") {
  auto all = enumerate_involution_semigroups(4);
  auto cat = table1_catalog();
  auto& s = cat[0].s;
  s.mul[0] = static_cast<Element>((s.mul[0] + 1) % s.n);
  auto m = match_table1(all, cat);
  CHECK_FALSE(m.ok);
  auto dropped = table1_catalog();
  dropped.pop_back();
  auto m2 = match_table1(all, dropped);
  CHECK_FALSE(m2.ok);
  CHECK(m2.unmatched_enumerated.size() == 1);
}

}  // namespace invsg
