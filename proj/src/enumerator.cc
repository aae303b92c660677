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

#include "invsg/enumerator.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "invsg/parallel.h"
#include "json.hpp"

namespace invsg {

const char* equivalence_tag(Equivalence e) {
  return e == Equivalence::kIso ? "iso" : "iso+anti";
}

std::optional<Equivalence> parse_equivalence(const std::string& tag) {
  if (tag == "iso") return Equivalence::kIso;
  if (tag == "iso+anti") return Equivalence::kIsoAnti;
  return std::nullopt;
}

std::string semigroup_key(const Table& t, Equivalence eq) {
  std::string k = canonical_key(t);
  if (eq == Equivalence::kIsoAnti) k = std::min(k, canonical_key(t.transposed()));
  return k;
}

std::string involution_key(const InvolutionSemigroup& s, Equivalence eq) {
  std::string k = canonical_key(s);
  if (eq == Equivalence::kIsoAnti)
    k = std::min(k, canonical_key(with_involution(s.reduct().transposed(), s.inv)));
  return k;
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("order must be between 1 and " +
                                std::to_string(kMaxOrder));
}

class Filler {
 public:
  Filler(int n, std::vector<int> prefix) : n_(n), m_(n * n, -1), prefix_(prefix) {}

  template <typename Emit>
  void run(Emit&& emit) {
    for (size_t c = 0; c < prefix_.size(); ++c) {
      m_[c] = prefix_[c];
      if (!consistent(static_cast<int>(c))) return;
    }
    fill(static_cast<int>(prefix_.size()), emit);
  }

 private:
  int at(int a, int b) const { return m_[a * n_ + b]; }

  // Associativity triples that use cell c and are fully defined.
  bool consistent(int c) const {
    int a = c / n_, b = c % n_, v = m_[c];
    for (int z = 0; z < n_; ++z) {
      int vz = at(v, z), bz = at(b, z);
      if (vz >= 0 && bz >= 0) {
        int r = at(a, bz);
        if (r >= 0 && r != vz) return false;
      }
    }
    for (int x = 0; x < n_; ++x) {
      int xa = at(x, a), xv = at(x, v);
      if (xa >= 0 && xv >= 0) {
        int l = at(xa, b);
        if (l >= 0 && l != xv) return false;
      }
    }
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (at(x, y) == a) {
          int yb = at(y, b);
          if (yb >= 0) {
            int r = at(x, yb);
            if (r >= 0 && r != v) return false;
          }
        }
        if (at(x, y) == b) {
          int ax = at(a, x);
          if (ax >= 0) {
            int l = at(ax, y);
            if (l >= 0 && l != v) return false;
          }
        }
      }
    return true;
  }

  template <typename Emit>
  void fill(int c, Emit& emit) {
    if (c == n_ * n_) {
      Table t;
      t.n = n_;
      t.mul.assign(m_.begin(), m_.end());
      emit(t);
      return;
    }
    int a = c / n_, b = c % n_;
    std::vector<int> order;
    if (a == b) order.push_back(a);
    for (int v = 0; v < n_; ++v)
      if (!(a == b && v == a)) order.push_back(v);
    for (int v : order) {
      m_[c] = v;
      if (consistent(c)) fill(c + 1, emit);
    }
    m_[c] = -1;
  }

  int n_;
  std::vector<int> m_;
  std::vector<int> prefix_;
};

Table table_from_key(const std::string& key) {
  auto pos = key.find("mul=");
  if (pos == std::string::npos) throw std::invalid_argument("bad key " + key);
  std::string digits = key.substr(pos + 4);
  digits = digits.substr(0, digits.find(' '));
  Table t;
  t.n = static_cast<int>(std::lround(std::sqrt(digits.size())));
  if (t.n * t.n != static_cast<int>(digits.size()))
    throw std::invalid_argument("bad key " + key);
  for (char c : digits) t.mul.push_back(static_cast<Element>(c - '1'));
  return t;
}

std::filesystem::path cache_path(const std::string& dir, const std::string& kind,
                                 int n, Equivalence eq) {
  return std::filesystem::path(dir) /
         (kind + "-n" + std::to_string(n) + "-" + equivalence_tag(eq) + ".txt");
}

std::string cache_header(int n, Equivalence eq) {
  return "# census n=" + std::to_string(n) + " equivalence=" + equivalence_tag(eq);
}

std::optional<std::vector<std::string>> read_cache(const std::string& dir,
                                                   const std::string& kind, int n,
                                                   Equivalence eq) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(cache_path(dir, kind, n, eq));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != cache_header(n, eq)) return std::nullopt;
  std::vector<std::string> out;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

void write_cache(const std::string& dir, const std::string& kind, int n,
                 Equivalence eq, const std::vector<std::string>& lines) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream out(cache_path(dir, kind, n, eq));
  out << cache_header(n, eq) << "\n";
  for (const auto& l : lines) out << l << "\n";
}

}  // namespace

std::vector<Table> enumerate_semigroups(int n, Equivalence eq,
                                        const EnumerateOptions& opt) {
  check_order(n);
  std::vector<std::string> keys;
  if (auto cached = read_cache(opt.cache_dir, "semigroups", n, eq)) {
    keys = *cached;
  } else {
    std::vector<std::vector<int>> prefixes;
    int depth = std::min(2, n * n);
    std::vector<int> p(depth, 0);
    for (;;) {
      prefixes.push_back(p);
      int k = depth - 1;
      while (k >= 0 && ++p[k] == n) p[k--] = 0;
      if (k < 0) break;
    }
    std::set<std::string> found;
    std::mutex mu;
    parallel_for(prefixes.size(), opt.jobs, [&](size_t i) {
      std::set<std::string> local;
      Filler(n, prefixes[i]).run([&](const Table& t) {
        local.insert(semigroup_key(t, eq));
      });
      std::lock_guard<std::mutex> lock(mu);
      found.insert(local.begin(), local.end());
    });
    keys.assign(found.begin(), found.end());
    write_cache(opt.cache_dir, "semigroups", n, eq, keys);
  }
  std::vector<Table> out;
  for (const auto& k : keys) out.push_back(table_from_key(k));
  return out;
}

std::vector<InvolutionSemigroup> enumerate_involution_semigroups(
    int n, Equivalence eq, const EnumerateOptions& opt) {
  check_order(n);
  std::vector<std::string> keys;
  if (auto cached = read_cache(opt.cache_dir, "involution", n, eq)) {
    keys = *cached;
  } else {
    auto base = enumerate_semigroups(n, Equivalence::kIso, opt);
    std::set<std::string> found;
    std::mutex mu;
    parallel_for(base.size(), opt.jobs, [&](size_t i) {
      std::set<std::string> local;
      if (involution_obstructions(base[i]).empty())
        for (const auto& inv : involutions_of(base[i]))
          local.insert(involution_key(with_involution(base[i], inv), eq));
      std::lock_guard<std::mutex> lock(mu);
      found.insert(local.begin(), local.end());
    });
    keys.assign(found.begin(), found.end());
    write_cache(opt.cache_dir, "involution", n, eq, keys);
  }
  std::vector<InvolutionSemigroup> out;
  for (const auto& k : keys) out.push_back(parse_table(k));
  return out;
}

CensusReport census(int n, Equivalence eq, const EnumerateOptions& opt) {
  CensusReport r;
  r.n = n;
  r.equivalence = equivalence_tag(eq);
  r.semigroups_up_to_iso = static_cast<long>(
      enumerate_semigroups(n, Equivalence::kIso, opt).size());
  auto anti = enumerate_semigroups(n, Equivalence::kIsoAnti, opt);
  r.semigroups_up_to_iso_antiiso = static_cast<long>(anti.size());
  for (const auto& t : anti)
    if (!involution_obstructions(t).empty() || involutions_of(t).empty())
      ++r.no_involution;
  for (const auto& s : enumerate_involution_semigroups(n, eq, opt)) {
    ++r.involution_semigroups;
    if (s.trivial_involution())
      ++r.trivial_involution;
    else
      ++r.nontrivial_involution;
  }
  return r;
}

std::string CensusReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["equivalence"] = equivalence;
  j["semigroups_up_to_iso"] = semigroups_up_to_iso;
  j["semigroups_up_to_iso_antiiso"] = semigroups_up_to_iso_antiiso;
  j["no_involution"] = no_involution;
  j["involution_semigroups"] = involution_semigroups;
  j["trivial_involution"] = trivial_involution;
  j["nontrivial_involution"] = nontrivial_involution;
  return j.dump();
}

std::string CensusReport::to_text() const {
  std::ostringstream os;
  os << "order " << n << " (involution classes up to " << equivalence << ")\n"
     << "  semigroups up to iso:           " << semigroups_up_to_iso << "\n"
     << "  semigroups up to iso+anti-iso:  " << semigroups_up_to_iso_antiiso << "\n"
     << "  without involution:             " << no_involution << "\n"
     << "  involution semigroups:          " << involution_semigroups << "\n"
     << "    trivial involution:           " << trivial_involution << "\n"
     << "    non-trivial involution:       " << nontrivial_involution << "\n";
  return os.str();
}

Table1Match match_table1(const std::vector<InvolutionSemigroup>& enumerated,
                         const std::vector<CatalogEntry>& catalog) {
  Table1Match m;
  std::map<std::string, bool> enum_keys;
  for (const auto& s : enumerated)
    if (!s.trivial_involution()) enum_keys[canonical_key(s)] = false;
  std::set<std::string> seen;
  for (const auto& e : catalog) {
    std::string k = canonical_key(e.s);
    auto it = enum_keys.find(k);
    if (it == enum_keys.end() || it->second || !validate(e.s).ok) {
      m.unmatched_catalog.push_back(e.name);
      continue;
    }
    it->second = true;
    m.pairs.emplace_back(e.name, k);
  }
  for (const auto& [k, used] : enum_keys)
    if (!used) m.unmatched_enumerated.push_back(k);
  m.ok = m.unmatched_catalog.empty() && m.unmatched_enumerated.empty();
  return m;
}

}  // namespace invsg
