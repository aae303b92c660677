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

#include "invsg/algebra.h"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace invsg {

Table Table::transposed() const {
  Table t{n, mul};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.mul[a * n + b] = mul[b * n + a];
  return t;
}

bool InvolutionSemigroup::trivial_involution() const {
  for (int a = 0; a < n; ++a)
    if (inv[a] != a) return false;
  return true;
}

InvolutionSemigroup with_involution(const Table& t, Perm inv) {
  return InvolutionSemigroup{t.n, t.mul, std::move(inv)};
}

namespace {

std::vector<Element> parse_digits(const std::string& s, int n,
                                  const char* what) {
  std::vector<Element> out;
  for (char c : s) {
    if (c < '1' || c > '9' || c - '0' > n)
      throw std::invalid_argument(std::string(what) + ": entry '" + c +
                                  "' out of range 1.." + std::to_string(n));
    out.push_back(static_cast<Element>(c - '1'));
  }
  return out;
}

int order_from_mul(const std::string& mul) {
  int n = 1;
  while (n * n < static_cast<int>(mul.size())) ++n;
  if (n * n != static_cast<int>(mul.size()) || n > 9)
    throw std::invalid_argument("multiplication table must have k*k digits, "
                                "k <= 9");
  return n;
}

}  // namespace

InvolutionSemigroup make_table(const std::string& mul_digits,
                               const std::string& inv_digits) {
  int n = order_from_mul(mul_digits);
  if (static_cast<int>(inv_digits.size()) != n)
    throw std::invalid_argument("involution must have " + std::to_string(n) +
                                " digits");
  InvolutionSemigroup s;
  s.n = n;
  s.mul = parse_digits(mul_digits, n, "mul");
  s.inv = parse_digits(inv_digits, n, "inv");
  return s;
}

InvolutionSemigroup parse_table(const std::string& line) {
  static const std::regex re(
      R"(^\s*n=([1-9])\s+mul=([1-9]+)\s+inv=([1-9]+)\s*$)");
  std::smatch m;
  if (!std::regex_match(line, m, re))
    throw std::invalid_argument("malformed table line: " + line);
  auto s = make_table(m[2], m[3]);
  if (s.n != std::stoi(m[1]))
    throw std::invalid_argument("declared order does not match table size");
  return s;
}

std::string format_mul(const Table& t) {
  std::string s;
  for (auto e : t.mul) s += static_cast<char>('1' + e);
  return s;
}

std::string format_perm(const Perm& p) {
  std::string s;
  for (auto e : p) s += static_cast<char>('1' + e);
  return s;
}

std::string format_table(const InvolutionSemigroup& s) {
  return "n=" + std::to_string(s.n) + " mul=" + format_mul(s.reduct()) +
         " inv=" + format_perm(s.inv);
}

bool is_associative(const Table& t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      for (int c = 0; c < t.n; ++c)
        if (t.op(t.op(a, b), c) != t.op(a, t.op(b, c))) return false;
  return true;
}

ValidationReport validate(const InvolutionSemigroup& s) {
  ValidationReport r;
  auto fail = [&r](std::string msg, std::vector<int> w) {
    r.ok = false;
    r.message = std::move(msg);
    r.witness = std::move(w);
    return r;
  };
  if (s.n < 1 || static_cast<int>(s.mul.size()) != s.n * s.n ||
      static_cast<int>(s.inv.size()) != s.n)
    return fail("table dimensions do not match order", {});
  for (auto e : s.mul)
    if (e >= s.n) return fail("multiplication entry out of range", {});
  for (auto e : s.inv)
    if (e >= s.n) return fail("involution entry out of range", {});
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      for (int c = 0; c < s.n; ++c)
        if (s.op(s.op(a, b), c) != s.op(a, s.op(b, c)))
          return fail("associativity fails at (" + std::to_string(a + 1) +
                          "," + std::to_string(b + 1) + "," +
                          std::to_string(c + 1) + ")",
                      {a + 1, b + 1, c + 1});
  for (int a = 0; a < s.n; ++a)
    if (s.inv[s.inv[a]] != a)
      return fail("unary map is not an involution at " + std::to_string(a + 1),
                  {a + 1});
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (s.inv[s.op(a, b)] != s.op(s.inv[b], s.inv[a]))
        return fail("antimorphism law fails at (" + std::to_string(a + 1) +
                        "," + std::to_string(b + 1) + ")",
                    {a + 1, b + 1});
  r.message = "valid";
  return r;
}

std::string Assignment::to_string() const {
  std::string s;
  for (int b = 0; b < kAlphabetSize; ++b) {
    if (value[b] < 0) continue;
    if (!s.empty()) s += ' ';
    s += static_cast<char>('a' + b);
    s += '=';
    s += std::to_string(value[b] + 1);
  }
  return s;
}

Element evaluate(const InvolutionSemigroup& s, const Word& w,
                 const Assignment& a) {
  if (w.empty()) throw std::invalid_argument("cannot evaluate the empty word");
  int acc = -1;
  for (auto l : w) {
    if (!a.has(l.base))
      throw std::invalid_argument(std::string("unassigned base symbol ") +
                                  l.symbol());
    Element v = static_cast<Element>(a.value[l.base]);
    if (l.star) v = s.inv[v];
    acc = acc < 0 ? v : s.op(static_cast<Element>(acc), v);
  }
  return static_cast<Element>(acc);
}

namespace {

// A word compiled against a variable list: (variable index, starred).
struct Compiled {
  std::vector<std::pair<int, bool>> letters;
};

Compiled compile(const Word& w, const std::vector<uint8_t>& bases) {
  Compiled c;
  for (auto l : w) {
    auto it = std::lower_bound(bases.begin(), bases.end(), l.base);
    if (it == bases.end() || *it != l.base)
      throw std::invalid_argument("word uses a base outside the variable set");
    c.letters.emplace_back(static_cast<int>(it - bases.begin()), l.star);
  }
  return c;
}

Element run(const InvolutionSemigroup& s, const Compiled& c,
            const std::vector<Element>& vals) {
  int acc = -1;
  for (auto [v, st] : c.letters) {
    Element e = st ? s.inv[vals[v]] : vals[v];
    acc = acc < 0 ? e : s.mul[acc * s.n + e];
  }
  return static_cast<Element>(acc);
}

std::vector<uint8_t> union_bases(const Word& a, const Word& b) {
  std::vector<uint8_t> x = bases_of(a), y = bases_of(b), out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                 std::back_inserter(out));
  return out;
}

// Advances an odometer (last digit fastest); false after the final state.
bool advance(std::vector<Element>& vals, int n) {
  for (int i = static_cast<int>(vals.size()) - 1; i >= 0; --i) {
    if (++vals[i] < n) return true;
    vals[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<Assignment> satisfies(const InvolutionSemigroup& s,
                                    const Word& lhs, const Word& rhs,
                                    int var_cap) {
  if (lhs.empty() || rhs.empty())
    throw std::invalid_argument("identities need nonempty sides");
  auto bases = union_bases(lhs, rhs);
  if (static_cast<int>(bases.size()) > var_cap)
    throw VarCapExceeded(static_cast<int>(bases.size()), var_cap);
  auto cl = compile(lhs, bases), cr = compile(rhs, bases);
  std::vector<Element> vals(bases.size(), 0);
  do {
    if (run(s, cl, vals) != run(s, cr, vals)) {
      Assignment a;
      for (size_t i = 0; i < bases.size(); ++i)
        a.value[bases[i]] = static_cast<int8_t>(vals[i]);
      return a;
    }
  } while (advance(vals, s.n));
  return std::nullopt;
}

std::vector<Element> evaluation_table(const InvolutionSemigroup& s,
                                      const Word& w,
                                      const std::vector<uint8_t>& bases) {
  auto c = compile(w, bases);
  std::vector<Element> out;
  std::vector<Element> vals(bases.size(), 0);
  do {
    out.push_back(run(s, c, vals));
  } while (advance(vals, s.n));
  return out;
}

bool satisfies_zero(const InvolutionSemigroup& s, const Word& w, int var_cap) {
  if (w.empty()) throw std::invalid_argument("zero test needs a nonempty word");
  auto bases = bases_of(w);
  int fresh = 0;
  while (fresh < kAlphabetSize &&
         std::binary_search(bases.begin(), bases.end(), fresh))
    ++fresh;
  if (fresh == kAlphabetSize)
    throw std::invalid_argument("no fresh letter available");
  Word x{Letter{static_cast<uint8_t>(fresh), false}};
  bool holds = !satisfies(s, concat({w, x}), w, var_cap) &&
               !satisfies(s, concat({x, w}), w, var_cap);
  if (auto z = zero_element(s.reduct())) {
    auto vals = evaluation_table(s, w, bases);
    bool all_zero = std::all_of(vals.begin(), vals.end(),
                                [&](Element e) { return e == *z; });
    if (all_zero != holds)
      throw std::logic_error("zero semantics disagree on " + render(w));
  }
  return holds;
}

std::optional<Element> zero_element(const Table& t) {
  for (int z = 0; z < t.n; ++z) {
    bool ok = true;
    for (int a = 0; a < t.n && ok; ++a)
      ok = t.op(z, a) == z && t.op(a, z) == z;
    if (ok) return static_cast<Element>(z);
  }
  return std::nullopt;
}

bool is_commutative(const Table& t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = a + 1; b < t.n; ++b)
      if (t.op(a, b) != t.op(b, a)) return false;
  return true;
}

namespace {

// Index and period of the monogenic subsemigroup generated by a.
std::pair<int, int> index_period(const Table& t, Element a) {
  std::vector<int> seen(t.n, 0);
  Element p = a;
  for (int k = 1;; ++k) {
    if (seen[p]) return {seen[p], k - seen[p]};
    seen[p] = k;
    p = t.op(p, a);
  }
}

}  // namespace

PeriodicityProfile periodicity(const Table& t) {
  PeriodicityProfile p;
  for (int a = 0; a < t.n; ++a) {
    auto [i, k] = index_period(t, static_cast<Element>(a));
    p.m0 = std::max(p.m0, i);
    p.k0 = std::lcm(p.k0, k);
  }
  return p;
}

std::optional<int> nilpotency_degree(const Table& t) {
  auto z = zero_element(t);
  if (!z) return std::nullopt;
  std::vector<bool> cur(t.n, true);
  for (int d = 1; d <= t.n + 1; ++d) {
    if (d > 1) {
      std::vector<bool> next(t.n, false);
      for (int p = 0; p < t.n; ++p)
        if (cur[p])
          for (int a = 0; a < t.n; ++a) next[t.op(p, a)] = true;
      cur = next;
    }
    bool only_zero = true;
    for (int p = 0; p < t.n; ++p)
      if (cur[p] && p != *z) only_zero = false;
    if (only_zero) return d;
  }
  return std::nullopt;
}

IdentityCheck check_identity(const InvolutionSemigroup& s, const Word& lhs,
                             const Word& rhs, int var_cap) {
  IdentityCheck c;
  if (auto ce = satisfies(s, lhs, rhs, var_cap)) {
    c.holds = false;
    c.failed = render(lhs) + " = " + render(rhs);
    c.counterexample = *ce;
  }
  return c;
}

bool satisfies_xyz_eq_xz(const InvolutionSemigroup& s) {
  return check_identity(s, parse_word("xyz"), parse_word("xz")).holds;
}

IdentityCheck check_c4_identities(const InvolutionSemigroup& s) {
  static const char* kPairs[][2] = {
      {"x*tx", "xtx"}, {"xtx", "xtx*"}, {"x*x", "xx"}, {"xx", "xx*"}};
  for (auto& p : kPairs) {
    auto c = check_identity(s, parse_word(p[0]), parse_word(p[1]));
    if (!c.holds) return c;
  }
  return {};
}

bool satisfies_C4_identities(const InvolutionSemigroup& s) {
  return check_c4_identities(s).holds;
}

std::string PermutationIdentity::render() const {
  std::string l, r;
  for (int i = 0; i < m; ++i) {
    l += static_cast<char>('a' + i);
    r += static_cast<char>('a' + perm[i]);
  }
  return l + " = " + r;
}

PermutationSearch find_permutation_identity(const InvolutionSemigroup& s,
                                            int max_len, int var_cap) {
  PermutationSearch out;
  out.bound = max_len;
  int top = std::min(max_len, var_cap);
  for (int m = 2; m <= top; ++m) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    while (std::next_permutation(p.begin(), p.end())) perms.push_back(p);
    std::vector<bool> alive(perms.size(), true);
    size_t n_alive = perms.size();
    std::vector<Element> vals(m, 0);
    do {
      Element lhs = vals[0];
      for (int i = 1; i < m; ++i) lhs = s.op(lhs, vals[i]);
      for (size_t k = 0; k < perms.size(); ++k) {
        if (!alive[k]) continue;
        Element rhs = vals[perms[k][0]];
        for (int i = 1; i < m; ++i) rhs = s.op(rhs, vals[perms[k][i]]);
        if (rhs != lhs) {
          alive[k] = false;
          --n_alive;
        }
      }
    } while (n_alive > 0 && advance(vals, s.n));
    for (size_t k = 0; k < perms.size(); ++k) {
      if (alive[k]) {
        out.found = PermutationIdentity{m, perms[k]};
        return out;
      }
    }
  }
  out.bound_exhausted = true;
  return out;
}

namespace {

void involutive_perms(int n, Perm& cur, std::vector<bool>& used, int i,
                      std::vector<Perm>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  if (used[i]) {
    involutive_perms(n, cur, used, i + 1, out);
    return;
  }
  used[i] = true;
  cur[i] = static_cast<Element>(i);
  involutive_perms(n, cur, used, i + 1, out);
  for (int j = i + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    cur[i] = static_cast<Element>(j);
    cur[j] = static_cast<Element>(i);
    involutive_perms(n, cur, used, i + 1, out);
    used[j] = false;
  }
  used[i] = false;
}

std::vector<Perm> all_involutive_perms(int n) {
  std::vector<Perm> out;
  Perm cur(n);
  std::vector<bool> used(n, false);
  involutive_perms(n, cur, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_antimorphism(const Table& t, const Perm& s) {
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      if (s[t.op(a, b)] != t.op(s[b], s[a])) return false;
  return true;
}

const char* first_failed_quick_test(const Table& t, const Perm& s) {
  for (int a = 0; a < t.n; ++a) {
    Element aa = t.op(a, s[a]);
    if (s[aa] != aa) return "aa* fixed";
  }
  for (int a = 0; a < t.n; ++a)
    if (index_period(t, a) != index_period(t, s[a]))
      return "index/period preserved";
  for (int a = 0; a < t.n; ++a)
    if (t.op(a, a) == a && t.op(s[a], s[a]) != s[a])
      return "idempotents preserved";
  auto is_left_zero = [&](int a) {
    for (int b = 0; b < t.n; ++b)
      if (t.op(a, b) != a) return false;
    return true;
  };
  auto is_right_zero = [&](int a) {
    for (int b = 0; b < t.n; ++b)
      if (t.op(b, a) != a) return false;
    return true;
  };
  for (int a = 0; a < t.n; ++a) {
    bool unit = true;
    for (int b = 0; b < t.n; ++b)
      unit = unit && t.op(a, b) == b && t.op(b, a) == b;
    if (unit && s[a] != a) return "unit/zero fixed";
    if (is_left_zero(a) && !is_right_zero(s[a]))
      return "left zeros swapped with right zeros";
    if (is_right_zero(a) && !is_left_zero(s[a]))
      return "left zeros swapped with right zeros";
  }
  return nullptr;
}

}  // namespace

std::vector<Perm> involutions_of(const Table& t) {
  std::vector<Perm> out;
  for (auto& s : all_involutive_perms(t.n))
    if (is_antimorphism(t, s)) out.push_back(s);
  return out;
}

std::vector<std::string> involution_obstructions(const Table& t) {
  std::set<std::string> failed;
  for (auto& s : all_involutive_perms(t.n)) {
    const char* f = first_failed_quick_test(t, s);
    if (!f) return {};
    failed.insert(f);
  }
  return {failed.begin(), failed.end()};
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Table relabel(const Table& t, const Perm& p) {
  Table r{t.n, std::vector<Element>(t.mul.size())};
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) r.mul[p[a] * t.n + p[b]] = p[t.op(a, b)];
  return r;
}

InvolutionSemigroup relabel(const InvolutionSemigroup& s, const Perm& p) {
  auto t = relabel(s.reduct(), p);
  Perm inv(s.n);
  for (int a = 0; a < s.n; ++a) inv[p[a]] = p[s.inv[a]];
  return InvolutionSemigroup{s.n, std::move(t.mul), std::move(inv)};
}

std::optional<Perm> is_isomorphic(const InvolutionSemigroup& a,
                                  const InvolutionSemigroup& b) {
  if (a.n != b.n) return std::nullopt;
  Perm p = identity_perm(a.n);
  do {
    if (relabel(a, p) == b) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

InvolutionSemigroup canonical_form(const InvolutionSemigroup& s) {
  Perm p = identity_perm(s.n);
  InvolutionSemigroup best = s;
  bool first = true;
  do {
    auto r = relabel(s, p);
    if (first || std::tie(r.mul, r.inv) < std::tie(best.mul, best.inv)) {
      best = std::move(r);
      first = false;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

Table canonical_form(const Table& t) {
  Perm p = identity_perm(t.n);
  Table best = t;
  do {
    auto r = relabel(t, p);
    if (r.mul < best.mul) best = std::move(r);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::string canonical_key(const InvolutionSemigroup& s) {
  return format_table(canonical_form(s));
}

std::string canonical_key(const Table& t) {
  return "n=" + std::to_string(t.n) + " mul=" + format_mul(canonical_form(t));
}

bool is_homomorphism(const InvolutionSemigroup& s,
                     const InvolutionSemigroup& t, const Perm& map) {
  if (static_cast<int>(map.size()) != s.n) return false;
  for (auto e : map)
    if (e >= t.n) return false;
  for (int a = 0; a < s.n; ++a) {
    if (map[s.inv[a]] != t.inv[map[a]]) return false;
    for (int b = 0; b < s.n; ++b)
      if (map[s.op(a, b)] != t.op(map[a], map[b])) return false;
  }
  return true;
}

}  // namespace invsg
