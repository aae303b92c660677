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
#include <array>

#include "invsg/basis.h"

namespace invsg {

namespace {

constexpr uint8_t kX = 'x' - 'a';
constexpr uint8_t kY = 'y' - 'a';
constexpr uint8_t kZ = 'z' - 'a';

Word sub(const Word& w, size_t a, size_t b) {
  return Word(w.begin() + a, w.begin() + b);
}

Word cat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word one(Letter l) { return Word{l}; }

class Rewriter {
 public:
  Rewriter(const RuleSystem& rules, Word w)
      : rules_(rules), start_(w), cur_(std::move(w)) {}

  const Word& word() const { return cur_; }
  const std::vector<DerivationStep>& steps() const { return steps_; }

  void step(const std::string& tag, bool fwd, size_t pos, Substitution s) {
    const IdentityRule* r = rules_.find(tag);
    if (!r) throw InternalError("rule " + tag + " missing from " + rules_.name);
    try {
      cur_ = apply_rule(cur_, *r, fwd, pos, s);
    } catch (const RuleMatchError& e) {
      throw InternalError("normalization step " + tag + " on " +
                          render(cur_) + ": " + e.what());
    }
    steps_.push_back(DerivationStep{tag, fwd, pos, std::move(s)});
  }

  // T-rules switch to their T-deleted companion when T would be empty.
  void tstep(const std::string& tag, bool fwd, size_t pos, Substitution s) {
    auto it = s.find(kVarT);
    if (it != s.end() && it->second.empty()) {
      s.erase(it);
      step(tag + "'", fwd, pos, std::move(s));
    } else {
      step(tag, fwd, pos, std::move(s));
    }
  }

  void replay(const std::vector<DerivationStep>& steps, size_t offset,
              bool reversed) {
    if (!reversed) {
      for (const auto& s : steps) step(s.rule, s.forward, s.pos + offset, s.subst);
    } else {
      for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        step(it->rule, !it->forward, it->pos + offset, it->subst);
    }
  }

  DerivationTrace trace() const { return DerivationTrace{start_, cur_, steps_}; }

 private:
  const RuleSystem& rules_;
  Word start_;
  Word cur_;
  std::vector<DerivationStep> steps_;
};

int count_base(const Word& w, uint8_t b) { return plain_occ(w, b); }

// Connected plain block Q -> m l1 m l2 ... m lk m (letters sorted and
// distinct, m the least), or l^2 when Q has a single base.
class BlockNormalizer {
 public:
  BlockNormalizer(const RuleSystem& rules, const Word& q) : r_(rules, q) {}

  std::vector<DerivationStep> run() {
    const Word& q = r_.word();
    std::set<Letter> content(q.begin(), q.end());
    if (content.size() == 1) {
      while (r_.word().size() > 2) r_.step("4e1", false, 0, {{kX, one(q[0])}});
      return r_.steps();
    }
    Letter m = *content.begin();
    sandwich();
    Letter h = r_.word()[0];
    if (h != m) {
      Word w = r_.word();
      size_t f = std::find(w.begin(), w.end(), m) - w.begin();
      if (f > 1)
        r_.step("6b", true, 0,
                {{kX, one(h)}, {kY, sub(w, 1, f)}, {kZ, sub(w, f, w.size() - 1)}});
      w = r_.word();
      r_.step("4e2", true, 0, {{kX, one(h)}, {kY, sub(w, 1, w.size() - 1)}});
      sandwich();
    }
    remove_inner(m);
    split_all(m);
    sort_pieces(m);
    return r_.steps();
  }

  const Word& word() const { return r_.word(); }

 private:
  void sandwich() {
    for (;;) {
      const Word w = r_.word();
      Letter h = w[0];
      size_t last = 0;
      for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == h) last = i;
      if (last + 1 == w.size()) return;
      std::array<int, kAlphabetSize> last_left;
      last_left.fill(-1);
      for (size_t i = 1; i < last; ++i) last_left[w[i].base] = static_cast<int>(i);
      size_t u = last + 1;
      while (u < w.size() && last_left[w[u].base] < 0) ++u;
      if (u == w.size()) throw InternalError("block " + render(w) + " is not connected");
      size_t qi = static_cast<size_t>(last_left[w[u].base]);
      r_.step("4e2", true, qi, {{kX, one(w[u])}, {kY, sub(w, qi + 1, u)}});
    }
  }

  void remove_inner(Letter m) {
    for (;;) {
      const Word w = r_.word();
      std::vector<size_t> ms;
      for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == m) ms.push_back(i);
      if (ms.size() <= 2) return;
      Word alpha = sub(w, 1, ms[1]);
      Word beta = sub(w, ms[1] + 1, ms[2]);
      if (!alpha.empty() && !beta.empty()) {
        r_.step("6b", false, 0,
                {{kX, one(m)}, {kY, cat(one(m), beta)}, {kZ, alpha}});
        r_.step("6a1", false, 0, {{kX, one(m)}, {kY, cat(beta, alpha)}});
      } else if (!beta.empty()) {
        r_.step("6a1", false, 0, {{kX, one(m)}, {kY, beta}});
      } else if (!alpha.empty()) {
        r_.step("6a3", false, 0, {{kX, one(m)}, {kY, alpha}});
      } else {
        r_.step("4e1", false, 0, {{kX, one(m)}});
      }
    }
  }

  void split(size_t ps, Letter m, const Word& alpha, const Word& beta) {
    r_.step("6a1", true, ps, {{kX, one(m)}, {kY, cat(alpha, beta)}});
    r_.step("6b", true, ps,
            {{kX, one(m)}, {kY, cat(one(m), alpha)}, {kZ, beta}});
  }

  void merge(size_t ps, Letter m, const Word& a, const Word& b) {
    r_.step("6b", false, ps, {{kX, one(m)}, {kY, cat(one(m), b)}, {kZ, a}});
    r_.step("6a1", false, ps, {{kX, one(m)}, {kY, cat(b, a)}});
  }

  void split_all(Letter m) {
    for (;;) {
      const Word w = r_.word();
      size_t start = 0;
      bool done = true;
      for (size_t i = 1; i < w.size(); ++i) {
        if (w[i] != m) continue;
        if (i - start > 2) {
          split(start, m, sub(w, start + 1, i - 1), one(w[i - 1]));
          done = false;
          break;
        }
        start = i;
      }
      if (done) return;
    }
  }

  void sort_pieces(Letter m) {
    for (;;) {
      const Word w = r_.word();
      size_t k = (w.size() - 1) / 2;
      bool done = true;
      for (size_t i = 0; i + 1 < k; ++i) {
        Letter a = w[2 * i + 1], b = w[2 * i + 3];
        if (a == b) {
          merge(2 * i, m, one(a), one(b));
          r_.step("6a2", false, 2 * i, {{kX, one(m)}, {kY, one(a)}});
        } else if (b < a) {
          merge(2 * i, m, one(a), one(b));
          r_.step("6b", true, 2 * i, {{kX, one(m)}, {kY, one(b)}, {kZ, one(a)}});
          split(2 * i, m, one(a), one(b));
        } else {
          continue;
        }
        done = false;
        break;
      }
      if (done) return;
    }
  }

  Rewriter r_;
};

Word block_target(const Word& q) {
  std::set<Letter> content(q.begin(), q.end());
  std::vector<Letter> ls(content.begin(), content.end());
  if (ls.size() == 1) return {ls[0], ls[0]};
  Word k{ls[0]};
  for (size_t i = 1; i < ls.size(); ++i) {
    k.push_back(ls[i]);
    k.push_back(ls[i]);
  }
  k.push_back(ls[0]);
  return k;
}

struct Run {
  std::optional<ZeroWitness> zero;
  size_t pivot = 0;
  DerivationTrace trace;
};

class Normalizer {
 public:
  Normalizer(const RuleSystem& rules, const Word& w, bool b_mode)
      : rules_(rules), r_(rules, w), b_mode_(b_mode) {}

  Run run() {
    Run out;
    if (check_zero(out)) return out;
    choose_pivot();
    for (;;) {
      if (check_zero(out)) return out;
      if (reduce_middle_mix()) continue;
      if (reduce_conflict()) continue;
      if (reduce_common()) continue;
      break;
    }
    normalize_prefix();
    normalize_blocks();
    if (b_mode_ && !fuse_squares(out)) return out;
    out.pivot = p_;
    out.trace = r_.trace();
    return out;
  }

 private:
  const Word& w() const { return r_.word(); }
  Letter pivot() const { return w()[p_]; }
  Word middle() const { return sub(w(), p_ + 1, w().size() - 1); }

  bool check_zero(Run& out) {
    if (auto hit = zero_pattern_scan(w())) {
      out.zero = ZeroWitness{"pattern", hit, w(), r_.trace()};
      return true;
    }
    if (b_mode_) {
      const Word& v = w();
      for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i + 1] == v[i].starred()) {
          PatternHit h{v[i].star ? "x*x" : "xx*", {v[i], v[i + 1]}, {i, i + 1}};
          out.zero = ZeroWitness{"factor", h, v, r_.trace()};
          return true;
        }
      }
    }
    return false;
  }

  void choose_pivot() {
    const Word v = w();
    std::array<int, kAlphabetSize> last;
    last.fill(-1);
    size_t bi = 0, bj = v.size();
    for (size_t j = 0; j < v.size(); ++j) {
      int i = last[v[j].base];
      if (i >= 0 && v[i] == v[j].starred() && j < bj) {
        bi = static_cast<size_t>(i);
        bj = j;
        break;
      }
      last[v[j].base] = static_cast<int>(j);
    }
    if (bj == v.size()) throw InternalError("no mixed pair in " + render(v));
    p_ = bi;
    if (bj + 1 < v.size()) {
      Word b = sub(v, bi + 1, bj), c = sub(v, bj + 1, v.size());
      r_.tstep("4c", true, bi, {{kX, one(v[bi])}, {kVarT, b}, {kY, c}});
      p_ = bi + c.size();
    }
  }

  bool reduce_middle_mix() {
    const Word b = middle();
    size_t k1 = b.size(), k2 = 0;
    std::array<int, kAlphabetSize> last;
    last.fill(-1);
    for (size_t j = 0; j < b.size(); ++j) {
      int i = last[b[j].base];
      if (i >= 0 && b[i] == b[j].starred()) {
        k1 = static_cast<size_t>(i);
        k2 = j;
        break;
      }
      last[b[j].base] = static_cast<int>(j);
    }
    if (k1 == b.size()) return false;
    Letter x = pivot(), y = b[k1];
    Word b1 = sub(b, 0, k1), b2 = sub(b, k1 + 1, k2), b3 = sub(b, k2 + 1, b.size());
    size_t p = p_;
    if (!b1.empty())
      r_.tstep("6c1", true, p,
               {{kY, one(x)}, {kZ, b1}, {kX, one(y)}, {kVarT, b2}});
    if (!b3.empty()) {
      r_.tstep("6c2", true, p + b1.size() + 1,
               {{kX, one(y)}, {kVarT, b2}, {kY, b3}, {kZ, one(x.starred())}});
      Word yb2y = cat(cat(one(y), b2), one(y.starred()));
      r_.step("4c", true, p + b1.size(), {{kX, one(x)}, {kVarT, yb2y}, {kY, b3}});
    }
    size_t q = p + b1.size() + b3.size();
    r_.tstep("6e", true, q, {{kX, one(x)}, {kY, one(y)}, {kVarT, b2}});
    r_.tstep("4d2", false, q + 1, {{kX, one(x)}, {kVarT, b2}});
    p_ = q + 1;
    return true;
  }

  // ell in the prefix at i, ell* in the middle at j: removes ell* from the
  // middle and moves the middle's tail to the prefix.
  void drop_star(size_t i, size_t j) {
    const Word v = w();
    Letter x = pivot(), y = v[i];
    Word a1 = sub(v, 0, i), a2 = sub(v, i + 1, p_);
    Word b1 = sub(v, p_ + 1, j), b2 = sub(v, j + 1, v.size() - 1);
    size_t A1 = a1.size(), A2 = a2.size();
    Word ys = one(y.starred());
    if (!a2.empty())
      r_.step("6c1", true, A1,
              {{kY, one(y)}, {kZ, a2}, {kX, one(x)}, {kVarT, cat(cat(b1, ys), b2)}});
    if (!b2.empty())
      r_.step("6c2", true, A1 + A2,
              {{kX, one(y)}, {kVarT, cat(one(x), b1)}, {kY, b2}, {kZ, one(x.starred())}});
    r_.step("4b", true, A1 + A2 + 1, {{kX, one(x)}, {kY, cat(b1, ys)}});
    r_.step("4e2", false, A1 + A2, {{kX, one(x)}, {kY, one(y)}});
    Word b1s = star_word(b1);
    r_.tstep("6c1", true, A1 + A2,
             {{kY, one(x)}, {kZ, one(y)}, {kX, one(x)}, {kVarT, b1s}});
    r_.tstep("4d1", true, A1 + A2 + 1, {{kX, one(x)}, {kVarT, b1s}});
    if (!a2.empty())
      r_.tstep("6c1", false, A1,
               {{kY, one(y)}, {kZ, a2}, {kX, one(x)}, {kVarT, b1s}});
    if (!b2.empty())
      r_.tstep("4c", true, A1 + 1 + A2, {{kX, one(x)}, {kVarT, b1s}, {kY, b2}});
    p_ = A1 + 1 + A2 + b2.size();
    if (!b1.empty()) r_.step("4b", true, p_, {{kX, one(x)}, {kY, b1s}});
  }

  static size_t last_in(const Word& v, size_t end, Letter l) {
    for (size_t i = end; i-- > 0;)
      if (v[i] == l) return i;
    return end;
  }

  bool reduce_conflict() {
    const Word v = w();
    for (size_t j = p_ + 1; j + 1 < v.size(); ++j) {
      size_t i = last_in(v, p_, v[j].starred());
      if (i < p_) {
        drop_star(i, j);
        return true;
      }
    }
    return false;
  }

  bool reduce_common() {
    const Word v = w();
    for (size_t j = p_ + 1; j + 1 < v.size(); ++j) {
      size_t i = last_in(v, p_, v[j]);
      if (i == p_) continue;
      Letter x = pivot();
      Word b = middle();
      r_.step("4b", true, p_, {{kX, one(x)}, {kY, b}});
      size_t jj = p_ + 1 + (b.size() - 1 - (j - p_ - 1));
      drop_star(i, jj);
      Word m = middle();
      if (!m.empty()) r_.step("4b", true, p_, {{kX, one(x)}, {kY, m}});
      return true;
    }
    return false;
  }

  // Moves the prefix letter at idx to just before the pivot.
  void rotate_to_pivot(size_t idx) {
    const Word v = w();
    Word c = sub(v, idx + 1, p_);
    if (c.empty()) return;
    r_.tstep("6c1", true, idx,
             {{kY, one(v[idx])}, {kZ, c}, {kX, one(pivot())}, {kVarT, middle()}});
  }

  void merge_pivot_copies() {
    for (;;) {
      size_t idx = last_in(w(), p_, pivot());
      if (idx == p_) return;
      rotate_to_pivot(idx);
      r_.tstep("4d1", true, p_ - 1, {{kX, one(pivot())}, {kVarT, middle()}});
      --p_;
    }
  }

  void normalize_prefix() {
    for (;;) {
      merge_pivot_copies();
      const Word v = w();
      size_t best = p_;
      for (size_t i = 0; i < p_; ++i)
        if (best == p_ || v[best].base < v[i].base ||
            (v[best].base == v[i].base && i > best))
          best = i;
      if (best == p_ || v[best].base < pivot().base) break;
      Letter t = v[best], x = pivot();
      rotate_to_pivot(best);
      r_.tstep("6e", true, p_ - 1, {{kX, one(t)}, {kY, one(x)}, {kVarT, middle()}});
    }
    for (;;) {
      const Word v = w();
      std::optional<Letter> dup;
      for (size_t i = 0; i < p_ && !dup; ++i)
        for (size_t j = i + 1; j < p_; ++j)
          if (v[i] == v[j]) {
            dup = v[i];
            break;
          }
      if (!dup) break;
      rotate_to_pivot(last_in(v, p_, *dup));
      const Word v2 = w();
      size_t i2 = last_in(v2, p_ - 1, *dup);
      Word c2 = sub(v2, i2 + 1, p_);
      if (i2 + 1 < p_ - 1)
        r_.tstep("6c1", true, i2,
                 {{kY, one(*dup)}, {kZ, c2}, {kX, one(pivot())}, {kVarT, middle()}});
      r_.tstep("6d1", true, p_ - 2,
               {{kY, one(*dup)}, {kX, one(pivot())}, {kVarT, middle()}});
      --p_;
    }
    for (size_t k = 0; k < p_; ++k) {
      const Word v = w();
      Word rest = sub(v, k, p_);
      size_t r = std::min_element(rest.begin(), rest.end()) - rest.begin();
      if (r == 0) continue;
      r_.tstep("6c1", true, k,
               {{kY, sub(rest, 0, r)}, {kZ, sub(rest, r, rest.size())},
                {kX, one(pivot())}, {kVarT, middle()}});
    }
  }

  void normalize_blocks() {
    Word b = middle();
    std::map<uint8_t, std::pair<size_t, size_t>> span;
    for (size_t i = 0; i < b.size(); ++i) {
      auto it = span.find(b[i].base);
      if (it == span.end())
        span[b[i].base] = {i, i};
      else
        it->second.second = i;
    }
    std::vector<std::pair<size_t, size_t>> iv;
    for (auto& [base, s] : span)
      if (s.first != s.second) iv.push_back(s);
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<size_t, size_t>> blocks;
    for (auto s : iv) {
      if (!blocks.empty() && s.first <= blocks.back().second)
        blocks.back().second = std::max(blocks.back().second, s.second);
      else
        blocks.push_back(s);
    }
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
      Word q = sub(b, it->first, it->second + 1);
      Word k = block_target(q);
      if (q == k) continue;
      BlockNormalizer nq(rules_, q), nk(rules_, k);
      auto sq = nq.run();
      auto sk = nk.run();
      if (nq.word() != nk.word())
        throw InternalError("block normal forms differ for " + render(q));
      size_t off = p_ + 1 + it->first;
      r_.replay(sq, off, false);
      r_.replay(sk, off, true);
    }
  }

  struct Token {
    size_t pos;  // offset in the middle
    size_t len;  // 1 for simple letters, 2 for squares
  };

  std::vector<Token> tokens(const Word& m) const {
    std::vector<Token> out;
    for (size_t i = 0; i < m.size();) {
      if (i + 1 < m.size() && m[i] == m[i + 1] && count_base(m, m[i].base) == 2) {
        out.push_back({i, 2});
        i += 2;
      } else {
        out.push_back({i, 1});
        ++i;
      }
    }
    return out;
  }

  bool fuse_squares(Run& out) {
    for (;;) {
      auto f = parse_a_standard(w());
      if (!f) throw InternalError("A-normal form expected, got " + render(w()));
      size_t off = p_ + 1;
      bool changed = false;
      for (const auto& seg : f->middle) {
        if (seg.block && seg.word.size() > 2) {
          Letter y1 = seg.word.front();
          Word z = sub(seg.word, 1, seg.word.size() - 1);
          r_.step("6a3", true, off, {{kX, one(y1)}, {kY, z}});
          size_t k = z.size() / 2;
          for (size_t j = k; j-- > 0;)
            r_.step("7", true, off + 1 + 2 * j, {{kX, one(z[2 * j])}, {kY, one(y1)}});
          r_.step("4e1", false, off, {{kX, one(y1)}});
          changed = true;
          break;
        }
        off += seg.word.size();
      }
      if (!changed) break;
    }
    for (;;) {
      Word m = middle();
      auto tk = tokens(m);
      bool changed = false;
      for (size_t i = 0; i + 1 < tk.size(); ++i) {
        if (tk[i].len == 2 && tk[i + 1].len == 2 && m[tk[i + 1].pos] < m[tk[i].pos]) {
          r_.step("7", true, p_ + 1 + tk[i].pos,
                  {{kX, one(m[tk[i].pos])}, {kY, one(m[tk[i + 1].pos])}});
          changed = true;
          break;
        }
      }
      if (!changed) break;
    }
    {
      Word m = middle();
      auto tk = tokens(m);
      if (std::none_of(tk.begin(), tk.end(), [](Token t) { return t.len == 1; })) {
        out.zero = ZeroWitness{"empty-middle", std::nullopt, w(), r_.trace()};
        return false;
      }
    }
    absorb_front();
    absorb_back();
    return true;
  }

  void absorb_front() {
    Word m = middle();
    auto tk = tokens(m);
    size_t n = 0;
    while (n < tk.size() && tk[n].len == 2) ++n;
    if (n == 0) return;
    Letter x = pivot();
    r_.step("4d1", false, p_, {{kX, one(x)}, {kVarT, m}});
    for (size_t i = 0; i < n; ++i)
      r_.step("7", true, p_ + 2 * i, {{kX, one(x)}, {kY, one(m[2 * i])}});
    p_ += 2 * n;
    r_.step("4d1", true, p_, {{kX, one(x)}, {kVarT, sub(m, 2 * n, m.size())}});
    normalize_prefix();
  }

  void absorb_back() {
    Word m = middle();
    auto tk = tokens(m);
    size_t n = 0;
    while (n < tk.size() && tk[tk.size() - 1 - n].len == 2) ++n;
    if (n == 0) return;
    Letter x = pivot(), xs = x.starred();
    size_t rlen = m.size() - 2 * n;
    Word r = sub(m, 0, rlen), z = sub(m, rlen, m.size());
    r_.step("4d2", true, p_, {{kX, one(x)}, {kVarT, m}});
    for (size_t i = n; i-- > 0;)
      r_.step("7", true, p_ + 1 + rlen + 2 * i, {{kX, one(z[2 * i])}, {kY, one(xs)}});
    r_.step("4d2", false, p_, {{kX, one(x)}, {kVarT, r}});
    r_.step("4c", true, p_, {{kX, one(x)}, {kVarT, r}, {kY, z}});
    p_ += z.size();
    normalize_prefix();
  }

  const RuleSystem& rules_;
  Rewriter r_;
  bool b_mode_;
  size_t p_ = 0;
};

Run run_normalizer(const Word& w, bool b_mode) {
  const RuleSystem& rules = b_mode ? system_b0() : system_a0();
  return Normalizer(rules, w, b_mode).run();
}

// Prefix and pivot of w1 x w2 x* per (S1); the middle is returned unparsed.
std::optional<StandardForm> parse_frame(const Word& w) {
  if (w.size() < 2 || !is_mixed(w)) return std::nullopt;
  Letter xs = w.back(), x = xs.starred();
  size_t p = w.size();
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].base != x.base) continue;
    if (w[i] != x || p != w.size()) return std::nullopt;
    p = i;
  }
  if (p == w.size()) return std::nullopt;
  StandardForm f;
  f.pivot = x;
  f.prefix = sub(w, 0, p);
  for (size_t i = 0; i < p; ++i) {
    uint8_t next = i + 1 < p ? f.prefix[i + 1].base : x.base;
    if (f.prefix[i].base >= next) return std::nullopt;
  }
  Word m = sub(w, p + 1, w.size() - 1);
  if (is_mixed(m)) return std::nullopt;
  if (!are_disjoint(cat(f.prefix, one(x)), m)) return std::nullopt;
  f.middle.push_back(Segment{false, m});
  return f;
}

bool squares_ordered(const Word& q, size_t from, size_t to) {
  if ((to - from) % 2) return false;
  for (size_t i = from; i < to; i += 2) {
    if (q[i] != q[i + 1]) return false;
    if (i > from && !(q[i - 2].base < q[i].base)) return false;
  }
  return true;
}

}  // namespace

Word StandardForm::middle_word() const {
  Word m;
  for (const auto& s : middle) m.insert(m.end(), s.word.begin(), s.word.end());
  return m;
}

Word StandardForm::word() const {
  Word out = prefix;
  out.push_back(pivot);
  Word m = middle_word();
  out.insert(out.end(), m.begin(), m.end());
  out.push_back(pivot.starred());
  return out;
}

std::optional<StandardForm> parse_a_standard(const Word& w) {
  auto f = parse_frame(w);
  if (!f) return std::nullopt;
  Word m = f->middle.front().word;
  f->middle.clear();
  Word p;
  for (size_t i = 0; i < m.size();) {
    int c = count_base(m, m[i].base);
    if (c == 1) {
      p.push_back(m[i++]);
      continue;
    }
    if (c != 2) return std::nullopt;
    size_t j = i + 1;
    while (j < m.size() && m[j].base != m[i].base) ++j;
    if (m[j] != m[i]) return std::nullopt;
    if (j > i + 1) {
      if (!squares_ordered(m, i + 1, j)) return std::nullopt;
      if (!(m[i].base < m[i + 1].base)) return std::nullopt;
      for (size_t k = i + 1; k < j; ++k)
        if (count_base(m, m[k].base) != 2) return std::nullopt;
    }
    f->middle.push_back(Segment{false, p});
    f->middle.push_back(Segment{true, sub(m, i, j + 1)});
    p.clear();
    i = j + 1;
  }
  f->middle.push_back(Segment{false, p});
  return f;
}

std::optional<StandardForm> parse_b_standard(const Word& w) {
  auto f = parse_frame(w);
  if (!f) return std::nullopt;
  Word m = f->middle.front().word;
  f->middle.clear();
  Word p, q;
  for (size_t i = 0; i < m.size();) {
    int c = count_base(m, m[i].base);
    if (c == 1) {
      if (!q.empty()) {
        f->middle.push_back(Segment{false, p});
        f->middle.push_back(Segment{true, q});
        p.clear();
        q.clear();
      }
      p.push_back(m[i++]);
      continue;
    }
    if (c != 2 || i + 1 >= m.size() || m[i + 1] != m[i]) return std::nullopt;
    if (p.empty()) return std::nullopt;
    if (!q.empty() && !(q[q.size() - 2].base < m[i].base)) return std::nullopt;
    q.push_back(m[i]);
    q.push_back(m[i]);
    i += 2;
  }
  if (!q.empty() || p.empty()) return std::nullopt;
  f->middle.push_back(Segment{false, p});
  return f;
}

bool is_a_standard(const Word& w) { return parse_a_standard(w).has_value(); }
bool is_b_standard(const Word& w) { return parse_b_standard(w).has_value(); }

std::string ZeroWitness::describe() const {
  std::string s = reason;
  if (hit) s += " " + hit->pattern + " as " + render(hit->instance, false);
  if (!trace.steps.empty())
    s += " in " + render(stage) + " after " + std::to_string(trace.steps.size()) +
         " steps";
  return s;
}

std::optional<ZeroWitness> a_zero_witness(const Word& w) {
  if (w.empty() || !is_mixed(w)) return std::nullopt;
  return run_normalizer(w, false).zero;
}

std::optional<ZeroWitness> b_zero_witness(const Word& w) {
  if (w.empty() || !is_mixed(w)) return std::nullopt;
  return run_normalizer(w, true).zero;
}

namespace {

Normalized normalize(const Word& w, bool b_mode) {
  if (w.empty() || !is_mixed(w))
    throw PreconditionError("normalization needs a mixed word, got " +
                            (w.empty() ? std::string("the empty word") : render(w)));
  Run run = run_normalizer(w, b_mode);
  if (run.zero)
    throw PreconditionError(render(w) + " is a zero word (" +
                            run.zero->describe() + ")");
  auto f = b_mode ? parse_b_standard(run.trace.end)
                  : parse_a_standard(run.trace.end);
  if (!f)
    throw InternalError("normalization of " + render(w) + " ended at " +
                        render(run.trace.end) + ", not in standard form");
  return Normalized{*f, run.trace};
}

}  // namespace

Normalized normalize_a(const Word& w) { return normalize(w, false); }
Normalized normalize_b(const Word& w) { return normalize(w, true); }

}  // namespace invsg
