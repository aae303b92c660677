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
#include <deque>
#include <set>
#include <unordered_map>

#include "invsg/basis.h"
#include "json.hpp"

namespace invsg {

namespace {

std::string var_name(uint8_t v) {
  return v == kVarT ? std::string("T") : std::string(1, 'a' + v);
}

uint8_t var_from_name(const std::string& s) {
  if (s == "T") return kVarT;
  if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'z')
    return static_cast<uint8_t>(s[0] - 'a');
  throw std::invalid_argument("bad rule variable name '" + s + "'");
}

Word parse_pattern(std::string text) {
  std::replace(text.begin(), text.end(), 'T', 't');
  return parse_word(text);
}

std::string render_pattern(const Word& p) {
  if (p.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < p.size();) {
    size_t j = i + 1;
    while (j < p.size() && p[j] == p[i]) ++j;
    s += var_name(p[i].base);
    if (p[i].star) s += '*';
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

// Renames variables that occur only starred so that mirrored rules can be
// compared with their originals up to renaming.
std::pair<Word, Word> unstar_uniform(Word a, Word b) {
  std::set<uint8_t> plain_seen;
  for (auto l : a)
    if (!l.star) plain_seen.insert(l.base);
  for (auto l : b)
    if (!l.star) plain_seen.insert(l.base);
  for (auto* w : {&a, &b})
    for (auto& l : *w)
      if (!plain_seen.count(l.base)) l.star = false;
  return {a, b};
}

}  // namespace

std::string IdentityRule::render() const {
  return render_pattern(lhs) + " = " + (zero_rule ? "0" : render_pattern(rhs));
}

IdentityRule make_rule(const std::string& tag, const std::string& lhs,
                       const std::string& rhs) {
  return IdentityRule{tag, parse_pattern(lhs), parse_pattern(rhs), false};
}

IdentityRule make_zero_rule(const std::string& tag, const std::string& lhs) {
  return IdentityRule{tag, parse_pattern(lhs), {}, true};
}

const IdentityRule* RuleSystem::find(const std::string& tag) const {
  for (const auto& r : rules)
    if (r.tag == tag) return &r;
  return nullptr;
}

RuleSystem close_system(const std::string& name,
                        const std::vector<IdentityRule>& rules) {
  RuleSystem sys;
  sys.name = name;
  for (const auto& r : rules) {
    sys.rules.push_back(r);
    IdentityRule m = r;
    m.tag = r.tag + "*";
    m.lhs = star_word(r.lhs);
    m.rhs = star_word(r.rhs);
    auto orig = unstar_uniform(r.lhs, r.rhs);
    auto mirr = unstar_uniform(m.lhs, m.rhs);
    bool same = orig == mirr ||
                (!r.zero_rule && orig == std::make_pair(mirr.second, mirr.first));
    if (!same) sys.rules.push_back(std::move(m));
  }
  return sys;
}

std::vector<IdentityRule> basis_a0_rules() {
  return {
      make_zero_rule("4a", "x x* x"),
      make_rule("4b", "x y x*", "x y* x*"),
      make_rule("4c", "x T x* y", "y* x T x*"),
      make_rule("4c'", "x x* y", "y* x x*"),
      make_rule("4d1", "x x T x*", "x T x*"),
      make_rule("4d1'", "x x x*", "x x*"),
      make_rule("4d2", "x T x*", "x T x* x*"),
      make_rule("4d2'", "x x*", "x x* x*"),
      make_rule("4e1", "x x", "x x x"),
      make_rule("4e2", "x y x", "y x y"),
      make_rule("4e3", "x y x", "x y x y"),
  };
}

std::vector<IdentityRule> derived_rules_a0() {
  return {
      make_rule("6a1", "x y x", "x x y x"),
      make_rule("6a2", "x y x", "x y y x"),
      make_rule("6a3", "x y x", "x y x x"),
      make_rule("6b", "x y z x", "x z y x"),
      make_rule("6c1", "y z x T x*", "z y x T x*"),
      make_rule("6c1'", "y z x x*", "z y x x*"),
      make_rule("6c2", "x T x* y z", "x T x* z y"),
      make_rule("6c2'", "x x* y z", "x x* z y"),
      make_rule("6d1", "y y x T x*", "y x T x*"),
      make_rule("6d1'", "y y x x*", "y x x*"),
      make_rule("6d2", "x T x* y y", "x T x* y"),
      make_rule("6d2'", "x x* y y", "x x* y"),
      make_rule("6e", "x y T y*", "y x T x*"),
      make_rule("6e'", "x y y*", "y x x*"),
      make_rule("6f1", "y x x* y", "y y* z z*"),
      make_rule("6f2", "y y* z z*", "x* x x*"),
      make_rule("6f3", "x* x x*", "x x* x"),
  };
}

std::vector<IdentityRule> basis_b0_rules() {
  auto r = basis_a0_rules();
  r.push_back(make_rule("7", "x x y y", "y y x x"));
  return r;
}

std::vector<IdentityRule> derived_rules_b0() {
  return {
      make_rule("9a", "x x*", "x x* x"),
      make_rule("9b", "x x* x", "x* x"),
      make_zero_rule("9z", "x x*"),
  };
}

RuleSystem basis_a0() { return close_system("A0-basis", basis_a0_rules()); }
RuleSystem basis_b0() { return close_system("B0-basis", basis_b0_rules()); }

const RuleSystem& system_a0() {
  static const RuleSystem sys = [] {
    auto r = basis_a0_rules();
    auto d = derived_rules_a0();
    r.insert(r.end(), d.begin(), d.end());
    return close_system("A0", r);
  }();
  return sys;
}

const RuleSystem& system_b0() {
  static const RuleSystem sys = [] {
    auto r = basis_b0_rules();
    auto d = derived_rules_a0();
    r.insert(r.end(), d.begin(), d.end());
    auto e = derived_rules_b0();
    r.insert(r.end(), e.begin(), e.end());
    return close_system("B0", r);
  }();
  return sys;
}

Word instantiate(const Word& pattern, const Substitution& subst) {
  Word out;
  for (auto l : pattern) {
    auto it = subst.find(l.base);
    if (it == subst.end())
      throw RuleMatchError("no substitution for variable " + var_name(l.base));
    if (it->second.empty())
      throw RuleMatchError("empty image for variable " + var_name(l.base));
    if (l.star) {
      auto s = star_word(it->second);
      out.insert(out.end(), s.begin(), s.end());
    } else {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  return out;
}

Word apply_rule(const Word& w, const IdentityRule& rule, bool forward,
                size_t pos, const Substitution& subst) {
  if (rule.zero_rule)
    throw RuleMatchError("zero rule " + rule.tag + " is not a rewrite step");
  const Word& from = forward ? rule.lhs : rule.rhs;
  const Word& to = forward ? rule.rhs : rule.lhs;
  for (const auto& [v, img] : subst)
    if (img.empty())
      throw RuleMatchError("empty image for variable " + var_name(v));
  Word src = instantiate(from, subst);
  if (pos > w.size() || src.size() > w.size() - pos ||
      !std::equal(src.begin(), src.end(), w.begin() + pos))
    throw RuleMatchError("rule " + rule.tag + " does not match at position " +
                         std::to_string(pos));
  Word dst = instantiate(to, subst);
  Word out(w.begin(), w.begin() + pos);
  out.insert(out.end(), dst.begin(), dst.end());
  out.insert(out.end(), w.begin() + pos + src.size(), w.end());
  return out;
}

TraceCheck verify_trace(const DerivationTrace& trace, const RuleSystem& rules,
                        const InvolutionSemigroup* model) {
  TraceCheck c;
  Word cur = trace.start;
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    const IdentityRule* r = rules.find(st.rule);
    if (!r) {
      return TraceCheck{false, i + 1, "unknown rule " + st.rule};
    }
    try {
      cur = apply_rule(cur, *r, st.forward, st.pos, st.subst);
    } catch (const RuleMatchError& e) {
      return TraceCheck{false, i + 1, e.what()};
    }
    if (model && satisfies(*model, trace.start, cur))
      return TraceCheck{false, i + 1,
                        "step leaves the model class of the start word"};
  }
  if (cur != trace.end)
    return TraceCheck{false, trace.steps.empty() ? 0 : trace.steps.size(),
                      "replay ends at " + render(cur) + ", declared " +
                          render(trace.end)};
  return c;
}

std::string trace_to_json(const DerivationTrace& trace) {
  nlohmann::ordered_json j;
  j["start"] = render(trace.start);
  j["end"] = render(trace.end);
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& st : trace.steps) {
    nlohmann::ordered_json s;
    s["rule"] = st.rule;
    s["dir"] = st.forward ? "->" : "<-";
    s["pos"] = st.pos;
    nlohmann::ordered_json sub = nlohmann::ordered_json::object();
    for (const auto& [v, img] : st.subst) sub[var_name(v)] = render(img);
    s["subst"] = sub;
    j["steps"].push_back(s);
  }
  return j.dump();
}

DerivationTrace trace_from_json(const std::string& text) {
  DerivationTrace t;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    auto word_or_empty = [](const std::string& s) {
      return s.empty() ? Word{} : parse_word(s);
    };
    t.start = word_or_empty(j.at("start").get<std::string>());
    t.end = word_or_empty(j.at("end").get<std::string>());
    for (const auto& s : j.at("steps")) {
      DerivationStep st;
      st.rule = s.at("rule").get<std::string>();
      auto dir = s.at("dir").get<std::string>();
      if (dir != "->" && dir != "<-")
        throw std::invalid_argument("dir must be \"->\" or \"<-\"");
      st.forward = dir == "->";
      st.pos = s.at("pos").get<size_t>();
      for (const auto& [k, v] : s.at("subst").items())
        st.subst[var_from_name(k)] = parse_word(v.get<std::string>());
      t.steps.push_back(std::move(st));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed trace: ") + e.what());
  }
  return t;
}

std::optional<PatternHit> zero_pattern_scan(const Word& w) {
  if (!is_mixed(w)) return std::nullopt;
  auto st = stats(w);
  std::vector<Letter> letters(st.content.begin(), st.content.end());
  auto try_hit = [&](const char* name, Word p) -> std::optional<PatternHit> {
    if (auto pos = is_scattered_subword(p, w))
      return PatternHit{name, std::move(p), *pos};
    return std::nullopt;
  };
  for (auto x : letters) {
    if (!st.content.count(x.starred())) continue;
    if (auto h = try_hit("xx*x", {x, x.starred(), x})) return h;
  }
  for (auto x : letters) {
    if (!st.content.count(x.starred())) continue;
    for (auto y : letters) {
      if (!st.content.count(y.starred())) continue;
      if (auto h = try_hit("xx*yy*", {x, x.starred(), y, y.starred()}))
        return h;
    }
  }
  for (auto x : letters) {
    for (auto y : letters) {
      if (!st.content.count(y.starred())) continue;
      if (auto h = try_hit("xyy*x", {x, y, y.starred(), x})) return h;
    }
  }
  return std::nullopt;
}

namespace {

// All ways to match `pattern` as a prefix of w[pos..], binding variables to
// nonempty factors.
void match_from(const Word& pattern, size_t k, const Word& w, size_t i,
                Substitution& s, std::vector<std::pair<Substitution, size_t>>& out,
                size_t max_image) {
  if (k == pattern.size()) {
    out.emplace_back(s, i);
    return;
  }
  Letter pl = pattern[k];
  auto it = s.find(pl.base);
  if (it != s.end()) {
    Word img = pl.star ? star_word(it->second) : it->second;
    if (img.size() <= w.size() - i &&
        std::equal(img.begin(), img.end(), w.begin() + i))
      match_from(pattern, k + 1, w, i + img.size(), s, out, max_image);
    return;
  }
  for (size_t len = 1; len <= max_image && i + len <= w.size(); ++len) {
    Word f(w.begin() + i, w.begin() + i + len);
    s[pl.base] = pl.star ? star_word(f) : f;
    match_from(pattern, k + 1, w, i + len, s, out, max_image);
    s.erase(pl.base);
  }
}

}  // namespace

std::optional<DerivationTrace> bounded_search(const RuleSystem& rules,
                                              const Word& from, const Word& to,
                                              int depth) {
  struct Node {
    Word w;
    int parent;
    DerivationStep step;
  };
  std::vector<Node> nodes{{from, -1, {}}};
  std::map<Word, int> seen{{from, 0}};
  size_t max_len = std::max(from.size(), to.size()) + 4;
  size_t frontier_begin = 0;
  auto build = [&](int idx) {
    DerivationTrace t;
    t.start = from;
    t.end = nodes[idx].w;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
      t.steps.push_back(nodes[i].step);
    std::reverse(t.steps.begin(), t.steps.end());
    return t;
  };
  if (from == to) return build(0);
  for (int d = 0; d < depth; ++d) {
    size_t frontier_end = nodes.size();
    for (size_t n = frontier_begin; n < frontier_end; ++n) {
      Word cur = nodes[n].w;
      for (const auto& r : rules.rules) {
        if (r.zero_rule) continue;
        for (int dir = 0; dir < 2; ++dir) {
          const Word& pat = dir == 0 ? r.lhs : r.rhs;
          const Word& other = dir == 0 ? r.rhs : r.lhs;
          auto pv = bases_of(pat), ov = bases_of(other);
          if (!std::includes(pv.begin(), pv.end(), ov.begin(), ov.end()))
            continue;
          for (size_t pos = 0; pos < cur.size(); ++pos) {
            std::vector<std::pair<Substitution, size_t>> ms;
            Substitution s;
            match_from(pat, 0, cur, pos, s, ms, cur.size());
            for (auto& [sub, end] : ms) {
              Word next = apply_rule(cur, r, dir == 0, pos, sub);
              if (next.size() > max_len || seen.count(next)) continue;
              seen[next] = static_cast<int>(nodes.size());
              nodes.push_back({next, static_cast<int>(n),
                               DerivationStep{r.tag, dir == 0, pos, sub}});
              if (next == to) return build(static_cast<int>(nodes.size()) - 1);
            }
          }
        }
      }
    }
    frontier_begin = frontier_end;
    if (frontier_begin == nodes.size()) break;
  }
  return std::nullopt;
}

}  // namespace invsg
