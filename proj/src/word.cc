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

#include "invsg/word.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace invsg {

Letter make_letter(char c, bool star) {
  if (c < 'a' || c > 'z') throw std::invalid_argument("letter out of range");
  return Letter{static_cast<uint8_t>(c - 'a'), star};
}

TermPtr Term::leaf(uint8_t base) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::kLeaf;
  t->base = base;
  return t;
}

TermPtr Term::concat(std::vector<TermPtr> parts) {
  if (parts.size() == 1) return parts.front();
  auto t = std::make_shared<Term>();
  t->kind = Kind::kConcat;
  t->children = std::move(parts);
  return t;
}

TermPtr Term::star(TermPtr inner) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::kStar;
  t->children.push_back(std::move(inner));
  return t;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  TermPtr parse() {
    auto parts = factors();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected character");
    if (parts.empty()) fail("empty input");
    return Term::concat(std::move(parts));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::vector<TermPtr> factors() {
    std::vector<TermPtr> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c >= 'a' && c <= 'z') {
        ++pos_;
        out.push_back(suffixes(Term::leaf(static_cast<uint8_t>(c - 'a'))));
      } else if (c == '(') {
        size_t open = pos_;
        ++pos_;
        auto inner = factors();
        if (!peek(')')) fail("expected ')'");
        if (inner.empty()) {
          pos_ = open;
          fail("empty parentheses");
        }
        ++pos_;
        out.push_back(suffixes(Term::concat(std::move(inner))));
      } else {
        break;
      }
    }
    return out;
  }

  TermPtr suffixes(TermPtr t) {
    if (peek('*')) {
      ++pos_;
      t = Term::star(std::move(t));
    }
    if (peek('^')) {
      ++pos_;
      skip_space();
      size_t start = pos_;
      long k = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + (text_[pos_] - '0');
        if (k > 100000) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected exponent");
      if (k == 0) {
        pos_ = start;
        fail("exponent 0 not allowed");
      }
      std::vector<TermPtr> reps(static_cast<size_t>(k), t);
      t = Term::concat(std::move(reps));
    }
    return t;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

void flatten_into(const TermPtr& t, bool starred, Word& out) {
  switch (t->kind) {
    case Term::Kind::kLeaf:
      out.push_back(Letter{t->base, starred});
      break;
    case Term::Kind::kStar:
      flatten_into(t->children.front(), !starred, out);
      break;
    case Term::Kind::kConcat:
      if (starred) {
        for (auto it = t->children.rbegin(); it != t->children.rend(); ++it)
          flatten_into(*it, true, out);
      } else {
        for (const auto& c : t->children) flatten_into(c, false, out);
      }
      break;
  }
}

}  // namespace

TermPtr parse_term(std::string_view text) { return TermParser(text).parse(); }

Word parse_word(std::string_view text) {
  for (size_t i = 0; i < text.size(); ++i)
    if (text[i] == '(' || text[i] == ')')
      throw ParseError("parentheses not allowed in a word", i);
  return flatten(parse_term(text));
}

Word flatten(const TermPtr& t) {
  Word out;
  flatten_into(t, false, out);
  return out;
}

std::string render(const Word& w, bool compress) {
  std::string s;
  for (size_t i = 0; i < w.size();) {
    size_t j = i + 1;
    if (compress)
      while (j < w.size() && w[j] == w[i]) ++j;
    s += w[i].symbol();
    if (w[i].star) s += '*';
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string render_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::kLeaf:
      return std::string(1, static_cast<char>('a' + t->base));
    case Term::Kind::kStar: {
      const auto& c = t->children.front();
      if (c->kind == Term::Kind::kConcat)
        return "(" + render_term(c) + ")*";
      return render_term(c) + "*";
    }
    case Term::Kind::kConcat: {
      std::string s;
      for (const auto& c : t->children) {
        if (c->kind == Term::Kind::kConcat)
          s += "(" + render_term(c) + ")";
        else
          s += render_term(c);
      }
      return s;
    }
  }
  return {};
}

Word star_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.star = !l.star;
  return out;
}

Word plain_projection(const Word& w) {
  Word out = w;
  for (auto& l : out) l.star = false;
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<uint8_t> bases_of(const Word& w) {
  std::array<bool, kAlphabetSize> seen{};
  for (auto l : w) seen[l.base] = true;
  std::vector<uint8_t> out;
  for (int b = 0; b < kAlphabetSize; ++b)
    if (seen[b]) out.push_back(static_cast<uint8_t>(b));
  return out;
}

int plain_occ(const Word& w, uint8_t b) {
  int n = 0;
  for (auto l : w) n += l.base == b;
  return n;
}

WordStats stats(const Word& w) {
  if (w.empty()) throw std::invalid_argument("stats of the empty word");
  WordStats s;
  std::array<int, kAlphabetSize> plain{};
  for (auto l : w) {
    s.content.insert(l);
    ++s.occ[l];
    ++plain[l.base];
  }
  for (auto l : s.content) {
    if (plain[l.base] == 1) s.simple_vars.insert(l);
    if (s.content.count(l.starred())) s.mixed_pairs.insert(l.base);
  }
  s.head = w.front();
  s.tail = w.back();
  s.length = w.size();
  return s;
}

std::optional<std::vector<size_t>> is_scattered_subword(const Word& p,
                                                        const Word& w) {
  std::vector<size_t> pos;
  size_t j = 0;
  for (size_t i = 0; i < w.size() && j < p.size(); ++i) {
    if (w[i] == p[j]) {
      pos.push_back(i);
      ++j;
    }
  }
  if (j < p.size()) return std::nullopt;
  return pos;
}

bool is_mixed(const Word& w) {
  std::array<uint8_t, kAlphabetSize> seen{};
  for (auto l : w) seen[l.base] |= l.star ? 2 : 1;
  for (auto s : seen)
    if (s == 3) return true;
  return false;
}

bool is_connected(const Word& w) {
  // A split after position i is possible iff no base has an occurrence on
  // both sides.
  std::array<int, kAlphabetSize> last{};
  last.fill(-1);
  for (size_t i = 0; i < w.size(); ++i) last[w[i].base] = static_cast<int>(i);
  int reach = -1;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    reach = std::max(reach, last[w[i].base]);
    if (reach <= static_cast<int>(i)) return false;
  }
  return true;
}

bool is_simple(const Word& w) {
  std::array<int, kAlphabetSize> n{};
  for (auto l : w)
    if (++n[l.base] > 1) return false;
  return true;
}

Structure structure(const Word& w) {
  if (w.empty()) throw std::invalid_argument("structure of the empty word");
  Structure s;
  s.is_mixed = is_mixed(w);
  s.is_bipartite = !s.is_mixed;
  s.is_connected = is_connected(w);
  s.is_simple = is_simple(w);
  return s;
}

bool are_disjoint(const Word& a, const Word& b) {
  std::array<bool, kAlphabetSize> seen{};
  for (auto l : a) seen[l.base] = true;
  for (auto l : b)
    if (seen[l.base]) return false;
  return true;
}

}  // namespace invsg
