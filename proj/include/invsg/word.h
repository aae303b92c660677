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

#ifndef INVSG_WORD_H_
#define INVSG_WORD_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invsg {

constexpr int kAlphabetSize = 26;

// A letter of the free involution monoid: a base symbol 0..25 ('a'..'z')
// together with a star flag.
struct Letter {
  uint8_t base = 0;
  bool star = false;

  Letter starred() const { return Letter{base, !star}; }
  Letter plain() const { return Letter{base, false}; }
  char symbol() const { return static_cast<char>('a' + base); }

  friend bool operator==(Letter a, Letter b) {
    return a.base == b.base && a.star == b.star;
  }
  friend bool operator!=(Letter a, Letter b) { return !(a == b); }
  // Orders by base first, so sorting letters is alphabetical order.
  friend bool operator<(Letter a, Letter b) {
    return a.base != b.base ? a.base < b.base : a.star < b.star;
  }
};

using Word = std::vector<Letter>;

Letter make_letter(char c, bool star = false);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

struct Term {
  enum class Kind { kLeaf, kConcat, kStar };
  Kind kind = Kind::kLeaf;
  uint8_t base = 0;
  std::vector<std::shared_ptr<const Term>> children;

  static std::shared_ptr<const Term> leaf(uint8_t base);
  static std::shared_ptr<const Term> concat(
      std::vector<std::shared_ptr<const Term>> parts);
  static std::shared_ptr<const Term> star(std::shared_ptr<const Term> t);
};
using TermPtr = std::shared_ptr<const Term>;

Word parse_word(std::string_view text);
TermPtr parse_term(std::string_view text);
std::string render(const Word& w, bool compress = true);
std::string render_term(const TermPtr& t);

Word star_word(const Word& w);
Word flatten(const TermPtr& t);
Word plain_projection(const Word& w);
Word concat(std::initializer_list<Word> parts);

struct WordStats {
  std::set<Letter> content;
  std::map<Letter, int> occ;
  std::set<Letter> simple_vars;
  std::set<uint8_t> mixed_pairs;
  Letter head;
  Letter tail;
  size_t length = 0;
};

WordStats stats(const Word& w);

// Bases occurring in w (star flags ignored), ascending.
std::vector<uint8_t> bases_of(const Word& w);
// Number of occurrences of base b in the plain projection of w.
int plain_occ(const Word& w, uint8_t b);

std::optional<std::vector<size_t>> is_scattered_subword(const Word& p,
                                                        const Word& w);

struct Structure {
  bool is_mixed = false;
  bool is_bipartite = true;
  bool is_connected = true;
  bool is_simple = true;
};

Structure structure(const Word& w);
bool is_mixed(const Word& w);
bool is_connected(const Word& w);
bool is_simple(const Word& w);
bool are_disjoint(const Word& a, const Word& b);

}  // namespace invsg

#endif  // INVSG_WORD_H_
