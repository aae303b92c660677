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

#include "doctest.h"
#include "invsg/word.h"

using namespace invsg;

namespace {
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("parse and render") {
  CHECK(render(W("x y x*")) == "xyx*");
  CHECK(render(W("x^3 y")) == "x^3y");
  CHECK(render(W("x^3 y"), false) == "xxxy");
  CHECK(W("x*^2") == W("x* x*"));
  CHECK(parse_word(render(W("a b* b* c a"))) == W("a b* b* c a"));
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse_word("x y ^0");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("x Y"), ParseError);
  CHECK_THROWS_AS(parse_word("(x y)*"), ParseError);
  CHECK_THROWS_AS(parse_term("x ()"), ParseError);
  CHECK_THROWS_AS(parse_term("(x y"), ParseError);
}

TEST_CASE("terms flatten through the involution laws") {
  CHECK(flatten(parse_term("(x y)*")) == W("y* x*"));
  CHECK(flatten(parse_term("((x y*)* z)*")) == W("z* x y*"));
  CHECK(flatten(parse_term("(x*)*")) == W("x"));
  CHECK(flatten(parse_term("(x y)^2")) == W("x y x y"));
  CHECK(render_term(parse_term("(x y)* z")) == "(xy)*z");
}

TEST_CASE("star_word is an involutive antimorphism") {
  Word u = W("a b* c"), v = W("c c* a");
  CHECK(star_word(star_word(u)) == u);
  CHECK(star_word(concat({u, v})) == concat({star_word(v), star_word(u)}));
}

TEST_CASE("word statistics") {
  auto s = stats(W("x y x* z"));
  CHECK(s.length == 4);
  CHECK(s.head == make_letter('x'));
  CHECK(s.tail == make_letter('z'));
  CHECK(s.mixed_pairs == std::set<uint8_t>{'x' - 'a'});
  CHECK(s.simple_vars.count(make_letter('y')));
  CHECK_FALSE(s.simple_vars.count(make_letter('x')));
  CHECK(s.occ[make_letter('x', true)] == 1);
  CHECK(plain_occ(W("x y x*"), 'x' - 'a') == 2);
  CHECK(plain_projection(W("x y* x*")) == W("x y x"));
}

TEST_CASE("structure predicates") {
  CHECK(is_mixed(W("x y x*")));
  CHECK_FALSE(is_mixed(W("x y* x")));
  CHECK(is_connected(W("x y x")));
  CHECK_FALSE(is_connected(W("x y y x* z")));
  CHECK(is_connected(W("x y x z y z")));
  CHECK(is_connected(W("x")));
  CHECK(is_simple(W("x y* z")));
  CHECK_FALSE(is_simple(W("x y x*")));
  CHECK(are_disjoint(W("x y"), W("z z*")));
  CHECK_FALSE(are_disjoint(W("x y"), W("y*")));
  auto st = structure(W("a b a"));
  CHECK(st.is_bipartite);
  CHECK_FALSE(st.is_simple);
}

TEST_CASE("scattered subwords use greedy leftmost matching") {
  auto p = is_scattered_subword(W("x x* x"), W("a x b x* c x d"));
  REQUIRE(p);
  CHECK(*p == std::vector<size_t>{1, 3, 5});
  CHECK_FALSE(is_scattered_subword(W("x x"), W("x x* y")));
}
