/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include <doctest.h>

#include "valsat/errors.hpp"
#include "valsat/formula.hpp"

using namespace valsat;

namespace {
std::string canon(const char *s) { return parse_formula(s, 1).to_string(); }
} // namespace

TEST_CASE("atoms are collected and canonical")
{
	CHECK(canon("2*x - g1 < 3*g2") == "2*x < g1 + 3*g2");
	CHECK(canon("x/2 < y/3") == "3*x < 2*y");
	CHECK(canon("2*x = 4*g1") == "2*g1 = x");
	CHECK(canon("x = g1") == "g1 = x");
	CHECK(canon("x > y") == "y < x");
	CHECK(canon("x <= y") == "x < y or x = y");
	CHECK(canon("x != y") == "not x = y");
	CHECK(canon("1 < 2") == "true");
	CHECK(canon("x - x < 0") == "false");
	CHECK(canon("(x + 1)^2 < 2") == "x^2 + 2*x < 1");
	CHECK(canon("x < [t^2]") == "x < [t^(2)]");
	CHECK(canon("x < [3]") == "x < 3");
	CHECK(canon("x*g1 + g1*x < t") == "2*g1*x < t");
}

TEST_CASE("connectives and precedence")
{
	CHECK(canon("a < b and (c < d and e < f)") == "a < b and c < d and e < f");
	CHECK(canon("(a < b or c < d) and e < f") == "(a < b or c < d) and e < f");
	CHECK(canon("not (a < b and c < d)") == "not (a < b and c < d)");
	CHECK(canon("not a < b") == "not a < b");
	CHECK(canon("a < b -> c < d -> e < f") == "a < b -> c < d -> e < f");
	CHECK(canon("(a < b -> c < d) -> e < f") == "(a < b -> c < d) -> e < f");
	CHECK(canon("a < b <-> c < d") == "a < b <-> c < d");
	CHECK(canon("exists x (a < x and x < b)") == "exists x (a < x and x < b)");
	CHECK(canon("forall x x = x") == "forall x (true)");
	CHECK(canon("((a < b))") == "a < b");
}

TEST_CASE("syntax errors carry a column")
{
	try {
		parse_formula("x <", 1);
		FAIL("expected a syntax error");
	} catch (const SyntaxError &e) {
		CHECK(e.column == 4);
	}
	CHECK_THROWS_AS(parse_formula("x < y)", 1), SyntaxError);
	CHECK_THROWS_AS(parse_formula("and < y", 1), SyntaxError);
	CHECK_THROWS_AS(parse_formula("x < [t^(1,2)]", 1), DimensionMismatch);
}
