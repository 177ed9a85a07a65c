/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include <doctest.h>

#include "valsat/errors.hpp"
#include "valsat/logic.hpp"

using namespace valsat;

namespace {
std::string qe(const std::string &s) { return doag_qe(parse_formula(s, 1)).to_string(); }
}

TEST_CASE("quantifier elimination in the group fragment")
{
	CHECK(qe("exists x (a < x and x < b)") == "a < b");
	CHECK(qe("exists x (2*x = a)") == "true");
	CHECK(qe("exists x (a < 3*x and 5*x < b and x = x)") == "5*a < 3*b");
	CHECK(qe("forall x (x < a or a < x + 1)") == "true");
	CHECK(qe("exists x (x < a and x = b)") == "b < a");
	CHECK(qe("exists x (x < x)") == "false");
	CHECK_THROWS_AS(doag_qe(parse_formula("exists x (x*x < a)", 1)), NotGroupFragment);
}

TEST_CASE("evaluation in the Hahn model")
{
	Env e(1);
	e = e.with("x", parse_series("1 + t", 1));
	CHECK(eval(parse_formula("x^2 < 2", 1), e));
	CHECK_FALSE(eval(parse_formula("x < 1", 1), e));
	CHECK(eval(parse_formula("t < x - 1 or t = x - 1", 1), e));
	CHECK(eval(parse_formula("0 < t and t < [t^(1/2)]", 1), Env(1)));
	CHECK_THROWS_AS(eval(parse_formula("y < 1", 1), Env(1)), UnboundSymbol);
	CHECK(eval(parse_formula("exists y (t < y and y < [t^(1/2)])", 1), Env(1)));
	CHECK_FALSE(eval(parse_formula("forall y (y < t)", 1), Env(1)));
}

TEST_CASE("simplification")
{
	CHECK(simplify(parse_formula("true and x < 1", 1)).to_string() == "x < 1");
	CHECK(simplify(parse_formula("x < 1 or not true", 1)).to_string() == "x < 1");
	CHECK(simplify(parse_formula("x < 1 and x < 1", 1)).to_string() == "x < 1");
}
