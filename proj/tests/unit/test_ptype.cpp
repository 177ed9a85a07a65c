/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include <doctest.h>

#include "valsat/errors.hpp"
#include "valsat/ptype.hpp"

using namespace valsat;

namespace {
std::vector<std::string> first(const TypeSpec &s, std::size_t k)
{
	std::vector<std::string> out;
	for (const auto &f : s.type.prefix(k, 10 * k + 10))
		out.push_back(f.to_string());
	return out;
}
} // namespace

TEST_CASE("modes")
{
	CHECK(parse_mode("group") == Mode::Group);
	CHECK(parse_mode("field") == Mode::Field);
	CHECK(to_string(Mode::Field) == "field");
	CHECK_THROWS_AS(parse_mode("ring"), PreconditionViolated);
}

TEST_CASE("type file: params, formulas, comments")
{
	auto s = parse_type_file("# a comment\nparam g = t^2 + 1\n\nformula 0 < x   # trailing\nformula x < g\n", 1,
	                         Mode::Group);
	REQUIRE(s.params.size() == 1);
	CHECK(s.params[0].first == "g");
	CHECK(s.params[0].second.to_string() == "1 + t^(2)");
	CHECK(first(s, 5) == std::vector<std::string>{"0 < x", "x < g"});
	CHECK(s.signature().symbols == std::vector<std::string>{"x", "g"});
	CHECK(s.env().lookup("g").to_string() == "1 + t^(2)");
	CHECK(!s.type.exact_point);
}

TEST_CASE("type file: generators interleave after formulas")
{
	auto s = parse_type_file("param g = 1\nparam h = t\nformula 0 < x\ngenerator above_all h\ngenerator beta g h\n", 1,
	                         Mode::Group);
	CHECK(first(s, 6) == std::vector<std::string>{"0 < x", "h < x", "h < x", "2*h < x", "x < g", "3*h < x"});
}

TEST_CASE("type file: residue cut brackets")
{
	auto s = parse_type_file("param g = t\ngenerator residue_cut g alg[-2,0,1;1,2]\n", 1, Mode::Group);
	CHECK(first(s, 6) == std::vector<std::string>{"g < x", "x < 2*g", "g < x", "2*x < 3*g", "5*g < 4*x",
	                                               "2*x < 3*g"});
}

TEST_CASE("type file: exact cuts")
{
	auto s = parse_type_file("param g = t\ngenerator series_cut [2*t]\n", 1, Mode::Group);
	REQUIRE(s.type.exact_point);
	CHECK(s.type.exact_point->to_string() == "2*t^(1)");
	auto fs = s.type.prefix(30, 30);
	Env e = s.env().with("x", *s.type.exact_point);
	for (const auto &f : fs)
		CHECK(eval(f, e));

	auto p = parse_type_file("generator partial_sums 3\n", 1, Mode::Field);
	REQUIRE(p.type.exact_point);
	CHECK(p.type.exact_point->to_string() == "1 + t^(1/2) + t^(2/3)");
}

TEST_CASE("type file: errors carry the line")
{
	auto expect_syntax = [](const char *text, const std::string &prefix) {
		try {
			parse_type_file(text, 1, Mode::Group);
			FAIL("expected SyntaxError");
		} catch (const SyntaxError &e) {
			CHECK(std::string(e.what()).rfind(prefix, 0) == 0);
		}
	};
	expect_syntax("param g = t\nformula x <\n", "line 2:");
	expect_syntax("bogus 1\n", "line 1: unknown construct");
	expect_syntax("param t = 1\n", "line 1: bad parameter name");
	expect_syntax("param g = 1\nparam g = 2\n", "line 2: parameter 'g' declared twice");
	expect_syntax("generator above_all h\n", "line 1: unknown parameter 'h'");
	expect_syntax("param g = 1\ngenerator beta g\n", "line 2: generator 'beta' takes 2");
	expect_syntax("generator partial_sums zero\n", "line 1: partial_sums expects");
	expect_syntax("generator series_cut [t\n", "line 1: unbalanced brackets");
	CHECK_THROWS_AS(parse_type_file("formula x < y\n", 1, Mode::Group), UnboundSymbol);
}

TEST_CASE("partial types from lists and predicates")
{
	auto t = PartialType::from_formulas({parse_formula("0 < x", 1)}, {});
	CHECK(t.prefix(5, 50).size() == 1);
	Signature sig;
	auto d = PartialType::decidable(sig, [](const Formula &f) { return f.to_string().find("x") != std::string::npos; });
	auto fs = d.prefix(3, 100);
	REQUIRE(fs.size() == 3);
	CHECK(fs[0].to_string() == "0 < x");
	CHECK(fs[1].to_string() == "x < 0");
}
