/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include <doctest.h>

#include "valsat/errors.hpp"
#include "valsat/number_field.hpp"
#include "valsat/valuation.hpp"

#include <random>

using namespace valsat;

namespace {
HahnSeries S(const char *text, std::size_t n = 1) { return parse_series(text, n); }

/* rank of the Q-span of series with rational coefficients, by exact
 * elimination on coefficient vectors over the union of supports */
std::size_t rational_rank(const std::vector<HahnSeries> &gs)
{
	std::vector<Exponent> support;
	for (const auto &g : gs)
		for (const auto &t : g.terms())
			if (std::find(support.begin(), support.end(), t.exp) == support.end())
				support.push_back(t.exp);
	std::vector<std::vector<Rational>> rows;
	for (const auto &g : gs) {
		std::vector<Rational> r;
		for (const auto &e : support)
			r.push_back(g.coefficient(e).rational());
		rows.push_back(r);
	}
	if (support.empty())
		return 0;
	return row_reduce(rows).size();
}

void check_span(const std::vector<HahnSeries> &gs, const SpanBasis &b)
{
	for (std::size_t i = 0; i < b.size(); i++) {
		HahnSeries c(gs[0].dim());
		for (std::size_t j = 0; j < gs.size(); j++)
			c = c + CoefficientReal(b.change_of_basis[i][j]) * gs[j];
		CHECK(compare_series(c, b.generators[i]) == 0);
	}
	for (const auto &g : gs)
		CHECK(express_in_basis(b, g).has_value());
}
} // namespace

TEST_CASE("valuation independence")
{
	CHECK(is_valuation_independent({S("t"), S("t^2")}));
	CHECK_FALSE(is_valuation_independent({S("t"), S("2*t")}));
	CHECK_FALSE(is_valuation_independent({S("t + t^2"), S("t")}));
	CHECK(is_valuation_independent({S("t"), S("alg[-2,0,1;1,2]*t")}));
}

TEST_CASE("valuation basis")
{
	auto b1 = valuation_basis({S("t")});
	REQUIRE(b1.size() == 1);
	CHECK(b1.generators[0].to_string() == "t^(1)");

	std::vector<HahnSeries> in2{S("t + t^2"), S("t")};
	auto b2 = valuation_basis(in2);
	REQUIRE(b2.size() == 2);
	CHECK(b2.generators[0].to_string() == "t^(2)");
	CHECK(b2.generators[1].to_string() == "t^(1)");
	CHECK(is_valuation_independent(b2.generators));
	check_span(in2, b2);

	std::vector<HahnSeries> in3{S("t"), S("t^2"), S("t + t^2")};
	auto b3 = valuation_basis(in3);
	CHECK(b3.size() == rational_rank(in3));
	CHECK(b3.size() == 2);
	check_span(in3, b3);

	auto b4 = valuation_basis({S("-t"), S("alg[-2,0,1;1,2]*t"), S("3 - t^(1/2)")});
	REQUIRE(b4.size() == 3);
	CHECK(b4.class_reps.size() == 2);
	for (const auto &g : b4.generators)
		CHECK(sign(g) > 0);
	CHECK(b4.component_reals[1].to_string() == "alg[-2,0,1;1,2]");
}

TEST_CASE("term sign")
{
	auto b = valuation_basis({S("t"), S("alg[-2,0,1;1,2]*t")});
	CHECK(term_sign({0, 0}, b) == 0);
	CHECK(term_sign({-3, 2}, b) == -1);
	CHECK(term_sign({-3, 2}, b) == sign(b.combine({-3, 2})));
	auto b1 = valuation_basis({S("t^(1/2)")});
	CHECK(term_sign({Rational(-1, 5)}, b1) == -1);
}

TEST_CASE("term sign agrees with series comparison")
{
	std::vector<std::vector<HahnSeries>> inputs{
	    {S("t"), S("t^2"), S("1")},
	    {S("t"), S("alg[-2,0,1;1,2]*t"), S("t^(1/2) - t")},
	    {S("1 + t"), S("alg[-3,0,1;1,2] - 4*t^3"), S("-t^2")},
	    {S("t^(0,1)", 2), S("t^(1,0)", 2), S("alg[-2,0,1;1,2]*t^(1,0)", 2)},
	};
	for (const auto &gs : inputs) {
		auto b = valuation_basis(gs);
		REQUIRE(b.size() == 3);
		for (int s0 = -3; s0 <= 3; s0++)
			for (int s1 = -3; s1 <= 3; s1++)
				for (int s2 = -3; s2 <= 3; s2++) {
					std::vector<Rational> s{s0, s1, s2};
					CHECK(term_sign(s, b) == sign(b.combine(s)));
				}
	}
}

TEST_CASE("valuation basis identity on random rational vectors")
{
	std::mt19937_64 rng(9);
	std::vector<std::vector<HahnSeries>> inputs{
	    {S("t + t^2 + t^3"), S("t^2 - t^3"), S("2*t + t^3"), S("t^(1/2)")},
	    {S("1 + t"), S("1 - t"), S("alg[-2,0,1;1,2] + t^2")},
	};
	for (const auto &gs : inputs) {
		auto b = valuation_basis(gs);
		CHECK(is_valuation_independent(b.generators));
		check_span(gs, b);
		for (int k = 0; k < 200; k++) {
			std::vector<Rational> q(b.size());
			bool any = false;
			for (auto &x : q) {
				x = Rational(int(rng() % 7) - 3, 1 + int(rng() % 8));
				x.canonicalize();
				any |= x != 0;
			}
			if (!any)
				continue;
			Value expect = Value::infinity();
			for (std::size_t i = 0; i < q.size(); i++)
				if (q[i] != 0)
					expect = std::min(expect, valuation(b.generators[i]));
			CHECK(valuation(b.combine(q)) == expect);
		}
	}
}

TEST_CASE("pseudo-Cauchy sequences")
{
	auto partial = [](std::size_t i) {
		HahnSeries s(1);
		for (std::size_t j = 0; j <= i; j++)
			s = s + HahnSeries::monomial(Exponent::unit(1, Rational(long(j))));
		return s;
	};
	PseudoSequence sums(partial, 32);
	CHECK(check_pseudo_cauchy(sums, 5));
	std::vector<HahnSeries> lin;
	for (int i = 0; i < 3; i++)
		lin.push_back(CoefficientReal(i) * S("t"));
	CHECK_FALSE(check_pseudo_cauchy(PseudoSequence(lin), 3));
	/* a_i = sum_{j<=i} t^(2 - 1/j) / j! */
	PseudoSequence fact(
	    [](std::size_t i) {
		    HahnSeries s(1);
		    Rational f = 1;
		    for (std::size_t j = 1; j <= i + 1; j++) {
			    f /= long(j);
			    s = s + HahnSeries::monomial(Exponent::unit(1, 2 - Rational(1, long(j))), f);
		    }
		    return s;
	    },
	    16);
	CHECK(check_pseudo_cauchy(fact, 6));
	CHECK_THROWS_AS(check_pseudo_cauchy(fact, 17), TruncationInsufficient);

	auto x = pseudo_limit(sums, 4);
	CHECK(x.to_string() == "1 + t^(1) + t^(2) + t^(3)");
	CHECK(is_pseudo_limit(x, sums.prefix(4)));

	std::vector<HahnSeries> three{S("1"), S("1 + t"), S("1 + t + 5*t^3")};
	auto y = pseudo_limit(PseudoSequence(three), 3);
	CHECK(is_pseudo_limit(y, three));
	/* last element is an alternative witness */
	CHECK(is_pseudo_limit(sums.prefix(6).back(), sums.prefix(6)));

	/* tails break the leading-monomial formula; the fallback still works */
	std::vector<HahnSeries> tails{S("0"), S("t + t^(3/2)"), S("t + t^(3/2) + t^2"), S("t + t^(3/2) + t^2 + t^3")};
	auto z = pseudo_limit(PseudoSequence(tails), 4);
	CHECK(is_pseudo_limit(z, tails));

	std::vector<HahnSeries> flat{S("1"), S("1 + t"), S("1 + t")};
	CHECK_THROWS_AS(pseudo_limit(PseudoSequence(flat), 3), PreconditionViolated);
}
