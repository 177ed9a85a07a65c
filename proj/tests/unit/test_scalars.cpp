/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include <doctest.h>

#include "valsat/coefficient.hpp"
#include "valsat/errors.hpp"
#include "valsat/number_field.hpp"

#include <random>

using namespace valsat;

TEST_CASE("sqrt2 + sqrt3 equals sqrt(5 + 2 sqrt6)")
{
	auto r2 = RealAlgebraic::sqrt(2), r3 = RealAlgebraic::sqrt(3), r6 = RealAlgebraic::sqrt(6);
	auto rhs = sqrt(r6.mul(2).add(5));
	CHECK((r2 + r3 - rhs).sign() == 0);
	CHECK(compare(r2 + r3, rhs) == 0);
}

TEST_CASE("sign of simple algebraics")
{
	CHECK(RealAlgebraic(Poly(std::vector<Rational>{-2, 0, 1}), 1, 2).sign() == 1);
	CHECK(RealAlgebraic(Poly::x(), -1, 1).sign() == 0);
}

TEST_CASE("oracle constructors obey width and nesting")
{
	auto half = OracleReal::constant(Rational(1, 2));
	CHECK(half.approx(3) == RationalInterval{Rational(1, 2), Rational(1, 2)});
	auto r2 = RealAlgebraic::sqrt(2);
	auto bin = OracleReal::binary_expansion(r2);
	auto iv = bin.approx(1);
	CHECK(iv.width() <= Rational(1, 2));
	CHECK(iv.lo >= 1);
	CHECK(iv.hi <= 2);
	CHECK(compare(r2, iv.lo) > 0);
	CHECK(compare(r2, iv.hi) < 0);
	std::vector<OracleReal> all{half, bin, OracleReal::ball(Rational(1, 3)),
	                            bin * OracleReal::ball(Rational(2, 3)),
	                            OracleReal::ball(Rational(-5, 7)).inverse(64), bin + bin.scaled(3)};
	for (const auto &o : all) {
		RationalInterval prev = o.approx(0);
		for (long n = 0; n <= 32; n++) {
			auto cur = o.approx(n);
			CHECK(cur.width() <= pow2(-n));
			CHECK(prev.contains(cur));
			prev = cur;
		}
	}
}

TEST_CASE("oracle contract violations are detected")
{
	auto wide = OracleReal::from_generator([](long) { return RationalInterval{0, 1}; }, "wide");
	CHECK_NOTHROW(wide.approx(0));
	CHECK_THROWS_AS(wide.approx(1), OracleFailure);
	auto jumpy = OracleReal::from_generator(
	    [](long n) {
		    Rational w = pow2(-n);
		    return n % 2 ? RationalInterval{0, w} : RationalInterval{-w, 0};
	    },
	    "jumpy");
	CHECK_THROWS_AS(jumpy.approx(3), OracleFailure);
}

TEST_CASE("coefficient comparison")
{
	CHECK(compare(CoefficientReal(Rational(2, 3)), CoefficientReal(Rational(1, 2))) == 1);
	CoefficientReal r2(RealAlgebraic::sqrt(2));
	CoefficientReal to15(OracleReal::ball(Rational(3, 2)));
	CHECK(compare(r2, to15, 10) == -1);
	CoefficientReal x(OracleReal::ball(Rational(1, 3)));
	CHECK(compare(x, x, 0) == 0);
	CHECK((x + (-x)).is_zero());
	CHECK(compare(x + r2, r2 + x, 0) == 0);
	CoefficientReal y(OracleReal::ball(Rational(1, 3)));
	CHECK_THROWS_AS(compare(x, y, 10), ComparisonUndecidedAtPrecision);
}

TEST_CASE("number field coordinates and relations")
{
	auto r2 = RealAlgebraic::sqrt(2), r3 = RealAlgebraic::sqrt(3), r8 = RealAlgebraic::sqrt(8);
	CHECK_FALSE(rational_relation(std::vector<RealAlgebraic>{r2, r3, RealAlgebraic(Rational(1))}));
	auto rel = rational_relation(std::vector<RealAlgebraic>{r2, r8});
	REQUIRE(rel);
	CHECK((*rel)[0] == -2 * (*rel)[1]);
	auto ex = express_in_span({r2, r3}, (r2 + r3).mul(5) - r3);
	REQUIRE(ex);
	CHECK((*ex)[0] == 5);
	CHECK((*ex)[1] == 4);
	CHECK_FALSE(express_in_span({r2}, r3));
	/* sqrt6 is not in the Q-span of sqrt2, sqrt3 but lies in their field */
	CHECK_FALSE(express_in_span({r2, r3, RealAlgebraic(Rational(1))}, r2 * r3));
}

TEST_CASE("coefficient relations with oracle atoms")
{
	CoefficientReal x(OracleReal::ball(Rational(1, 3)));
	CoefficientReal r2(RealAlgebraic::sqrt(2));
	auto rel = rational_relation({x, x + r2, r2});
	REQUIRE(rel);
	CHECK_THROWS_AS(rational_relation({x, r2}), ComparisonUndecidedAtPrecision);
	CHECK_FALSE(rational_relation({x, r2}, true));
}

namespace {
RealAlgebraic random_algebraic(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> deg(1, 4), coef(-6, 6);
	while (true) {
		int d = deg(rng);
		std::vector<Rational> c(d + 1);
		for (auto &x : c)
			x = coef(rng);
		if (c[d] == 0)
			c[d] = 1;
		Poly p = Poly(c).squarefree();
		auto roots = isolate_roots(p);
		if (roots.empty())
			continue;
		auto &r = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
		return RealAlgebraic(p, r.first, r.second);
	}
}
} // namespace

TEST_CASE("field laws on random algebraic triples")
{
	std::mt19937_64 rng(7);
	for (int i = 0; i < 12; i++) {
		std::uniform_int_distribution<int> small(-5, 5);
		CoefficientReal a = (i % 3 == 0) ? CoefficientReal(Rational(small(rng), 3))
		                                 : CoefficientReal(RealAlgebraic::sqrt(Rational(2 + i % 4)));
		CoefficientReal b(random_algebraic(rng));
		CoefficientReal c(RealAlgebraic(Rational(small(rng), 2)));
		if (i % 2)
			c = CoefficientReal(RealAlgebraic::sqrt(Rational(i + 1)));
		CHECK(equal((a + b) + c, a + (b + c)));
		CHECK(equal((a * b) * c, a * (b * c)));
		CHECK(equal(a * (b + c), a * b + a * c));
		if (!b.is_zero())
			CHECK(equal((a / b) * b, a));
	}
}

TEST_CASE("algebraic sign agrees with interval refinement")
{
	std::mt19937_64 rng(11);
	for (int i = 0; i < 500; i++) {
		auto a = random_algebraic(rng);
		int s = a.sign();
		auto iv = a.approx(40);
		if (s > 0)
			CHECK(iv.hi > 0);
		else if (s < 0)
			CHECK(iv.lo < 0);
		else
			CHECK(iv.contains(Rational(0)));
		auto b = random_algebraic(rng);
		int c = compare(a, b);
		CHECK(c == -compare(b, a));
		CHECK((c == 0) == (compare(a - b, Rational(0)) == 0));
	}
}
