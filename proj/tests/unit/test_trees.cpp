/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include <doctest.h>

#include "valsat/errors.hpp"
#include "valsat/trees.hpp"

#include <random>

using namespace valsat;

namespace {
BinString B(const char *s) { return BinString::parse(s); }

std::vector<std::string> chain_strings(const std::vector<BinString> &c)
{
	std::vector<std::string> out;
	for (const auto &s : c)
		out.push_back(s.to_string());
	return out;
}
} // namespace

TEST_CASE("node intervals")
{
	CHECK(node_interval(B("")).to_string() == "[0, 1)");
	CHECK(node_interval(B("1")).to_string() == "[1/2, 1)");
	CHECK(node_interval(B("101")).to_string() == "[5/8, 3/4)");
	CHECK_THROWS_AS(BinString::parse("012"), SyntaxError);
}

TEST_CASE("coding laws up to length 8")
{
	std::vector<BinString> all{BinString()};
	for (std::size_t i = 0; all[i].length() < 8; i++) {
		all.push_back(all[i].child(false));
		all.push_back(all[i].child(true));
	}
	for (const auto &s : all) {
		auto I = node_interval(s);
		CHECK(I.hi - I.lo == pow2(-static_cast<long>(s.length())));
	}
	std::mt19937 rng(3);
	std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
	for (int k = 0; k < 20000; k++) {
		const auto &a = all[pick(rng)], &b = all[pick(rng)];
		auto I = node_interval(a), J = node_interval(b);
		if (a.is_prefix_of(b))
			CHECK((I.lo <= J.lo && J.hi <= I.hi));
		else if (!b.is_prefix_of(a))
			CHECK((I.hi <= J.lo || J.hi <= I.lo));
	}
}

TEST_CASE("paths from reals")
{
	auto third = OracleReal::binary_expansion(RealAlgebraic(Rational(1, 3)));
	CHECK(chain_strings(path_from_real(TreeOracle::full(), third, 3)) ==
	      std::vector<std::string>{"", "0", "01", "010"});
	CHECK(chain_strings(path_from_real(TreeOracle::full(), OracleReal::constant(0), 2)) ==
	      std::vector<std::string>{"", "0", "00"});
	/* dyadic reals take the right child */
	CHECK(chain_strings(path_from_real(TreeOracle::full(), OracleReal::constant(Rational(1, 2)), 2)) ==
	      std::vector<std::string>{"", "1", "10"});
	CHECK_THROWS_AS(path_from_real(TreeOracle::full(), OracleReal::ball(Rational(1, 2)), 2, 20), BoundaryUndecided);
	auto only_left = TreeOracle([](const BinString &s) { return s.length() == 0 || !s.bits[0]; });
	CHECK_THROWS_AS(path_from_real(only_left, OracleReal::constant(Rational(3, 4)), 2), NodeNotInTree);
	CHECK_THROWS_AS(path_from_real(TreeOracle::full(), OracleReal::constant(1), 2), PreconditionViolated);

	auto r2 = OracleReal::binary_expansion(sqrt(RealAlgebraic(Rational(2)))).shifted(RealAlgebraic(Rational(-1)));
	auto chain = path_from_real(TreeOracle::full(), r2, 20);
	auto I = real_from_path(chain);
	CHECK(I.hi - I.lo == pow2(-20));
	auto a = r2.approx(30);
	CHECK((I.lo <= a.lo && a.hi <= I.hi));
}

TEST_CASE("reals from paths")
{
	CHECK(real_from_path({B(""), B("1"), B("10")}).to_string() == "[1/2, 3/4)");
	CHECK_THROWS_AS(real_from_path({B(""), B("1"), B("00")}), NotAChain);
	CHECK_THROWS_AS(real_from_path({B("1")}), NotAChain);
}

TEST_CASE("bounded path search")
{
	CHECK(find_path_bounded(TreeOracle::full(), 5)->to_string() == "00000");
	auto chain10 = TreeOracle([](const BinString &s) {
		for (std::size_t i = 0; i < s.length(); i++)
			if (s.bits[i] != (i == 0))
				return false;
		return true;
	});
	CHECK(find_path_bounded(chain10, 3)->to_string() == "100");
	auto finite = TreeOracle([](const BinString &s) { return s.length() <= 2; });
	CHECK_FALSE(find_path_bounded(finite, 3));

	/* agrees with exhaustive search on random prefix-closed trees */
	std::mt19937 rng(5);
	for (int trial = 0; trial < 50; trial++) {
		unsigned seed = rng();
		auto t = TreeOracle([seed](const BinString &s) {
			unsigned long h = seed;
			for (bool b : s.bits)
				h = h * 1000003UL + (b ? 7 : 3);
			return s.length() == 0 || (h >> 7) % 5 != 0;
		});
		for (std::size_t d = 0; d <= 8; d++) {
			std::optional<BinString> brute;
			for (unsigned long v = 0; v < (1UL << d) && !brute; v++) {
				BinString s;
				for (std::size_t i = 0; i < d; i++)
					s.bits.push_back((v >> (d - 1 - i)) & 1);
				if (t.contains(s))
					brute = s;
			}
			auto got = find_path_bounded(t, d);
			CHECK(got.has_value() == brute.has_value());
			if (got && brute)
				CHECK(*got == *brute);
		}
	}
}

TEST_CASE("joins")
{
	auto zero = OracleReal::constant(0);
	CHECK(join(zero, zero).approx(20).contains(Rational(0)));
	auto half = OracleReal::constant(Rational(1, 2));
	auto j = join(half, zero);
	CHECK(j.approx(30).contains(Rational(1, 2)));
	CHECK(binary_digits(j, 6) == std::vector<bool>{1, 0, 0, 0, 0, 0});

	auto r1 = OracleReal::binary_expansion(RealAlgebraic(Rational(1, 3)));
	auto r2 = OracleReal::binary_expansion(sqrt(RealAlgebraic(Rational(2)))).shifted(RealAlgebraic(Rational(-1)));
	auto [a, b] = deinterleave(join(r1, r2));
	auto ia = a.approx(20), ib = b.approx(20);
	CHECK(ia.contains(Rational(1, 3)));
	CHECK(ib.width() <= pow2(-20));
	auto exact = r2.approx(40);
	CHECK((ib.lo <= exact.hi && exact.lo <= ib.hi));
	/* digit interleaving reference */
	auto d1 = binary_digits(r1, 10), d2 = binary_digits(r2, 10), dj = binary_digits(join(r1, r2), 20);
	for (std::size_t i = 0; i < 20; i++)
		CHECK(dj[i] == (i % 2 == 0 ? d1[i / 2] : d2[i / 2]));
}
