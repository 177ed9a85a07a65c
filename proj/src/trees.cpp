/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/trees.hpp"
#include "valsat/errors.hpp"

#include <algorithm>

namespace valsat {

BinString BinString::parse(std::string_view s)
{
	BinString b;
	for (std::size_t i = 0; i < s.size(); i++) {
		if (s[i] != '0' && s[i] != '1')
			throw SyntaxError("expected 0 or 1", i + 1);
		b.bits.push_back(s[i] == '1');
	}
	return b;
}

BinString BinString::prefix(std::size_t k) const
{
	return BinString(std::vector<bool>(bits.begin(), bits.begin() + static_cast<long>(std::min(k, bits.size()))));
}

BinString BinString::child(bool b) const
{
	BinString c = *this;
	c.bits.push_back(b);
	return c;
}

bool BinString::is_prefix_of(const BinString &o) const
{
	return bits.size() <= o.bits.size() && std::equal(bits.begin(), bits.end(), o.bits.begin());
}

std::string BinString::to_string() const
{
	std::string s;
	for (bool b : bits)
		s += b ? '1' : '0';
	return s;
}

std::string DyadicInterval::to_string() const
{
	return std::string(closed_lo ? "[" : "(") + valsat::to_string(lo) + ", " + valsat::to_string(hi) + ")";
}

TreeOracle TreeOracle::full()
{
	return TreeOracle([](const BinString &) { return true; });
}

TreeOracle TreeOracle::from_nodes(std::vector<BinString> nodes)
{
	return TreeOracle([nodes = std::move(nodes)](const BinString &s) {
		return std::find(nodes.begin(), nodes.end(), s) != nodes.end();
	});
}

bool TreeOracle::contains(const BinString &s) const
{
	for (std::size_t k = 0; k <= s.length(); k++)
		if (!raw_(s.prefix(k)))
			return false;
	return true;
}

namespace {
/* 1 when r >= q, 0 when r < q.  An approximation whose lower end reaches q
 * settles the digit, which places dyadic reals on the right. */
bool at_or_above(const OracleReal &r, const Rational &q, long budget)
{
	if (r.is_exact())
		return compare(r.constant_part(), q) >= 0;
	for (long n = 0; n <= budget; n++) {
		auto I = r.approx(n);
		if (I.lo >= q)
			return true;
		if (I.hi < q)
			return false;
	}
	throw BoundaryUndecided("cannot place the real against " + to_string(q) + " within precision " +
	                        std::to_string(budget));
}

void require_unit_interval(const OracleReal &r, long budget)
{
	if (!at_or_above(r, 0, budget) || at_or_above(r, 1, budget))
		throw PreconditionViolated("real must lie in [0, 1)");
}
} // namespace

DyadicInterval node_interval(const BinString &s)
{
	Rational lo = 0;
	for (std::size_t i = 0; i < s.length(); i++)
		if (s.bits[i])
			lo += pow2(-static_cast<long>(i + 1));
	lo.canonicalize();
	Rational hi = lo + pow2(-static_cast<long>(s.length()));
	hi.canonicalize();
	return {lo, hi, true};
}

std::vector<bool> binary_digits(const OracleReal &r, std::size_t k, long budget)
{
	require_unit_interval(r, budget);
	std::vector<bool> out;
	Rational lo = 0;
	for (std::size_t i = 0; i < k; i++) {
		Rational mid = lo + pow2(-static_cast<long>(i + 1));
		bool b = at_or_above(r, mid, budget);
		out.push_back(b);
		if (b)
			lo = mid;
	}
	return out;
}

std::vector<BinString> path_from_real(const TreeOracle &t, const OracleReal &r, std::size_t depth, long budget)
{
	auto digits = binary_digits(r, depth, budget);
	std::vector<BinString> chain;
	BinString s;
	for (std::size_t k = 0;; k++) {
		if (!t.raw(s))
			throw NodeNotInTree("node '" + s.to_string() + "' is not in the tree");
		chain.push_back(s);
		if (k == depth)
			break;
		s = s.child(digits[k]);
	}
	return chain;
}

DyadicInterval real_from_path(const std::vector<BinString> &chain)
{
	if (chain.empty())
		throw NotAChain("empty chain");
	for (std::size_t i = 0; i < chain.size(); i++)
		if (chain[i].length() != i || (i > 0 && !chain[i - 1].is_prefix_of(chain[i])))
			throw NotAChain("node " + std::to_string(i) + " ('" + chain[i].to_string() +
			                "') does not extend its predecessor by one bit");
	return node_interval(chain.back());
}

std::optional<BinString> find_path_bounded(const TreeOracle &t, std::size_t depth)
{
	/* raw membership is tested once per node; prefixes were tested on the way down */
	std::vector<BinString> stack{BinString()};
	while (!stack.empty()) {
		BinString s = std::move(stack.back());
		stack.pop_back();
		if (!t.raw(s))
			continue;
		if (s.length() == depth)
			return s;
		stack.push_back(s.child(true));
		stack.push_back(s.child(false));
	}
	return std::nullopt;
}

namespace {
RationalInterval from_digits(const std::vector<bool> &d)
{
	Rational lo = 0;
	for (std::size_t i = 0; i < d.size(); i++)
		if (d[i])
			lo += pow2(-static_cast<long>(i + 1));
	lo.canonicalize();
	Rational hi = lo + pow2(-static_cast<long>(d.size()));
	hi.canonicalize();
	return {lo, hi};
}
} // namespace

OracleReal join(const OracleReal &r1, const OracleReal &r2, long budget)
{
	require_unit_interval(r1, budget);
	require_unit_interval(r2, budget);
	return OracleReal::from_generator(
	    [r1, r2, budget](long n) {
		    const std::size_t k = static_cast<std::size_t>(std::max(0L, n));
		    auto a = binary_digits(r1, (k + 1) / 2, budget);
		    auto b = binary_digits(r2, k / 2, budget);
		    std::vector<bool> d;
		    for (std::size_t i = 0; i < k; i++)
			    d.push_back(i % 2 == 0 ? a[i / 2] : b[i / 2]);
		    return from_digits(d);
	    },
	    "join");
}

std::pair<OracleReal, OracleReal> deinterleave(const OracleReal &r, long budget)
{
	require_unit_interval(r, budget);
	auto part = [r, budget](std::size_t offset) {
		return OracleReal::from_generator(
		    [r, budget, offset](long n) {
			    const std::size_t k = static_cast<std::size_t>(std::max(0L, n));
			    auto all = binary_digits(r, 2 * k, budget);
			    std::vector<bool> d;
			    for (std::size_t i = 0; i < k; i++)
				    d.push_back(all[2 * i + offset]);
			    return from_digits(d);
		    },
		    offset == 0 ? "even-digits" : "odd-digits");
	};
	return {part(0), part(1)};
}

} // namespace valsat
