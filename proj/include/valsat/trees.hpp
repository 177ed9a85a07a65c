/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/oracle.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace valsat {

struct BinString {
	std::vector<bool> bits;

	BinString() = default;
	explicit BinString(std::vector<bool> b) : bits(std::move(b)) {}
	/* "0110"; the empty string is the root.  SyntaxError on other chars */
	static BinString parse(std::string_view s);

	std::size_t length() const { return bits.size(); }
	BinString prefix(std::size_t k) const;
	BinString child(bool b) const;
	bool is_prefix_of(const BinString &o) const;
	std::string to_string() const;
	friend bool operator==(const BinString &, const BinString &) = default;
};

/* [lo, hi) when closed_lo, else (lo, hi) */
struct DyadicInterval {
	Rational lo, hi;
	bool closed_lo = true;

	bool contains(const Rational &q) const { return (closed_lo ? lo <= q : lo < q) && q < hi; }
	std::string to_string() const;
};

/* Membership is evaluated on every prefix, so the tree seen by callers is
 * prefix closed whatever the raw predicate does. */
class TreeOracle {
	std::function<bool(const BinString &)> raw_;

public:
	explicit TreeOracle(std::function<bool(const BinString &)> raw) : raw_(std::move(raw)) {}
	static TreeOracle full();
	static TreeOracle from_nodes(std::vector<BinString> nodes);

	bool raw(const BinString &s) const { return raw_(s); }
	bool contains(const BinString &s) const;
};

/* lo = sum s_i 2^-(i+1), width 2^-length */
DyadicInterval node_interval(const BinString &s);

/* Chain root, ..., node of length `depth` whose intervals contain r.
 * BoundaryUndecided when a bit cannot be settled within the precision
 * budget; NodeNotInTree when the chain leaves T. */
std::vector<BinString> path_from_real(const TreeOracle &t, const OracleReal &r, std::size_t depth,
                                      long budget = default_precision_budget());

/* interval of the deepest node; NotAChain unless each node extends the
 * previous one by one bit starting from the root */
DyadicInterval real_from_path(const std::vector<BinString> &chain);

/* leftmost node of length depth in T, depth-first with pruning */
std::optional<BinString> find_path_bounded(const TreeOracle &t, std::size_t depth);

/* first k binary digits of r in [0, 1), half-open convention */
std::vector<bool> binary_digits(const OracleReal &r, std::size_t k, long budget = default_precision_budget());

/* interleaves digits: r1 on even positions, r2 on odd ones */
OracleReal join(const OracleReal &r1, const OracleReal &r2, long budget = default_precision_budget());
std::pair<OracleReal, OracleReal> deinterleave(const OracleReal &r, long budget = default_precision_budget());

} // namespace valsat
