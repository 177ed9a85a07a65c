/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/logic.hpp"

#include <optional>
#include <vector>

namespace valsat {

/* num / den with den > 0.  Kept as a pair so that points such as p / (1 + t)
 * compare exactly without expanding the inverse. */
struct SeriesFraction {
	HahnSeries num, den;

	SeriesFraction(HahnSeries n, HahnSeries d); /* DivisionByZero */
	explicit SeriesFraction(const HahnSeries &x);
	/* exact when den is a monomial; otherwise the inverse is expanded to
	 * relative order `precision` and carries a truncation bound */
	HahnSeries value(const Exponent &precision) const;
	std::string to_string() const;
};

int compare(const SeriesFraction &a, const SeriesFraction &b);

/* Finite union of points and open intervals: breakpoints b_1 < ... < b_m,
 * membership of each b_i and of the m + 1 gaps between them. */
struct IntervalSet {
	std::vector<SeriesFraction> points;
	std::vector<bool> at;  /* size m */
	std::vector<bool> gap; /* size m + 1 */

	bool is_empty() const;
	bool contains(const SeriesFraction &x) const;
	bool contains(const HahnSeries &x) const { return contains(SeriesFraction(x)); }
	/* the single point of a one-point set */
	std::optional<SeriesFraction> as_point() const;
	/* some member: the point of a point set, else the first member region's
	 * point or interior sample */
	std::optional<SeriesFraction> sample() const;

	static IntervalSet everything();
	IntervalSet complement() const;
	friend IntervalSet intersect(const IntervalSet &a, const IntervalSet &b);
	/* whether some member is <= y (resp. >= y) */
	bool meets_at_or_below(const SeriesFraction &y) const;
	bool meets_at_or_above(const SeriesFraction &y) const;
};

/* Solution set in `var` of a conjunction whose atoms are linear in `var`
 * once the other symbols are bound by env (NonlinearUnsupported). */
IntervalSet solution_set(const std::vector<Formula> &conj, const std::string &var, const Env &env);

bool satisfiable(const std::vector<Formula> &conj, const std::string &var, const Env &env);
bool entails(const std::vector<Formula> &conj, const Formula &f, const std::string &var, const Env &env);

struct CutBounds {
	std::optional<HahnSeries> lower, upper, point;
	std::optional<SeriesFraction> lower_exact, upper_exact;
	bool lower_closed = false, upper_closed = false;
	IntervalSet set;
};

/* Hull of the solution set: infimum and supremum, or the forced point.
 * Throws Unsatisfiable when the conjunction has no solution. */
CutBounds cut_bounds(const std::vector<Formula> &conj, const Env &env, const std::string &var = "x",
                     const std::optional<Exponent> &precision = std::nullopt);

} // namespace valsat
