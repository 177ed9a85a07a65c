/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/coefficient.hpp"
#include "valsat/exponent.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace valsat {

struct SeriesTerm {
	Exponent exp;
	CoefficientReal coeff;
};

/* Finite-support Hahn series sum c_g t^g, exponents in Q^n (lex).  t^g with
 * g > 0 is a positive infinitesimal.  An optional truncation bound records
 * that terms at or above it were discarded. */
class HahnSeries {
	std::size_t n_ = 1;
	std::vector<SeriesTerm> terms_; /* strictly increasing exponents, nonzero coefficients */
	std::optional<Exponent> trunc_;

	void apply_trunc();

public:
	HahnSeries() = default;
	explicit HahnSeries(std::size_t n) : n_(n) {}
	/* terms in any order; equal exponents are summed and zeros dropped */
	HahnSeries(std::size_t n, std::vector<SeriesTerm> terms, std::optional<Exponent> trunc = std::nullopt);

	static HahnSeries constant(std::size_t n, const CoefficientReal &c);
	static HahnSeries monomial(const Exponent &e, const CoefficientReal &c = CoefficientReal(1));
	/* the infinitesimal t^(1,0,...,0) */
	static HahnSeries t(std::size_t n);

	std::size_t dim() const { return n_; }
	const std::vector<SeriesTerm> &terms() const { return terms_; }
	const std::optional<Exponent> &trunc() const { return trunc_; }
	bool is_zero() const { return terms_.empty() && !trunc_; }
	/* no stored terms; with a truncation bound this is only "small" */
	bool has_no_terms() const { return terms_.empty(); }

	Value valuation() const;
	const SeriesTerm &leading() const; /* nonzero */
	CoefficientReal coefficient(const Exponent &e) const;
	HahnSeries leading_monomial() const;
	/* drops terms with exponent >= bound and records it */
	HahnSeries truncated(const Exponent &bound) const;
	HahnSeries without_trunc() const;

	HahnSeries operator-() const;
	friend HahnSeries operator+(const HahnSeries &a, const HahnSeries &b);
	friend HahnSeries operator-(const HahnSeries &a, const HahnSeries &b);
	friend HahnSeries operator*(const HahnSeries &a, const HahnSeries &b);
	friend HahnSeries operator*(const CoefficientReal &c, const HahnSeries &a);

	/* literal form; coefficient 1 omitted, zero exponent prints the
	 * coefficient alone */
	std::string to_string() const;
};

Value valuation(const HahnSeries &x);

/* y with v(x y - 1) >= order - v(x); exact when x is a monomial.  In
 * dimension >= 2 the geometric series may not reach the bound; the result's
 * truncation marker is then lowered to what was actually computed. */
HahnSeries invert(const HahnSeries &x, const Exponent &order);

/* sign of x - y from the leading coefficient of the difference */
int compare_series(const HahnSeries &x, const HahnSeries &y, long budget = default_precision_budget());
inline int sign(const HahnSeries &x) { return compare_series(x, HahnSeries(x.dim())); }

CoefficientReal residue(const HahnSeries &a);
CoefficientReal arch_ratio(const HahnSeries &y, const HahnSeries &x);
HahnSeries monomial(const Exponent &e, const CoefficientReal &c);

/* Parses the series literal grammar in dimension n. */
HahnSeries parse_series(std::string_view text, std::size_t n);
/* Parses "(q1,...,qn)" or a bare rational q meaning (q,0,...,0). */
Exponent parse_exponent(std::string_view text, std::size_t n);

} // namespace valsat
