/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/series.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace valsat {

/* Product of symbols with positive powers, factors sorted by name.  A
 * symbol is an identifier or a bracketed series constant "[...]". */
struct Monomial {
	std::vector<std::pair<std::string, int>> factors;

	int degree() const;
	int degree_in(const std::string &sym) const;
	Monomial without(const std::string &sym) const;
	bool is_constant() const { return factors.empty(); }
	std::string to_string() const;
	friend Monomial operator*(const Monomial &a, const Monomial &b);
	friend bool operator==(const Monomial &, const Monomial &) = default;
};

/* degree descending, then factor names; the constant sorts last */
struct MonomialOrder {
	bool operator()(const Monomial &a, const Monomial &b) const;
};

/* Polynomial with rational coefficients over symbols. */
class Term {
	std::map<Monomial, Rational, MonomialOrder> m_; /* nonzero coefficients */

public:
	Term() = default;
	static Term constant(const Rational &q);
	static Term symbol(const std::string &name);

	const std::map<Monomial, Rational, MonomialOrder> &monomials() const { return m_; }
	bool is_zero() const { return m_.empty(); }
	bool is_constant() const;
	Rational constant_value() const; /* coefficient of the empty monomial */
	int degree() const;
	int degree_in(const std::string &sym) const;
	std::set<std::string> symbols() const;

	/* term = a * sym + rest, requires degree_in(sym) <= 1 */
	std::pair<Term, Term> split_linear(const std::string &sym) const;
	Term substitute(const std::string &sym, const Term &by) const;

	Term operator-() const;
	friend Term operator+(const Term &a, const Term &b);
	friend Term operator-(const Term &a, const Term &b);
	friend Term operator*(const Term &a, const Term &b);
	friend Term operator*(const Rational &q, const Term &a);
	friend bool operator==(const Term &a, const Term &b) { return a.m_ == b.m_; }

	/* value in the Hahn model; `lookup` maps symbols to series */
	HahnSeries eval(const std::function<HahnSeries(const std::string &)> &lookup, std::size_t n) const;

	std::string to_string() const;
};

bool is_series_symbol(const std::string &sym);
/* "[" + canonical literal + "]" */
std::string series_symbol(const HahnSeries &s);

} // namespace valsat
