/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace valsat {

/* Dense univariate polynomial over Q, coefficients low to high.  The zero
 * polynomial has no coefficients; otherwise the last one is nonzero. */
class Poly {
	std::vector<Rational> c_;
	void trim();

public:
	Poly() = default;
	explicit Poly(std::vector<Rational> coeffs);
	static Poly constant(const Rational &q);
	static Poly x();
	/* from integer coefficients, low to high */
	static Poly from_integers(const std::vector<Integer> &coeffs);

	bool is_zero() const { return c_.empty(); }
	/* -1 for the zero polynomial */
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	const Rational &lc() const { return c_.back(); }
	Rational coeff(int i) const;
	const std::vector<Rational> &coeffs() const { return c_; }

	Rational eval(const Rational &x) const;
	int sign_at(const Rational &x) const { return sgn(eval(x)); }

	Poly derivative() const;
	Poly monic() const;
	/* primitive integer multiple with positive leading coefficient */
	std::vector<Integer> primitive_integer() const;
	static Poly primitive(const Poly &p) { return from_integers(p.primitive_integer()); }

	Poly shift(const Rational &a) const;     /* p(x + a) */
	Poly scale_var(const Rational &a) const; /* p(a x) */
	Poly reflect() const { return scale_var(-1); }
	Poly reverse() const;                    /* x^deg p(1/x) */

	friend Poly operator+(const Poly &a, const Poly &b);
	friend Poly operator-(const Poly &a, const Poly &b);
	friend Poly operator-(const Poly &a);
	friend Poly operator*(const Poly &a, const Poly &b);
	friend Poly operator*(const Rational &q, const Poly &p);
	friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }

	/* quotient, remainder */
	static std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
	static Poly gcd(const Poly &a, const Poly &b); /* monic, or zero */
	Poly squarefree() const;                     /* monic square-free part */

	std::string to_string() const;
};

Rational resultant(const Poly &f, const Poly &g);

/* Unique polynomial of degree < points.size() through the given points. */
Poly interpolate(const std::vector<std::pair<Rational, Rational>> &points);

/* Sturm chain of a square-free polynomial. */
class SturmChain {
	std::vector<Poly> chain_;
	int variations(const Rational &x) const;

public:
	explicit SturmChain(const Poly &p);
	/* number of distinct real roots in the closed interval [lo, hi] */
	int count_closed(const Rational &lo, const Rational &hi) const;
	const Poly &poly() const { return chain_.front(); }
};

/* A bound B with every real root in (-B, B). */
Rational root_bound(const Poly &p);

/* Disjoint closed isolating intervals for every real root of a square-free
 * polynomial, left to right.  Degenerate intervals mark rational roots hit
 * by a bisection point. */
std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly &p);

/* Irreducible factors over Z of a square-free primitive integer polynomial of
 * positive degree, each primitive with positive leading coefficient, in a
 * deterministic order.  Zassenhaus: factor modulo a prime, Hensel lift,
 * recombine. */
std::vector<std::vector<Integer>> factor_squarefree(const std::vector<Integer> &f);

} // namespace valsat
