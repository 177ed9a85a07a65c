/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/poly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace valsat {

struct RationalInterval {
	Rational lo, hi;

	Rational width() const { return hi - lo; }
	bool contains(const Rational &q) const { return lo <= q && q <= hi; }
	bool contains(const RationalInterval &o) const { return lo <= o.lo && o.hi <= hi; }
	friend bool operator==(const RationalInterval &, const RationalInterval &) = default;
};

/* A real algebraic number: the unique root of an irreducible primitive
 * integer polynomial inside a closed rational interval.  Construction from
 * any polynomial reduces it to the minimal polynomial of the isolated root,
 * so two values are equal iff they share the polynomial and the root. */
class RealAlgebraic {
	Poly poly_;
	Rational lo_, hi_;

	RealAlgebraic(Poly minimal, Rational lo, Rational hi, int);

public:
	/* Throws MalformedAlgebraic unless [lo, hi] holds exactly one root of
	 * the (square-free part of the) polynomial. */
	RealAlgebraic(const Poly &p, const Rational &lo, const Rational &hi);
	explicit RealAlgebraic(const Rational &q);

	static RealAlgebraic sqrt(const Rational &q); /* q > 0 */

	const Poly &poly() const { return poly_; }
	int degree() const { return poly_.degree(); }
	bool is_rational() const { return poly_.degree() == 1; }
	Rational to_rational() const; /* requires is_rational() */
	RationalInterval isolating_interval() const { return {lo_, hi_}; }

	/* Closed interval of width <= 2^-n around the root. */
	RationalInterval approx(long n) const;
	/* Narrow the stored interval until its width is <= 2^-n. */
	RealAlgebraic refined(long n) const;

	int sign() const;

	RealAlgebraic operator-() const;
	RealAlgebraic inverse() const; /* nonzero */
	RealAlgebraic add(const Rational &q) const;
	RealAlgebraic mul(const Rational &q) const;

	friend RealAlgebraic operator+(const RealAlgebraic &a, const RealAlgebraic &b);
	friend RealAlgebraic operator-(const RealAlgebraic &a, const RealAlgebraic &b);
	friend RealAlgebraic operator*(const RealAlgebraic &a, const RealAlgebraic &b);
	friend RealAlgebraic operator/(const RealAlgebraic &a, const RealAlgebraic &b);

	friend int compare(const RealAlgebraic &a, const RealAlgebraic &b);
	friend int compare(const RealAlgebraic &a, const Rational &q);

	/* Canonical isolating interval: the coarsest dyadic cell
	 * [k/2^j, (k+1)/2^j] holding exactly this root. */
	RationalInterval canonical_interval() const;
	/* alg[c0,...,ck;lo,hi] with the canonical interval */
	std::string to_literal() const;
};

/* Parses alg[c0,c1,...,ck; lo,hi]; the text must start with "alg[". */
RealAlgebraic parse_algebraic(std::string_view text);

} // namespace valsat
