/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/oracle.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace valsat {

/* An archimedean scalar: rational, real algebraic or oracle real.  Values
 * are normalized so that a rational algebraic is stored as Rational and an
 * oracle with no atoms as its algebraic constant.  Hence the only exact zero
 * is Rational 0. */
class CoefficientReal {
	std::variant<Rational, RealAlgebraic, OracleReal> v_;
	void normalize();

public:
	CoefficientReal() : v_(Rational(0)) {}
	CoefficientReal(const Rational &q) : v_(q) { std::get<Rational>(v_).canonicalize(); }
	CoefficientReal(long q) : v_(Rational(q)) {}
	CoefficientReal(const RealAlgebraic &a);
	CoefficientReal(const OracleReal &o);

	bool is_rational() const { return std::holds_alternative<Rational>(v_); }
	bool is_algebraic() const { return std::holds_alternative<RealAlgebraic>(v_); }
	bool is_oracle() const { return std::holds_alternative<OracleReal>(v_); }
	bool is_zero() const { return is_rational() && std::get<Rational>(v_) == 0; }
	bool is_one() const { return is_rational() && std::get<Rational>(v_) == 1; }

	const Rational &rational() const { return std::get<Rational>(v_); }
	const RealAlgebraic &algebraic() const { return std::get<RealAlgebraic>(v_); }
	const OracleReal &oracle() const { return std::get<OracleReal>(v_); }
	/* rational and algebraic values as RealAlgebraic */
	RealAlgebraic to_algebraic() const;
	OracleReal to_oracle() const;

	RationalInterval approx(long n) const;
	int sign(long budget = default_precision_budget()) const;

	CoefficientReal operator-() const;
	friend CoefficientReal operator+(const CoefficientReal &a, const CoefficientReal &b);
	friend CoefficientReal operator-(const CoefficientReal &a, const CoefficientReal &b);
	friend CoefficientReal operator*(const CoefficientReal &a, const CoefficientReal &b);
	/* DivisionByZero for exact zero; oracle divisors must be shown nonzero
	 * within the default budget */
	friend CoefficientReal operator/(const CoefficientReal &a, const CoefficientReal &b);
	CoefficientReal inverse() const;

	/* rational, alg[...] literal, or oracle[lo,hi] (not re-parsable) */
	std::string to_string() const;
};

/* Order of two scalars.  Exact for rationals and algebraics; oracle
 * operands are decided by linear-form cancellation, identity, or interval
 * separation within `budget` steps, else ComparisonUndecidedAtPrecision. */
int compare(const CoefficientReal &a, const CoefficientReal &b,
            long budget = default_precision_budget());

/* Exact equality; throws like compare when undecidable. */
inline bool equal(const CoefficientReal &a, const CoefficientReal &b) { return compare(a, b) == 0; }

/* Parses a rational "p/q" or an "alg[...]" literal. */
CoefficientReal parse_coefficient(std::string_view text);

/* A nonzero rational vector q with sum q_i c_i = 0.  A relation found is
 * exact.  When oracle atoms are involved and no relation exists, linear
 * independence is not certified: ComparisonUndecidedAtPrecision is thrown
 * unless the caller vouches that distinct atoms are independent over the
 * algebraic numbers. */
std::optional<std::vector<Rational>> rational_relation(const std::vector<CoefficientReal> &cs,
                                                       bool atoms_independent = false);

} // namespace valsat
