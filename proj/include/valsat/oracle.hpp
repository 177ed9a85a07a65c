/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/algebraic.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace valsat {

/* Default number of refinement steps spent by comparisons involving oracle
 * reals.  Process-wide; 64 unless changed. */
long default_precision_budget();
void set_default_precision_budget(long n);

/* Generator contract: n -> closed rational interval of width <= 2^-n,
 * nested in the interval for n - 1.  Must be a pure function of n. */
using IntervalGenerator = std::function<RationalInterval(long)>;

namespace detail {
struct Atom;
}

/* A computable real given by nested interval approximations.
 *
 * Values are kept as a rational linear form over opaque atoms plus an
 * algebraic constant.  Sums and rational multiples stay linear, so
 * cancellation such as x + (-x) is detected exactly.  Other products and
 * inverses become fresh atoms. */
class OracleReal {
public:
	using Term = std::pair<std::shared_ptr<const detail::Atom>, Rational>;

private:
	std::vector<Term> terms_; /* sorted by atom id, nonzero coefficients */
	RealAlgebraic constant_{Rational(0)};
	struct Memo;
	std::shared_ptr<Memo> memo_;

	OracleReal(std::vector<Term> terms, RealAlgebraic constant);

public:
	static OracleReal from_generator(IntervalGenerator gen, std::string label = "oracle");
	static OracleReal constant(const Rational &q);
	static OracleReal exact(const RealAlgebraic &a);
	/* [q - 2^-(n+1), q + 2^-(n+1)] */
	static OracleReal ball(const Rational &q);
	/* dyadic cells [k/2^n, (k+1)/2^n] around an algebraic number */
	static OracleReal binary_expansion(const RealAlgebraic &a);

	/* Width <= 2^-n, nested in approx(n - 1).  Throws OracleFailure if an
	 * underlying generator breaks its contract. */
	RationalInterval approx(long n) const;

	/* True when the linear form has no atoms: the value is the constant. */
	bool is_exact() const { return terms_.empty(); }
	const std::vector<Term> &terms() const { return terms_; }
	const RealAlgebraic &constant_part() const { return constant_; }
	bool same_object(const OracleReal &o) const { return memo_ == o.memo_; }

	OracleReal operator-() const;
	friend OracleReal operator+(const OracleReal &a, const OracleReal &b);
	friend OracleReal operator-(const OracleReal &a, const OracleReal &b);
	OracleReal scaled(const Rational &q) const;
	OracleReal shifted(const RealAlgebraic &c) const;
	/* product and inverse introduce new atoms unless an operand is exact */
	friend OracleReal operator*(const OracleReal &a, const OracleReal &b);
	/* throws DivisionByZero for the exact zero, ComparisonUndecidedAtPrecision
	 * if nonzero-ness is not established within budget */
	OracleReal inverse(long budget) const;

	/* sign, using linear-form cancellation first, then interval refinement
	 * up to `budget` */
	int sign(long budget) const;
};

RealAlgebraic sqrt(const RealAlgebraic &a); /* a > 0 */

namespace detail {
/* atom identity for ordering linear forms deterministically */
unsigned long atom_id(const Atom &a);
const std::string &atom_label(const Atom &a);
} // namespace detail

} // namespace valsat
