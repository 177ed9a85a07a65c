/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/algebraic.hpp"

#include <optional>
#include <vector>

namespace valsat {

/* Q(theta) grown one algebraic number at a time.  Every registered number
 * is stored as a polynomial in the primitive element theta of degree below
 * [Q(theta):Q], which turns Q-linear relations into exact linear algebra on
 * coordinate vectors. */
class NumberField {
	std::optional<RealAlgebraic> theta_;
	Poly modulus_; /* monic minimal polynomial of theta; x when the field is Q */
	std::vector<Poly> reps_;

public:
	NumberField();

	/* Registers a and returns its index. */
	std::size_t add(const RealAlgebraic &a);

	int degree() const { return modulus_.degree(); }
	const Poly &modulus() const { return modulus_; }
	/* coordinates of element i in the power basis 1, theta, ... */
	std::vector<Rational> coords(std::size_t i) const;
	const std::optional<RealAlgebraic> &primitive_element() const { return theta_; }
};

/* Reduced row echelon form in place; returns the pivot columns. */
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>> &rows);

/* A nonzero rational vector q with sum q_i a_i = 0, if any. */
std::optional<std::vector<Rational>> rational_relation(const std::vector<RealAlgebraic> &as);

/* Rationals q with sum q_i basis_i = a, when a lies in the Q-span. */
std::optional<std::vector<Rational>> express_in_span(const std::vector<RealAlgebraic> &basis,
                                                     const RealAlgebraic &a);

} // namespace valsat
