/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace valsat {

/* Element of Q^n under lexicographic order. */
class Exponent {
	std::vector<Rational> c_;

public:
	Exponent() = default;
	explicit Exponent(std::vector<Rational> coords);
	static Exponent zero(std::size_t n);
	/* (q, 0, ..., 0) */
	static Exponent unit(std::size_t n, const Rational &q = 1, std::size_t axis = 0);

	std::size_t dim() const { return c_.size(); }
	const Rational &operator[](std::size_t i) const { return c_[i]; }
	const std::vector<Rational> &coords() const { return c_; }
	bool is_zero() const;

	friend Exponent operator+(const Exponent &a, const Exponent &b);
	friend Exponent operator-(const Exponent &a, const Exponent &b);
	Exponent operator-() const;
	friend Exponent operator*(const Rational &q, const Exponent &a);

	friend bool operator==(const Exponent &a, const Exponent &b) { return a.c_ == b.c_; }
	friend std::strong_ordering operator<=>(const Exponent &a, const Exponent &b);

	/* "(q1,...,qn)" */
	std::string to_string() const;
};

Exponent midpoint(const Exponent &a, const Exponent &b);

/* An exponent or infinity, infinity above everything. */
class Value {
	std::optional<Exponent> e_;

public:
	Value() = default; /* infinity */
	Value(Exponent e) : e_(std::move(e)) {}
	static Value infinity() { return Value(); }
	bool is_infinite() const { return !e_; }
	const Exponent &exponent() const { return *e_; }
	friend bool operator==(const Value &a, const Value &b) { return a.e_ == b.e_; }
	friend std::strong_ordering operator<=>(const Value &a, const Value &b);
	std::string to_string() const { return e_ ? e_->to_string() : "inf"; }
};

} // namespace valsat
