/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/exponent.hpp"
#include "valsat/errors.hpp"

namespace valsat {

namespace {
void same_dim(const Exponent &a, const Exponent &b)
{
	if (a.dim() != b.dim())
		throw DimensionMismatch("exponents of dimension " + std::to_string(a.dim()) + " and " +
		                        std::to_string(b.dim()));
}
} // namespace

Exponent::Exponent(std::vector<Rational> coords) : c_(std::move(coords))
{
	if (c_.empty())
		throw DimensionMismatch("exponent of dimension 0");
	for (auto &x : c_)
		x.canonicalize();
}

Exponent Exponent::zero(std::size_t n) { return Exponent(std::vector<Rational>(n)); }

Exponent Exponent::unit(std::size_t n, const Rational &q, std::size_t axis)
{
	std::vector<Rational> c(n);
	c.at(axis) = q;
	return Exponent(std::move(c));
}

bool Exponent::is_zero() const
{
	for (const auto &x : c_)
		if (x != 0)
			return false;
	return true;
}

Exponent operator+(const Exponent &a, const Exponent &b)
{
	same_dim(a, b);
	std::vector<Rational> c(a.dim());
	for (std::size_t i = 0; i < c.size(); i++)
		c[i] = a.c_[i] + b.c_[i];
	return Exponent(std::move(c));
}

Exponent operator-(const Exponent &a, const Exponent &b) { return a + (-b); }

Exponent Exponent::operator-() const { return Rational(-1) * *this; }

Exponent operator*(const Rational &q, const Exponent &a)
{
	std::vector<Rational> c(a.dim());
	for (std::size_t i = 0; i < c.size(); i++)
		c[i] = q * a.c_[i];
	return Exponent(std::move(c));
}

std::strong_ordering operator<=>(const Exponent &a, const Exponent &b)
{
	same_dim(a, b);
	for (std::size_t i = 0; i < a.dim(); i++) {
		int c = cmp(a.c_[i], b.c_[i]);
		if (c < 0)
			return std::strong_ordering::less;
		if (c > 0)
			return std::strong_ordering::greater;
	}
	return std::strong_ordering::equal;
}

std::string Exponent::to_string() const
{
	std::string s = "(";
	for (std::size_t i = 0; i < c_.size(); i++) {
		if (i)
			s += ",";
		s += valsat::to_string(c_[i]);
	}
	return s + ")";
}

Exponent midpoint(const Exponent &a, const Exponent &b) { return Rational(1, 2) * (a + b); }

std::strong_ordering operator<=>(const Value &a, const Value &b)
{
	if (a.is_infinite() || b.is_infinite()) {
		if (a.is_infinite() && b.is_infinite())
			return std::strong_ordering::equal;
		return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
	}
	return a.exponent() <=> b.exponent();
}

} // namespace valsat
