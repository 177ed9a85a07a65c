/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/coefficient.hpp"
#include "valsat/errors.hpp"
#include "valsat/number_field.hpp"

#include <map>

namespace valsat {

CoefficientReal::CoefficientReal(const RealAlgebraic &a) : v_(a) { normalize(); }
CoefficientReal::CoefficientReal(const OracleReal &o) : v_(o) { normalize(); }

void CoefficientReal::normalize()
{
	if (auto *o = std::get_if<OracleReal>(&v_); o && o->is_exact()) {
		RealAlgebraic c = o->constant_part();
		v_ = c;
	}
	if (auto *a = std::get_if<RealAlgebraic>(&v_); a && a->is_rational()) {
		Rational q = a->to_rational();
		v_ = q;
	}
}

RealAlgebraic CoefficientReal::to_algebraic() const
{
	if (is_rational())
		return RealAlgebraic(rational());
	if (is_algebraic())
		return algebraic();
	throw PreconditionViolated("oracle real is not known to be algebraic");
}

OracleReal CoefficientReal::to_oracle() const
{
	if (is_oracle())
		return oracle();
	return OracleReal::exact(to_algebraic());
}

RationalInterval CoefficientReal::approx(long n) const
{
	if (is_rational())
		return {rational(), rational()};
	if (is_algebraic())
		return algebraic().approx(n);
	return oracle().approx(n);
}

int CoefficientReal::sign(long budget) const
{
	if (is_rational())
		return sgn(rational());
	if (is_algebraic())
		return algebraic().sign();
	return oracle().sign(budget);
}

CoefficientReal CoefficientReal::operator-() const
{
	if (is_rational())
		return Rational(-rational());
	if (is_algebraic())
		return CoefficientReal(-algebraic());
	return CoefficientReal(-oracle());
}

CoefficientReal operator+(const CoefficientReal &a, const CoefficientReal &b)
{
	if (a.is_rational() && b.is_rational())
		return Rational(a.rational() + b.rational());
	if (a.is_zero())
		return b;
	if (b.is_zero())
		return a;
	if (a.is_oracle() || b.is_oracle())
		return CoefficientReal(a.to_oracle() + b.to_oracle());
	if (a.is_rational())
		return CoefficientReal(b.algebraic().add(a.rational()));
	if (b.is_rational())
		return CoefficientReal(a.algebraic().add(b.rational()));
	return CoefficientReal(a.algebraic() + b.algebraic());
}

CoefficientReal operator-(const CoefficientReal &a, const CoefficientReal &b) { return a + (-b); }

CoefficientReal operator*(const CoefficientReal &a, const CoefficientReal &b)
{
	if (a.is_rational() && b.is_rational())
		return Rational(a.rational() * b.rational());
	if (a.is_zero() || b.is_zero())
		return CoefficientReal();
	if (a.is_rational() && b.is_oracle())
		return CoefficientReal(b.oracle().scaled(a.rational()));
	if (b.is_rational() && a.is_oracle())
		return CoefficientReal(a.oracle().scaled(b.rational()));
	if (a.is_oracle() || b.is_oracle())
		return CoefficientReal(a.to_oracle() * b.to_oracle());
	if (a.is_rational())
		return CoefficientReal(b.algebraic().mul(a.rational()));
	if (b.is_rational())
		return CoefficientReal(a.algebraic().mul(b.rational()));
	return CoefficientReal(a.algebraic() * b.algebraic());
}

CoefficientReal CoefficientReal::inverse() const
{
	if (is_zero())
		throw DivisionByZero("division by zero");
	if (is_rational())
		return Rational(1 / rational());
	if (is_algebraic())
		return CoefficientReal(algebraic().inverse());
	return CoefficientReal(oracle().inverse(default_precision_budget()));
}

CoefficientReal operator/(const CoefficientReal &a, const CoefficientReal &b) { return a * b.inverse(); }

std::string CoefficientReal::to_string() const
{
	if (is_rational())
		return valsat::to_string(rational());
	if (is_algebraic())
		return algebraic().to_literal();
	auto iv = oracle().approx(20);
	return "oracle[" + valsat::to_string(iv.lo) + "," + valsat::to_string(iv.hi) + "]";
}

int compare(const CoefficientReal &a, const CoefficientReal &b, long budget)
{
	if (a.is_rational() && b.is_rational())
		return cmp(a.rational(), b.rational());
	if (!a.is_oracle() && !b.is_oracle()) {
		if (b.is_rational())
			return compare(a.algebraic(), b.rational());
		if (a.is_rational())
			return -compare(b.algebraic(), a.rational());
		return compare(a.algebraic(), b.algebraic());
	}
	if (a.is_oracle() && b.is_oracle() && a.oracle().same_object(b.oracle()))
		return 0;
	/* the difference is exact when the atoms cancel */
	return (a.to_oracle() - b.to_oracle()).sign(budget);
}

CoefficientReal parse_coefficient(std::string_view text)
{
	if (text.substr(0, 4) == "alg[")
		return CoefficientReal(parse_algebraic(text));
	return CoefficientReal(parse_rational(text));
}

std::optional<std::vector<Rational>> rational_relation(const std::vector<CoefficientReal> &cs,
                                                       bool atoms_independent)
{
	std::map<unsigned long, std::size_t> atom_col;
	std::vector<RealAlgebraic> consts;
	for (const auto &c : cs) {
		if (c.is_oracle()) {
			for (const auto &[atom, q] : c.oracle().terms())
				atom_col.emplace(detail::atom_id(*atom), atom_col.size());
			consts.push_back(c.oracle().constant_part());
		} else {
			consts.push_back(c.to_algebraic());
		}
	}
	NumberField K;
	for (const auto &a : consts)
		K.add(a);
	const std::size_t na = atom_col.size(), d = static_cast<std::size_t>(K.degree());
	/* one row per coordinate, one column per input, plus a zero column */
	std::vector<std::vector<Rational>> rows(na + d, std::vector<Rational>(cs.size()));
	for (std::size_t j = 0; j < cs.size(); j++) {
		if (cs[j].is_oracle())
			for (const auto &[atom, q] : cs[j].oracle().terms())
				rows[atom_col.at(detail::atom_id(*atom))][j] = q;
		auto co = K.coords(j);
		for (std::size_t i = 0; i < d; i++)
			rows[na + i][j] = co[i];
	}
	auto piv = row_reduce(rows);
	std::vector<bool> is_piv(cs.size(), false);
	for (auto p : piv)
		is_piv[p] = true;
	for (std::size_t f = 0; f < cs.size(); f++) {
		if (is_piv[f])
			continue;
		std::vector<Rational> q(cs.size());
		q[f] = 1;
		for (std::size_t r = 0; r < piv.size(); r++)
			q[piv[r]] = -rows[r][f];
		return q;
	}
	if (na > 0 && !atoms_independent)
		throw ComparisonUndecidedAtPrecision(
		    "linear independence of oracle reals is not certified");
	return std::nullopt;
}

} // namespace valsat
