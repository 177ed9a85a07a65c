/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/number_field.hpp"
#include "valsat/errors.hpp"

namespace valsat {

namespace {

/* Arithmetic in Q[z]/(m). */
struct Field {
	Poly m;

	Poly reduce(const Poly &a) const { return Poly::divmod(a, m).second; }
	Poly mul(const Poly &a, const Poly &b) const { return reduce(a * b); }

	Poly inv(const Poly &a) const
	{
		/* extended Euclid: s a + t m = 1 */
		Poly r0 = m, r1 = reduce(a), s0, s1 = Poly::constant(1);
		if (r1.is_zero())
			throw DivisionByZero("inverse of zero in number field");
		while (r1.degree() > 0) {
			auto [q, r] = Poly::divmod(r0, r1);
			Poly s = s0 - q * s1;
			r0 = std::move(r1);
			r1 = std::move(r);
			s0 = std::move(s1);
			s1 = std::move(s);
		}
		if (r1.is_zero())
			throw Error("internal: modulus not irreducible");
		return reduce(Rational(1 / r1.lc()) * s1);
	}
};

/* polynomials in y over the field, low to high */
using KPoly = std::vector<Poly>;

void trim(KPoly &p)
{
	while (!p.empty() && p.back().is_zero())
		p.pop_back();
}

KPoly kp_rem(KPoly a, const KPoly &b, const Field &K)
{
	Poly inv_lc = K.inv(b.back());
	trim(a);
	while (a.size() >= b.size()) {
		Poly f = K.mul(a.back(), inv_lc);
		std::size_t shift = a.size() - b.size();
		for (std::size_t i = 0; i < b.size(); i++)
			a[i + shift] = K.reduce(a[i + shift] - f * b[i]);
		a.pop_back();
		trim(a);
	}
	return a;
}

KPoly kp_gcd(KPoly a, KPoly b, const Field &K)
{
	trim(a);
	trim(b);
	while (!b.empty()) {
		KPoly r = kp_rem(a, b, K);
		a = std::move(b);
		b = std::move(r);
	}
	Poly inv_lc = K.inv(a.back());
	for (auto &c : a)
		c = K.mul(c, inv_lc);
	return a;
}

/* h(e) in the field, for h in Q[x] */
Poly compose(const Poly &h, const Poly &e, const Field &K)
{
	Poly r;
	for (int i = h.degree(); i >= 0; i--)
		r = K.reduce(r * e + Poly::constant(h.coeff(i)));
	return r;
}

} // namespace

NumberField::NumberField() : modulus_(Poly::x()) {}

std::size_t NumberField::add(const RealAlgebraic &a)
{
	if (a.is_rational()) {
		reps_.push_back(Poly::constant(a.to_rational()));
		return reps_.size() - 1;
	}
	if (!theta_) {
		theta_ = a;
		modulus_ = a.poly().monic();
		reps_.push_back(Poly::x());
		return reps_.size() - 1;
	}
	const Poly &mb = modulus_;
	for (long c = 1;; c++) {
		RealAlgebraic cand = *theta_ + a.mul(Rational(c));
		Field K{cand.poly().monic()};
		/* alpha is the common root of p_alpha(y) and m_beta(z - c y) */
		KPoly A;
		for (const auto &q : a.poly().coeffs())
			A.push_back(Poly::constant(q));
		KPoly B{Poly()};
		KPoly lin{Poly::x(), Poly::constant(Rational(-c))}; /* z - c y */
		for (int i = mb.degree(); i >= 0; i--) {
			KPoly next(B.size() + 1);
			for (std::size_t j = 0; j < B.size(); j++)
				for (std::size_t k = 0; k < 2; k++)
					next[j + k] = K.reduce(next[j + k] + B[j] * lin[k]);
			next[0] = next[0] + Poly::constant(mb.coeff(i));
			B = std::move(next);
		}
		KPoly g = kp_gcd(A, B, K);
		if (g.size() != 2)
			continue;
		Poly alpha = K.reduce(-g[0]);
		Poly beta = K.reduce(Poly::x() - Rational(c) * alpha);
		for (auto &r : reps_)
			r = compose(r, beta, K);
		theta_ = cand;
		modulus_ = K.m;
		reps_.push_back(alpha);
		return reps_.size() - 1;
	}
}

std::vector<Rational> NumberField::coords(std::size_t i) const
{
	std::vector<Rational> v(degree());
	for (int j = 0; j < degree(); j++)
		v[j] = reps_.at(i).coeff(j);
	return v;
}

std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>> &rows)
{
	std::vector<std::size_t> pivots;
	if (rows.empty())
		return pivots;
	const std::size_t ncols = rows[0].size();
	std::size_t r = 0;
	for (std::size_t col = 0; col < ncols && r < rows.size(); col++) {
		std::size_t p = r;
		while (p < rows.size() && rows[p][col] == 0)
			p++;
		if (p == rows.size())
			continue;
		std::swap(rows[r], rows[p]);
		Rational inv = 1 / rows[r][col];
		for (auto &x : rows[r])
			x *= inv;
		for (std::size_t i = 0; i < rows.size(); i++) {
			if (i == r || rows[i][col] == 0)
				continue;
			Rational f = rows[i][col];
			for (std::size_t j = 0; j < ncols; j++)
				rows[i][j] -= f * rows[r][j];
		}
		pivots.push_back(col);
		r++;
	}
	return pivots;
}

namespace {
/* columns = elements; solve M q = target via an augmented system */
std::optional<std::vector<Rational>> solve(const std::vector<std::vector<Rational>> &cols,
                                           const std::vector<Rational> &target, bool homogeneous)
{
	const std::size_t n = cols.size(), d = target.size();
	std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(n + 1));
	for (std::size_t i = 0; i < d; i++) {
		for (std::size_t j = 0; j < n; j++)
			rows[i][j] = cols[j][i];
		rows[i][n] = target[i];
	}
	auto piv = row_reduce(rows);
	std::vector<Rational> q(n);
	if (homogeneous) {
		std::vector<bool> is_piv(n + 1, false);
		for (auto p : piv)
			is_piv[p] = true;
		std::size_t free = n;
		for (std::size_t j = 0; j < n; j++)
			if (!is_piv[j]) {
				free = j;
				break;
			}
		if (free == n)
			return std::nullopt;
		q[free] = 1;
		for (std::size_t r = 0; r < piv.size(); r++)
			if (piv[r] < n)
				q[piv[r]] = -rows[r][free];
		return q;
	}
	for (std::size_t r = 0; r < piv.size(); r++) {
		if (piv[r] == n)
			return std::nullopt;
		q[piv[r]] = rows[r][n];
	}
	return q;
}
} // namespace

std::optional<std::vector<Rational>> rational_relation(const std::vector<RealAlgebraic> &as)
{
	NumberField K;
	for (const auto &a : as)
		K.add(a);
	std::vector<std::vector<Rational>> cols;
	for (std::size_t i = 0; i < as.size(); i++)
		cols.push_back(K.coords(i));
	return solve(cols, std::vector<Rational>(K.degree()), true);
}

std::optional<std::vector<Rational>> express_in_span(const std::vector<RealAlgebraic> &basis,
                                                     const RealAlgebraic &a)
{
	NumberField K;
	for (const auto &b : basis)
		K.add(b);
	std::size_t ia = K.add(a);
	std::vector<std::vector<Rational>> cols;
	for (std::size_t i = 0; i < basis.size(); i++)
		cols.push_back(K.coords(i));
	return solve(cols, K.coords(ia), false);
}

} // namespace valsat
