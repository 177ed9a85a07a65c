/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/poly.hpp"
#include "valsat/errors.hpp"

#include <algorithm>

namespace valsat {

void Poly::trim()
{
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
	for (auto &x : c_)
		x.canonicalize();
	trim();
}

Poly Poly::constant(const Rational &q) { return Poly(std::vector<Rational>{q}); }

Poly Poly::x() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::from_integers(const std::vector<Integer> &coeffs)
{
	std::vector<Rational> c;
	c.reserve(coeffs.size());
	for (const auto &z : coeffs)
		c.emplace_back(z);
	return Poly(std::move(c));
}

Rational Poly::coeff(int i) const
{
	if (i < 0 || i > degree())
		return 0;
	return c_[i];
}

Rational Poly::eval(const Rational &x) const
{
	Rational r = 0;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		r = r * x + *it;
	return r;
}

Poly Poly::derivative() const
{
	if (degree() < 1)
		return {};
	std::vector<Rational> d(c_.size() - 1);
	for (std::size_t i = 1; i < c_.size(); i++)
		d[i - 1] = c_[i] * static_cast<unsigned long>(i);
	return Poly(std::move(d));
}

Poly Poly::monic() const
{
	if (is_zero())
		return {};
	Rational l = lc();
	std::vector<Rational> d(c_);
	for (auto &q : d)
		q /= l;
	return Poly(std::move(d));
}

std::vector<Integer> Poly::primitive_integer() const
{
	if (is_zero())
		return {};
	Integer l = 1;
	for (const auto &q : c_)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
	std::vector<Integer> z;
	z.reserve(c_.size());
	Integer g = 0;
	for (const auto &q : c_) {
		Integer v = q.get_num() * (l / q.get_den());
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
		z.push_back(v);
	}
	if (z.back() < 0)
		g = -g;
	for (auto &v : z)
		v /= g;
	return z;
}

Poly Poly::shift(const Rational &a) const
{
	/* Horner in the ring: result = ((c_n)(x+a) + c_{n-1})(x+a) + ... */
	Poly r;
	Poly xa(std::vector<Rational>{a, 1});
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		r = r * xa + constant(*it);
	return r;
}

Poly Poly::scale_var(const Rational &a) const
{
	std::vector<Rational> d(c_);
	Rational p = 1;
	for (auto &q : d) {
		q *= p;
		p *= a;
	}
	return Poly(std::move(d));
}

Poly Poly::reverse() const
{
	std::vector<Rational> d(c_.rbegin(), c_.rend());
	return Poly(std::move(d));
}

Poly operator+(const Poly &a, const Poly &b)
{
	std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
	for (std::size_t i = 0; i < a.c_.size(); i++)
		d[i] += a.c_[i];
	for (std::size_t i = 0; i < b.c_.size(); i++)
		d[i] += b.c_[i];
	return Poly(std::move(d));
}

Poly operator-(const Poly &a) { return Rational(-1) * a; }

Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }

Poly operator*(const Poly &a, const Poly &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
	for (std::size_t i = 0; i < a.c_.size(); i++)
		for (std::size_t j = 0; j < b.c_.size(); j++)
			d[i + j] += a.c_[i] * b.c_[j];
	return Poly(std::move(d));
}

Poly operator*(const Rational &q, const Poly &p)
{
	std::vector<Rational> d(p.c_);
	for (auto &c : d)
		c *= q;
	return Poly(std::move(d));
}

std::pair<Poly, Poly> Poly::divmod(const Poly &a, const Poly &b)
{
	if (b.is_zero())
		throw DivisionByZero("polynomial division by zero");
	if (a.degree() < b.degree())
		return {Poly{}, a};
	std::vector<Rational> r(a.c_);
	std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
	const int db = b.degree();
	for (int i = a.degree(); i >= db; i--) {
		if (r[i] == 0)
			continue;
		Rational f = r[i] / b.lc();
		q[i - db] = f;
		for (int j = 0; j <= db; j++)
			r[i - db + j] -= f * b.c_[j];
	}
	return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(const Poly &a, const Poly &b)
{
	Poly x = a, y = b;
	while (!y.is_zero()) {
		Poly r = divmod(x, y).second;
		x = std::move(y);
		y = std::move(r);
	}
	return x.monic();
}

Poly Poly::squarefree() const
{
	if (degree() < 1)
		return monic();
	Poly g = gcd(*this, derivative());
	return divmod(*this, g).first.monic();
}

std::string Poly::to_string() const
{
	if (is_zero())
		return "0";
	std::string s;
	for (int i = degree(); i >= 0; i--) {
		if (c_[i] == 0)
			continue;
		if (!s.empty())
			s += " + ";
		s += "(" + valsat::to_string(c_[i]) + ")";
		if (i > 0)
			s += "*x^" + std::to_string(i);
	}
	return s;
}

namespace {
Rational powq(const Rational &q, int e)
{
	Rational r = 1;
	for (int i = 0; i < e; i++)
		r *= q;
	return r;
}
} // namespace

Rational resultant(const Poly &f, const Poly &g)
{
	if (f.is_zero() || g.is_zero())
		return 0;
	if (f.degree() == 0)
		return powq(f.lc(), g.degree());
	if (g.degree() == 0)
		return powq(g.lc(), f.degree());
	/* res(f, g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r), r = f mod g */
	const int m = f.degree(), n = g.degree();
	Poly r = Poly::divmod(f, g).second;
	if (r.is_zero())
		return 0;
	Rational s = ((m * n) % 2) ? Rational(-1) : Rational(1);
	Rational l = 1;
	for (int i = 0; i < m - r.degree(); i++)
		l *= g.lc();
	return s * l * resultant(g, r);
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>> &points)
{
	Poly result;
	for (std::size_t i = 0; i < points.size(); i++) {
		Poly term = Poly::constant(points[i].second);
		Rational denom = 1;
		for (std::size_t j = 0; j < points.size(); j++) {
			if (j == i)
				continue;
			term = term * Poly(std::vector<Rational>{-points[j].first, 1});
			denom *= points[i].first - points[j].first;
		}
		result = result + Rational(1 / denom) * term;
	}
	return result;
}

SturmChain::SturmChain(const Poly &p)
{
	chain_.push_back(p);
	if (p.degree() < 1)
		return;
	chain_.push_back(p.derivative());
	while (true) {
		Poly r = Poly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
		if (r.is_zero())
			break;
		chain_.push_back(-r);
	}
}

int SturmChain::variations(const Rational &x) const
{
	int v = 0, last = 0;
	for (const auto &p : chain_) {
		int s = p.sign_at(x);
		if (s == 0)
			continue;
		if (last != 0 && s != last)
			v++;
		last = s;
	}
	return v;
}

int SturmChain::count_closed(const Rational &lo, const Rational &hi) const
{
	if (lo > hi)
		return 0;
	int n = variations(lo) - variations(hi);
	if (chain_.front().sign_at(lo) == 0)
		n++;
	return n;
}

Rational root_bound(const Poly &p)
{
	Rational m = 0;
	for (int i = 0; i < p.degree(); i++) {
		Rational a = abs(p.coeff(i) / p.lc());
		if (a > m)
			m = a;
	}
	return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly &p)
{
	std::vector<std::pair<Rational, Rational>> out;
	if (p.degree() < 1)
		return out;
	SturmChain sc(p);
	Rational b = root_bound(p);
	std::vector<std::pair<Rational, Rational>> work{{-b, b}};
	while (!work.empty()) {
		auto [lo, hi] = work.back();
		work.pop_back();
		int n = sc.count_closed(lo, hi);
		if (n == 0)
			continue;
		if (n == 1) {
			out.emplace_back(lo, hi);
			continue;
		}
		Rational mid = (lo + hi) / 2;
		if (p.sign_at(mid) == 0) {
			out.emplace_back(mid, mid);
			/* shrink neighbours away from mid until it is excluded */
			Rational eps = (hi - lo) / 4;
			while (sc.count_closed(mid - eps, mid + eps) > 1)
				eps /= 2;
			work.emplace_back(lo, mid - eps);
			work.emplace_back(mid + eps, hi);
		} else {
			work.emplace_back(lo, mid);
			work.emplace_back(mid, hi);
		}
	}
	std::sort(out.begin(), out.end(),
	          [](const auto &a, const auto &b) { return a.first < b.first; });
	return out;
}

} // namespace valsat
