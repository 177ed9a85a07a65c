/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/algebraic.hpp"

#include "valsat/errors.hpp"

#include <cctype>
#include <mutex>
#include <unordered_map>

namespace valsat {

namespace {

/* Minimal polynomial of the unique root of squarefree p in [lo, hi]. */
Poly minimal_factor(const Poly &sqfree, const Rational &lo, const Rational &hi)
{
	auto prim = sqfree.primitive_integer();
	if (prim.size() == 2)
		return Poly::from_integers(prim);
	for (const auto &f : factor_squarefree(prim)) {
		Poly pf = Poly::from_integers(f);
		if (SturmChain(pf).count_closed(lo, hi) == 1)
			return pf;
	}
	throw MalformedAlgebraic("no irreducible factor holds the root");
}

RationalInterval bisect(const Poly &p, RationalInterval iv)
{
	Rational mid = (iv.lo + iv.hi) / 2;
	int sm = p.sign_at(mid);
	if (sm == 0)
		return {mid, mid};
	int sl = p.sign_at(iv.lo);
	if (sl == 0)
		return {iv.lo, iv.lo};
	if (sl != sm)
		return {iv.lo, mid};
	return {mid, iv.hi};
}

} // namespace

RealAlgebraic::RealAlgebraic(Poly minimal, Rational lo, Rational hi, int)
: poly_(std::move(minimal)), lo_(std::move(lo)), hi_(std::move(hi))
{
	if (poly_.degree() == 1) {
		Rational r = -poly_.coeff(0) / poly_.coeff(1);
		lo_ = hi_ = r;
	}
}

RealAlgebraic::RealAlgebraic(const Poly &p, const Rational &lo, const Rational &hi)
{
	if (p.degree() < 1)
		throw MalformedAlgebraic("polynomial has no roots");
	if (lo > hi)
		throw MalformedAlgebraic("empty isolating interval");
	Poly sq = p.squarefree();
	if (SturmChain(sq).count_closed(lo, hi) != 1)
		throw MalformedAlgebraic("interval [" + to_string(lo) + ", " + to_string(hi) +
		                         "] does not isolate exactly one root");
	*this = RealAlgebraic(minimal_factor(sq, lo, hi), lo, hi, 0);
}

RealAlgebraic::RealAlgebraic(const Rational &q)
: RealAlgebraic(Poly::from_integers({-q.get_num(), q.get_den()}), q, q, 0)
{}

RealAlgebraic RealAlgebraic::sqrt(const Rational &q)
{
	if (q <= 0)
		throw PreconditionViolated("sqrt of non-positive rational");
	Rational hi = q > 1 ? q : Rational(1);
	return RealAlgebraic(Poly(std::vector<Rational>{-q, 0, 1}), 0, hi);
}

Rational RealAlgebraic::to_rational() const
{
	if (!is_rational())
		throw PreconditionViolated("algebraic number is irrational");
	return lo_;
}

RationalInterval RealAlgebraic::approx(long n) const
{
	RationalInterval iv{lo_, hi_};
	Rational w = pow2(-n);
	while (iv.width() > w)
		iv = bisect(poly_, iv);
	return iv;
}

RealAlgebraic RealAlgebraic::refined(long n) const
{
	auto iv = approx(n);
	RealAlgebraic r = *this;
	r.lo_ = iv.lo;
	r.hi_ = iv.hi;
	return r;
}

int RealAlgebraic::sign() const
{
	if (is_rational())
		return sgn(lo_);
	RationalInterval iv{lo_, hi_};
	/* irreducible of degree >= 2: the root is not 0 */
	while (iv.contains(Rational(0)))
		iv = bisect(poly_, iv);
	return sgn(iv.lo);
}

RealAlgebraic RealAlgebraic::operator-() const
{
	return RealAlgebraic(Poly::primitive(poly_.reflect()), -hi_, -lo_, 0);
}

RealAlgebraic RealAlgebraic::add(const Rational &q) const
{
	return RealAlgebraic(Poly::primitive(poly_.shift(-q)), lo_ + q, hi_ + q, 0);
}

RealAlgebraic RealAlgebraic::mul(const Rational &q) const
{
	if (q == 0)
		return RealAlgebraic(Rational(0));
	Rational a = lo_ * q, b = hi_ * q;
	if (a > b)
		std::swap(a, b);
	return RealAlgebraic(Poly::primitive(poly_.scale_var(1 / q)), a, b, 0);
}

RealAlgebraic RealAlgebraic::inverse() const
{
	if (sign() == 0)
		throw DivisionByZero("inverse of zero algebraic");
	if (is_rational())
		return RealAlgebraic(Rational(1 / lo_));
	RationalInterval iv{lo_, hi_};
	while (iv.contains(Rational(0)))
		iv = bisect(poly_, iv);
	Rational a = 1 / iv.hi, b = 1 / iv.lo;
	return RealAlgebraic(Poly::primitive(poly_.reverse()), a, b, 0);
}

namespace {

enum class Op { Add, Mul };

/* Polynomial vanishing at a + b (resp. a b) for every pair of roots. */
Poly combined_poly(const Poly &p, const Poly &q, Op op)
{
	const int D = p.degree() * q.degree();
	std::vector<std::pair<Rational, Rational>> pts;
	for (int k = 0; k <= D; k++) {
		Rational xk = k;
		Poly pk;
		if (op == Op::Add) {
			pk = p.reflect().shift(-xk); /* p(x_k - y) */
		} else {
			const int m = p.degree();
			std::vector<Rational> c(m + 1);
			Rational pw = 1;
			for (int i = 0; i <= m; i++) {
				c[m - i] = p.coeff(i) * pw;
				pw *= xk;
			}
			pk = Poly(std::move(c)); /* y^m p(x_k / y) */
		}
		pts.emplace_back(xk, resultant(pk, q));
	}
	return interpolate(pts);
}

RealAlgebraic combine_uncached(const RealAlgebraic &a, const RealAlgebraic &b, Op op);

/* Sums and products recur heavily in solution-set work; results are cached
 * by the canonical literals of the operands. */
RealAlgebraic combine(const RealAlgebraic &a, const RealAlgebraic &b, Op op)
{
	static std::mutex mu;
	static std::unordered_map<std::string, RealAlgebraic> cache;
	std::string ka = a.to_literal(), kb = b.to_literal();
	if (kb < ka)
		std::swap(ka, kb);
	const std::string key = ka + (op == Op::Add ? "+" : "*") + kb;
	{
		std::lock_guard<std::mutex> g(mu);
		if (auto it = cache.find(key); it != cache.end())
			return it->second;
	}
	RealAlgebraic r = combine_uncached(a, b, op);
	std::lock_guard<std::mutex> g(mu);
	if (cache.size() >= (1u << 16))
		cache.clear();
	cache.emplace(key, r);
	return r;
}

RealAlgebraic combine_uncached(const RealAlgebraic &a, const RealAlgebraic &b, Op op)
{
	Poly r = combined_poly(a.poly(), b.poly(), op).squarefree();
	if (r.degree() < 1)
		throw Error("internal: degenerate resultant");
	SturmChain sc(r);
	for (long n = 4;; n += 4) {
		auto ia = a.approx(n), ib = b.approx(n);
		RationalInterval iv;
		if (op == Op::Add) {
			iv = {ia.lo + ib.lo, ia.hi + ib.hi};
		} else {
			Rational c[4] = {ia.lo * ib.lo, ia.lo * ib.hi, ia.hi * ib.lo, ia.hi * ib.hi};
			iv = {c[0], c[0]};
			for (auto &v : c) {
				if (v < iv.lo)
					iv.lo = v;
				if (v > iv.hi)
					iv.hi = v;
			}
		}
		if (sc.count_closed(iv.lo, iv.hi) == 1)
			return RealAlgebraic(r, iv.lo, iv.hi);
	}
}

} // namespace

RealAlgebraic operator+(const RealAlgebraic &a, const RealAlgebraic &b)
{
	if (a.is_rational())
		return b.add(a.to_rational());
	if (b.is_rational())
		return a.add(b.to_rational());
	return combine(a, b, Op::Add);
}

RealAlgebraic operator-(const RealAlgebraic &a, const RealAlgebraic &b) { return a + (-b); }

RealAlgebraic operator*(const RealAlgebraic &a, const RealAlgebraic &b)
{
	if (a.is_rational())
		return b.mul(a.to_rational());
	if (b.is_rational())
		return a.mul(b.to_rational());
	return combine(a, b, Op::Mul);
}

RealAlgebraic operator/(const RealAlgebraic &a, const RealAlgebraic &b) { return a * b.inverse(); }

int compare(const RealAlgebraic &a, const Rational &q)
{
	if (a.is_rational())
		return cmp(a.to_rational(), q);
	RationalInterval iv = a.isolating_interval();
	while (iv.contains(q))
		iv = bisect(a.poly(), iv);
	return iv.hi < q ? -1 : 1;
}

int compare(const RealAlgebraic &a, const RealAlgebraic &b)
{
	if (a.is_rational())
		return -compare(b, a.to_rational());
	if (b.is_rational())
		return compare(a, b.to_rational());
	RationalInterval ia = a.isolating_interval(), ib = b.isolating_interval();
	if (a.poly() == b.poly()) {
		/* same minimal polynomial: equal iff the intervals share the root */
		Rational lo = ia.lo > ib.lo ? ia.lo : ib.lo;
		Rational hi = ia.hi < ib.hi ? ia.hi : ib.hi;
		if (lo <= hi && SturmChain(a.poly()).count_closed(lo, hi) == 1)
			return 0;
	}
	/* distinct numbers: refine until the intervals separate */
	while (!(ia.hi < ib.lo || ib.hi < ia.lo)) {
		ia = bisect(a.poly(), ia);
		ib = bisect(b.poly(), ib);
	}
	return ia.hi < ib.lo ? -1 : 1;
}

RationalInterval RealAlgebraic::canonical_interval() const
{
	if (is_rational())
		return {lo_, hi_};
	SturmChain sc(poly_);
	for (long j = 0;; j++) {
		RationalInterval iv = approx(j + 2);
		Rational cell = pow2(-j);
		Rational k = Rational(floor(iv.lo / cell));
		RationalInterval c{k * cell, (k + 1) * cell};
		/* a dyadic point is never a root of an irreducible poly of degree >= 2 */
		while (!c.contains(iv)) {
			iv = bisect(poly_, iv);
			k = Rational(floor(iv.lo / cell));
			c = {k * cell, (k + 1) * cell};
		}
		if (sc.count_closed(c.lo, c.hi) == 1)
			return c;
	}
}

std::string RealAlgebraic::to_literal() const
{
	auto iv = canonical_interval();
	std::string s = "alg[";
	auto coeffs = poly_.primitive_integer();
	for (std::size_t i = 0; i < coeffs.size(); i++) {
		if (i)
			s += ",";
		s += coeffs[i].get_str();
	}
	s += ";" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
	return s;
}

RealAlgebraic parse_algebraic(std::string_view text)
{
	auto fail = [&](const std::string &msg, std::size_t pos) -> SyntaxError {
		return SyntaxError(msg, pos + 1);
	};
	if (text.substr(0, 4) != "alg[")
		throw fail("expected 'alg['", 0);
	auto close = text.find(']');
	if (close == std::string_view::npos || close + 1 != text.size())
		throw fail("expected ']' at end of algebraic literal", text.size());
	auto semi = text.find(';');
	if (semi == std::string_view::npos || semi > close)
		throw fail("expected ';' in algebraic literal", 4);
	auto strip = [](std::string_view s) {
		while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
			s.remove_prefix(1);
		while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
			s.remove_suffix(1);
		return s;
	};
	std::vector<Rational> coeffs;
	std::string_view body = text.substr(4, semi - 4);
	std::size_t base = 4;
	while (true) {
		auto comma = body.find(',');
		auto piece = strip(body.substr(0, comma));
		try {
			coeffs.push_back(parse_rational(piece));
		} catch (const SyntaxError &) {
			throw fail("bad coefficient '" + std::string(piece) + "'", base);
		}
		if (comma == std::string_view::npos)
			break;
		base += comma + 1;
		body.remove_prefix(comma + 1);
	}
	std::string_view iv = text.substr(semi + 1, close - semi - 1);
	auto comma = iv.find(',');
	if (comma == std::string_view::npos)
		throw fail("expected 'lo,hi' interval", semi + 1);
	Rational lo, hi;
	try {
		lo = parse_rational(strip(iv.substr(0, comma)));
		hi = parse_rational(strip(iv.substr(comma + 1)));
	} catch (const SyntaxError &) {
		throw fail("bad interval endpoint", semi + 1);
	}
	return RealAlgebraic(Poly(std::move(coeffs)), lo, hi);
}

} // namespace valsat
