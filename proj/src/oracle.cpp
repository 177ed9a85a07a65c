/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/oracle.hpp"
#include "valsat/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace valsat {

namespace {
std::atomic<long> g_budget{64};
std::atomic<unsigned long> g_next_atom{1};

Rational max_abs(const RationalInterval &iv)
{
	Rational a = abs(iv.lo), b = abs(iv.hi);
	return a > b ? a : b;
}

/* Nested-interval memo shared by every copy of one value. */
struct NestedMemo {
	std::mutex mu;
	std::vector<RationalInterval> levels;

	template <class F>
	RationalInterval get(long n, F &&compute, const std::string &who)
	{
		if (n < 0)
			n = 0;
		std::lock_guard<std::mutex> lock(mu);
		while (static_cast<long>(levels.size()) <= n) {
			long k = static_cast<long>(levels.size());
			RationalInterval iv = compute(k);
			if (iv.lo > iv.hi)
				throw OracleFailure(who + ": empty interval at precision " + std::to_string(k));
			if (iv.width() > pow2(-k))
				throw OracleFailure(who + ": interval wider than 2^-" + std::to_string(k));
			if (k > 0 && !levels.back().contains(iv))
				throw OracleFailure(who + ": interval at precision " + std::to_string(k) +
				                    " not nested in the previous one");
			levels.push_back(std::move(iv));
		}
		return levels[n];
	}
};
} // namespace

long default_precision_budget() { return g_budget.load(); }
void set_default_precision_budget(long n) { g_budget.store(n < 0 ? 0 : n); }

namespace detail {
struct Atom {
	unsigned long id;
	std::string label;
	IntervalGenerator gen;
	mutable NestedMemo memo;

	RationalInterval approx(long n) const
	{
		return memo.get(n, gen, label);
	}
};
unsigned long atom_id(const Atom &a) { return a.id; }
const std::string &atom_label(const Atom &a) { return a.label; }
} // namespace detail

struct OracleReal::Memo {
	NestedMemo nested;
};

namespace {
std::shared_ptr<const detail::Atom> make_atom(IntervalGenerator gen, std::string label)
{
	auto a = std::make_shared<detail::Atom>();
	a->id = g_next_atom.fetch_add(1);
	a->label = std::move(label);
	a->gen = std::move(gen);
	return a;
}
} // namespace

OracleReal::OracleReal(std::vector<Term> terms, RealAlgebraic constant)
: terms_(std::move(terms)), constant_(std::move(constant)), memo_(std::make_shared<Memo>())
{}

OracleReal OracleReal::from_generator(IntervalGenerator gen, std::string label)
{
	return OracleReal({{make_atom(std::move(gen), std::move(label)), Rational(1)}}, RealAlgebraic(Rational(0)));
}

OracleReal OracleReal::constant(const Rational &q) { return OracleReal({}, RealAlgebraic(q)); }

OracleReal OracleReal::exact(const RealAlgebraic &a) { return OracleReal({}, a); }

OracleReal OracleReal::ball(const Rational &q)
{
	return from_generator(
	    [q](long n) {
		    Rational r = pow2(-(n + 1));
		    return RationalInterval{q - r, q + r};
	    },
	    "ball");
}

OracleReal OracleReal::binary_expansion(const RealAlgebraic &a)
{
	return from_generator(
	    [a](long n) {
		    Rational cell = pow2(-n);
		    if (a.is_rational()) {
			    Rational k = Rational(floor(a.to_rational() / cell));
			    return RationalInterval{k * cell, (k + 1) * cell};
		    }
		    /* an irrational root never sits on a dyadic point */
		    for (long m = n + 1;; m++) {
			    auto iv = a.approx(m);
			    Rational k = Rational(floor(iv.lo / cell));
			    RationalInterval c{k * cell, (k + 1) * cell};
			    if (c.contains(iv))
				    return c;
		    }
	    },
	    "binary");
}

RationalInterval OracleReal::approx(long n) const
{
	auto compute = [this](long k) {
		const bool bare = terms_.size() == 1 && constant_.sign() == 0;
		const long extra = bare ? 0 : ceil_log2_abs(Rational(static_cast<long>(terms_.size()) + 1)) + 1;
		auto c = constant_.approx(k + extra);
		RationalInterval sum = c;
		for (const auto &[atom, q] : terms_) {
			long prec = k + extra + ceil_log2_abs(q);
			auto iv = atom->approx(prec);
			if (q > 0) {
				sum.lo += q * iv.lo;
				sum.hi += q * iv.hi;
			} else {
				sum.lo += q * iv.hi;
				sum.hi += q * iv.lo;
			}
		}
		return sum;
	};
	return memo_->nested.get(n, compute, terms_.size() == 1 ? terms_[0].first->label : "oracle");
}

OracleReal OracleReal::operator-() const { return scaled(Rational(-1)); }

OracleReal OracleReal::scaled(const Rational &q) const
{
	if (q == 0)
		return constant(0);
	std::vector<Term> t;
	for (const auto &[a, c] : terms_)
		t.emplace_back(a, Rational(c * q));
	return OracleReal(std::move(t), constant_.mul(q));
}

OracleReal OracleReal::shifted(const RealAlgebraic &c) const { return OracleReal(terms_, constant_ + c); }

OracleReal operator+(const OracleReal &a, const OracleReal &b)
{
	std::vector<OracleReal::Term> t;
	auto i = a.terms_.begin(), j = b.terms_.begin();
	while (i != a.terms_.end() || j != b.terms_.end()) {
		if (j == b.terms_.end() || (i != a.terms_.end() && i->first->id < j->first->id)) {
			t.push_back(*i++);
		} else if (i == a.terms_.end() || j->first->id < i->first->id) {
			t.push_back(*j++);
		} else {
			Rational s = i->second + j->second;
			if (s != 0)
				t.emplace_back(i->first, s);
			++i;
			++j;
		}
	}
	return OracleReal(std::move(t), a.constant_ + b.constant_);
}

OracleReal operator-(const OracleReal &a, const OracleReal &b) { return a + (-b); }

OracleReal operator*(const OracleReal &a, const OracleReal &b)
{
	if (a.is_exact() && a.constant_.is_rational())
		return b.scaled(a.constant_.to_rational());
	if (b.is_exact() && b.constant_.is_rational())
		return a.scaled(b.constant_.to_rational());
	if (a.is_exact() && b.is_exact())
		return OracleReal({}, a.constant_ * b.constant_);
	OracleReal x = a, y = b;
	auto gen = [x, y](long n) {
		Rational bx = max_abs(x.approx(0)) + 1, by = max_abs(y.approx(0)) + 1;
		long prec = n + ceil_log2_abs(bx + by) + 1;
		auto ix = x.approx(prec), iy = y.approx(prec);
		Rational c[4] = {ix.lo * iy.lo, ix.lo * iy.hi, ix.hi * iy.lo, ix.hi * iy.hi};
		RationalInterval r{c[0], c[0]};
		for (auto &v : c) {
			if (v < r.lo)
				r.lo = v;
			if (v > r.hi)
				r.hi = v;
		}
		return r;
	};
	return OracleReal::from_generator(gen, "product");
}

int OracleReal::sign(long budget) const
{
	if (is_exact())
		return constant_.sign();
	for (long n = 0; n <= budget; n++) {
		auto iv = approx(n);
		if (iv.lo > 0)
			return 1;
		if (iv.hi < 0)
			return -1;
	}
	throw ComparisonUndecidedAtPrecision("sign undecided after " + std::to_string(budget) +
	                                     " refinement steps");
}

OracleReal OracleReal::inverse(long budget) const
{
	if (is_exact()) {
		if (constant_.sign() == 0)
			throw DivisionByZero("inverse of zero");
		return OracleReal({}, constant_.inverse());
	}
	sign(budget);
	long k0 = 0;
	while (approx(k0).contains(Rational(0)))
		k0++;
	auto iv0 = approx(k0);
	Rational low = abs(iv0.lo) < abs(iv0.hi) ? abs(iv0.lo) : abs(iv0.hi);
	long shift = 2 * ceil_log2_abs(1 / low) + 1;
	OracleReal x = *this;
	auto gen = [x, k0, shift](long n) {
		auto iv = x.approx(std::max(k0, n + shift));
		Rational a = 1 / iv.hi, b = 1 / iv.lo;
		return RationalInterval{a, b};
	};
	return from_generator(gen, "inverse");
}

RealAlgebraic sqrt(const RealAlgebraic &a)
{
	if (a.sign() <= 0)
		throw PreconditionViolated("sqrt of non-positive algebraic");
	Poly p = a.poly();
	std::vector<Rational> c(2 * p.degree() + 1);
	for (int i = 0; i <= p.degree(); i++)
		c[2 * i] = p.coeff(i);
	Poly q(std::move(c));
	Poly sq = q.squarefree();
	SturmChain sc(sq);
	for (long n = 2;; n += 2) {
		auto iv = a.approx(n);
		if (iv.lo <= 0)
			continue;
		/* rational bounds for sqrt(lo) and sqrt(hi) at resolution 2^-n */
		Integer s = 1;
		mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * n));
		Integer lo_n = floor(iv.lo * Rational(s)), hi_n = ceil(iv.hi * Rational(s));
		Integer rl, rh;
		mpz_sqrt(rl.get_mpz_t(), lo_n.get_mpz_t());
		mpz_sqrt(rh.get_mpz_t(), hi_n.get_mpz_t());
		rh += 1;
		Rational den = pow2(n);
		Rational lo = Rational(rl) / den, hi = Rational(rh) / den;
		if (sc.count_closed(lo, hi) == 1)
			return RealAlgebraic(sq, lo, hi);
	}
}

} // namespace valsat
