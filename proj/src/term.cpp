/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/term.hpp"
#include "valsat/errors.hpp"

namespace valsat {

int Monomial::degree() const
{
	int d = 0;
	for (const auto &f : factors)
		d += f.second;
	return d;
}

int Monomial::degree_in(const std::string &sym) const
{
	for (const auto &f : factors)
		if (f.first == sym)
			return f.second;
	return 0;
}

Monomial Monomial::without(const std::string &sym) const
{
	Monomial r;
	for (const auto &f : factors)
		if (f.first != sym)
			r.factors.push_back(f);
	return r;
}

std::string Monomial::to_string() const
{
	std::string s;
	for (const auto &[name, k] : factors) {
		if (!s.empty())
			s += "*";
		s += name;
		if (k != 1)
			s += "^" + std::to_string(k);
	}
	return s;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
	Monomial r;
	auto i = a.factors.begin(), j = b.factors.begin();
	while (i != a.factors.end() || j != b.factors.end()) {
		if (j == b.factors.end() || (i != a.factors.end() && i->first < j->first))
			r.factors.push_back(*i++);
		else if (i == a.factors.end() || j->first < i->first)
			r.factors.push_back(*j++);
		else {
			r.factors.emplace_back(i->first, i->second + j->second);
			++i;
			++j;
		}
	}
	return r;
}

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const
{
	int da = a.degree(), db = b.degree();
	if (da != db)
		return da > db;
	return a.factors < b.factors;
}

Term Term::constant(const Rational &q)
{
	Term t;
	if (q != 0) {
		Rational c = q;
		c.canonicalize();
		t.m_[Monomial{}] = c;
	}
	return t;
}

Term Term::symbol(const std::string &name)
{
	Term t;
	t.m_[Monomial{{{name, 1}}}] = 1;
	return t;
}

bool Term::is_constant() const { return m_.empty() || (m_.size() == 1 && m_.begin()->first.is_constant()); }

Rational Term::constant_value() const
{
	auto it = m_.find(Monomial{});
	return it == m_.end() ? Rational(0) : it->second;
}

int Term::degree() const { return m_.empty() ? -1 : m_.begin()->first.degree(); }

int Term::degree_in(const std::string &sym) const
{
	int d = 0;
	for (const auto &[mono, c] : m_)
		d = std::max(d, mono.degree_in(sym));
	return d;
}

std::set<std::string> Term::symbols() const
{
	std::set<std::string> s;
	for (const auto &[mono, c] : m_)
		for (const auto &f : mono.factors)
			s.insert(f.first);
	return s;
}

std::pair<Term, Term> Term::split_linear(const std::string &sym) const
{
	Term a, rest;
	for (const auto &[mono, c] : m_) {
		int k = mono.degree_in(sym);
		if (k > 1)
			throw NonlinearUnsupported("'" + sym + "' occurs with degree " + std::to_string(k));
		if (k == 1)
			a.m_[mono.without(sym)] = c;
		else
			rest.m_[mono] = c;
	}
	return {a, rest};
}

Term Term::substitute(const std::string &sym, const Term &by) const
{
	Term r;
	for (const auto &[mono, c] : m_) {
		int k = mono.degree_in(sym);
		Term part;
		part.m_[mono.without(sym)] = c;
		for (int i = 0; i < k; i++)
			part = part * by;
		r = r + part;
	}
	return r;
}

Term Term::operator-() const { return Rational(-1) * *this; }

Term operator+(const Term &a, const Term &b)
{
	Term r = a;
	for (const auto &[mono, c] : b.m_) {
		Rational &slot = r.m_[mono];
		slot += c;
		if (slot == 0)
			r.m_.erase(mono);
	}
	return r;
}

Term operator-(const Term &a, const Term &b) { return a + (-b); }

Term operator*(const Term &a, const Term &b)
{
	Term r;
	for (const auto &[ma, ca] : a.m_)
		for (const auto &[mb, cb] : b.m_) {
			Term t;
			t.m_[ma * mb] = ca * cb;
			r = r + t;
		}
	return r;
}

Term operator*(const Rational &q, const Term &a)
{
	Term r;
	if (q == 0)
		return r;
	for (const auto &[mono, c] : a.m_)
		r.m_[mono] = q * c;
	return r;
}

HahnSeries Term::eval(const std::function<HahnSeries(const std::string &)> &lookup, std::size_t n) const
{
	std::map<std::string, HahnSeries> cache;
	HahnSeries sum(n);
	for (const auto &[mono, c] : m_) {
		HahnSeries p = HahnSeries::constant(n, CoefficientReal(c));
		for (const auto &[name, k] : mono.factors) {
			auto it = cache.find(name);
			if (it == cache.end())
				it = cache.emplace(name, lookup(name)).first;
			for (int i = 0; i < k; i++)
				p = p * it->second;
		}
		sum = sum + p;
	}
	return sum;
}

std::string Term::to_string() const
{
	if (m_.empty())
		return "0";
	std::string s;
	for (const auto &[mono, c] : m_) {
		Rational a = abs(c);
		if (s.empty())
			s += c < 0 ? "-" : "";
		else
			s += c < 0 ? " - " : " + ";
		if (mono.is_constant())
			s += valsat::to_string(a);
		else if (a == 1)
			s += mono.to_string();
		else
			s += valsat::to_string(a) + "*" + mono.to_string();
	}
	return s;
}

bool is_series_symbol(const std::string &sym) { return !sym.empty() && sym.front() == '['; }

std::string series_symbol(const HahnSeries &s) { return "[" + s.to_string() + "]"; }

} // namespace valsat
