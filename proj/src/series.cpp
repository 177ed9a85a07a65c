/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/series.hpp"
#include "valsat/errors.hpp"

#include <algorithm>
#include <cctype>

namespace valsat {

namespace {
std::optional<Exponent> min_opt(const std::optional<Exponent> &a, const std::optional<Exponent> &b)
{
	if (!a)
		return b;
	if (!b)
		return a;
	return *a < *b ? a : b;
}

void check_dim(const HahnSeries &a, const HahnSeries &b)
{
	if (a.dim() != b.dim())
		throw DimensionMismatch("series of dimension " + std::to_string(a.dim()) + " and " +
		                        std::to_string(b.dim()));
}
} // namespace

HahnSeries::HahnSeries(std::size_t n, std::vector<SeriesTerm> terms, std::optional<Exponent> trunc)
: n_(n), trunc_(std::move(trunc))
{
	for (const auto &t : terms)
		if (t.exp.dim() != n)
			throw DimensionMismatch("term exponent " + t.exp.to_string() + " in dimension " +
			                        std::to_string(n));
	std::stable_sort(terms.begin(), terms.end(), [](const SeriesTerm &a, const SeriesTerm &b) { return a.exp < b.exp; });
	for (auto &t : terms) {
		if (!terms_.empty() && terms_.back().exp == t.exp)
			terms_.back().coeff = terms_.back().coeff + t.coeff;
		else
			terms_.push_back(std::move(t));
		if (terms_.back().coeff.is_zero())
			terms_.pop_back();
	}
	apply_trunc();
}

void HahnSeries::apply_trunc()
{
	if (!trunc_)
		return;
	while (!terms_.empty() && terms_.back().exp >= *trunc_)
		terms_.pop_back();
}

HahnSeries HahnSeries::constant(std::size_t n, const CoefficientReal &c)
{
	return HahnSeries(n, {{Exponent::zero(n), c}});
}

HahnSeries HahnSeries::monomial(const Exponent &e, const CoefficientReal &c)
{
	return HahnSeries(e.dim(), {{e, c}});
}

HahnSeries HahnSeries::t(std::size_t n) { return monomial(Exponent::unit(n)); }

HahnSeries monomial(const Exponent &e, const CoefficientReal &c) { return HahnSeries::monomial(e, c); }

Value HahnSeries::valuation() const
{
	if (!terms_.empty())
		return terms_.front().exp;
	if (trunc_)
		throw TruncationInsufficient("valuation unknown below truncation bound " + trunc_->to_string());
	return Value::infinity();
}

Value valuation(const HahnSeries &x) { return x.valuation(); }

const SeriesTerm &HahnSeries::leading() const
{
	if (terms_.empty())
		throw PreconditionViolated("leading term of a series without terms");
	return terms_.front();
}

CoefficientReal HahnSeries::coefficient(const Exponent &e) const
{
	for (const auto &t : terms_)
		if (t.exp == e)
			return t.coeff;
	if (trunc_ && e >= *trunc_)
		throw TruncationInsufficient("coefficient at " + e.to_string() + " beyond truncation bound");
	return CoefficientReal();
}

HahnSeries HahnSeries::leading_monomial() const { return monomial(leading().exp, leading().coeff); }

HahnSeries HahnSeries::truncated(const Exponent &bound) const
{
	HahnSeries r = *this;
	r.trunc_ = min_opt(trunc_, bound);
	r.apply_trunc();
	return r;
}

HahnSeries HahnSeries::without_trunc() const
{
	HahnSeries r = *this;
	r.trunc_.reset();
	return r;
}

HahnSeries HahnSeries::operator-() const
{
	HahnSeries r = *this;
	for (auto &t : r.terms_)
		t.coeff = -t.coeff;
	return r;
}

HahnSeries operator+(const HahnSeries &a, const HahnSeries &b)
{
	check_dim(a, b);
	std::vector<SeriesTerm> t = a.terms_;
	t.insert(t.end(), b.terms_.begin(), b.terms_.end());
	return HahnSeries(a.n_, std::move(t), min_opt(a.trunc_, b.trunc_));
}

HahnSeries operator-(const HahnSeries &a, const HahnSeries &b) { return a + (-b); }

HahnSeries operator*(const HahnSeries &a, const HahnSeries &b)
{
	check_dim(a, b);
	std::vector<SeriesTerm> t;
	for (const auto &x : a.terms_)
		for (const auto &y : b.terms_)
			t.push_back({x.exp + y.exp, x.coeff * y.coeff});
	/* a = A + O(t^ta), b = B + O(t^tb): the error is O(t^min(ta + v(b), tb + v(a))) */
	std::optional<Exponent> tr;
	if (a.trunc_ && !b.terms_.empty())
		tr = min_opt(tr, *a.trunc_ + b.terms_.front().exp);
	if (b.trunc_ && !a.terms_.empty())
		tr = min_opt(tr, *b.trunc_ + a.terms_.front().exp);
	if (a.trunc_ && b.trunc_ && (a.terms_.empty() || b.terms_.empty()))
		tr = min_opt(tr, *a.trunc_ + *b.trunc_);
	return HahnSeries(a.n_, std::move(t), tr);
}

HahnSeries operator*(const CoefficientReal &c, const HahnSeries &a)
{
	if (c.is_zero())
		return HahnSeries(a.n_);
	HahnSeries r = a;
	for (auto &t : r.terms_)
		t.coeff = c * t.coeff;
	return r;
}

HahnSeries invert(const HahnSeries &x, const Exponent &order)
{
	const auto &lead = x.leading();
	const std::size_t n = x.dim();
	CoefficientReal cinv = lead.coeff.inverse();
	HahnSeries m = HahnSeries::monomial(-lead.exp, cinv);
	if (x.terms().size() == 1 && !x.trunc())
		return m;
	/* x = c t^g (1 + u), v(u) > 0;  1/(1 + u) = sum (-u)^k */
	const Exponent rel = order - lead.exp;
	HahnSeries u = m * x - HahnSeries::constant(n, 1);
	HahnSeries w = HahnSeries::constant(n, 1), p = w;
	std::optional<Exponent> reached = rel;
	constexpr int kMaxPowers = 64;
	constexpr std::size_t kMaxTerms = 256;
	for (int k = 0;; k++) {
		p = -(p * u).without_trunc().truncated(rel);
		if (u.trunc() && !p.has_no_terms()) {
			/* a truncated u leaves every power uncertain above its own bound */
			reached = min_opt(reached, *u.trunc() + p.terms().front().exp - u.terms().front().exp);
		}
		if (p.has_no_terms())
			break;
		if (k == kMaxPowers || w.terms().size() + p.terms().size() > kMaxTerms) {
			reached = min_opt(reached, p.terms().front().exp);
			break;
		}
		w = w + p;
	}
	if (u.trunc())
		reached = min_opt(reached, *u.trunc());
	HahnSeries y = m * w.without_trunc();
	return y.truncated(*reached - lead.exp);
}

int compare_series(const HahnSeries &x, const HahnSeries &y, long budget)
{
	if (!x.trunc() && !y.trunc() && x.dim() == y.dim()) {
		/* merge walk: the first differing term decides, no sum is formed */
		const auto &a = x.terms(), &b = y.terms();
		std::size_t i = 0, j = 0;
		while (i < a.size() || j < b.size()) {
			if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp))
				return a[i].coeff.sign(budget);
			if (i == a.size() || b[j].exp < a[i].exp)
				return -b[j].coeff.sign(budget);
			int c = compare(a[i].coeff, b[j].coeff, budget);
			if (c)
				return c;
			i++, j++;
		}
		return 0;
	}
	HahnSeries d = x - y;
	if (d.has_no_terms()) {
		if (d.trunc())
			throw TruncationInsufficient("difference vanishes only up to " + d.trunc()->to_string());
		return 0;
	}
	return d.leading().coeff.sign(budget);
}

CoefficientReal residue(const HahnSeries &a)
{
	if (!a.has_no_terms() && a.leading().exp < Exponent::zero(a.dim()))
		throw NegativeValuation("residue of a series with valuation " + a.leading().exp.to_string());
	return a.coefficient(Exponent::zero(a.dim()));
}

CoefficientReal arch_ratio(const HahnSeries &y, const HahnSeries &x)
{
	if (x.has_no_terms())
		throw PreconditionViolated("arch_ratio against zero");
	if (y.has_no_terms())
		return CoefficientReal();
	if (!(y.leading().exp == x.leading().exp))
		throw ClassMismatch("valuations " + y.leading().exp.to_string() + " and " +
		                    x.leading().exp.to_string() + " differ");
	return y.leading().coeff / x.leading().coeff;
}

std::string HahnSeries::to_string() const
{
	std::string s;
	for (const auto &t : terms_) {
		CoefficientReal c = t.coeff;
		bool neg = false;
		if (c.is_rational() && c.rational() < 0)
			neg = true;
		else if (c.is_algebraic() && c.algebraic().sign() < 0)
			neg = true;
		if (neg)
			c = -c;
		if (s.empty())
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		if (t.exp.is_zero())
			s += c.to_string();
		else if (c.is_one())
			s += "t^" + t.exp.to_string();
		else
			s += c.to_string() + "*t^" + t.exp.to_string();
	}
	if (trunc_)
		s += (s.empty() ? "" : " + ") + std::string("O(t^") + trunc_->to_string() + ")";
	return s.empty() ? "0" : s;
}

/* ---- parsing ---- */

namespace {
class SeriesParser {
	std::string_view s_;
	std::size_t pos_ = 0;
	std::size_t n_;

	[[noreturn]] void fail(const std::string &msg) const { throw SyntaxError(msg, pos_ + 1); }
	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			pos_++;
	}
	bool peek(char c)
	{
		skip();
		return pos_ < s_.size() && s_[pos_] == c;
	}
	bool eat(char c)
	{
		if (!peek(c))
			return false;
		pos_++;
		return true;
	}
	void expect(char c)
	{
		if (!eat(c))
			fail(std::string("expected '") + c + "'");
	}

public:
	SeriesParser(std::string_view s, std::size_t n) : s_(s), n_(n) {}

	Rational rational()
	{
		skip();
		std::size_t start = pos_;
		if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
			pos_++;
		auto digits = [&] {
			std::size_t b = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				pos_++;
			return pos_ > b;
		};
		if (!digits()) {
			pos_ = start;
			fail("expected a rational number");
		}
		if (pos_ < s_.size() && s_[pos_] == '/') {
			pos_++;
			if (!digits())
				fail("expected a denominator");
		}
		try {
			return parse_rational(s_.substr(start, pos_ - start));
		} catch (const SyntaxError &e) {
			throw e.shifted(start);
		}
	}

	Exponent exponent()
	{
		if (eat('(')) {
			std::vector<Rational> c{rational()};
			while (eat(','))
				c.push_back(rational());
			expect(')');
			if (c.size() != n_)
				throw DimensionMismatch("exponent with " + std::to_string(c.size()) +
				                        " coordinates in dimension " + std::to_string(n_));
			return Exponent(std::move(c));
		}
		return Exponent::unit(n_, rational());
	}

	Exponent tpart()
	{
		expect('t');
		if (eat('^'))
			return exponent();
		return Exponent::unit(n_);
	}

	CoefficientReal coeff()
	{
		skip();
		if (s_.substr(pos_, 4) == "alg[") {
			auto close = s_.find(']', pos_);
			if (close == std::string_view::npos)
				fail("unterminated algebraic literal");
			std::size_t start = pos_;
			pos_ = close + 1;
			try {
				return CoefficientReal(parse_algebraic(s_.substr(start, pos_ - start)));
			} catch (const SyntaxError &e) {
				throw e.shifted(start);
			}
		}
		return CoefficientReal(rational());
	}

	/* one term, sign already consumed */
	SeriesTerm term()
	{
		skip();
		if (peek('t'))
			return {tpart(), CoefficientReal(1)};
		CoefficientReal c = coeff();
		if (eat('*'))
			return {tpart(), c};
		return {Exponent::zero(n_), c};
	}

	HahnSeries series()
	{
		std::vector<SeriesTerm> terms;
		std::optional<Exponent> trunc;
		bool neg = eat('-');
		while (true) {
			skip();
			if (s_.substr(pos_, 2) == "O(") {
				pos_ += 2;
				trunc = tpart();
				expect(')');
			} else {
				SeriesTerm t = term();
				if (neg)
					t.coeff = -t.coeff;
				terms.push_back(std::move(t));
			}
			skip();
			if (pos_ == s_.size())
				break;
			if (eat('+'))
				neg = false;
			else if (eat('-'))
				neg = true;
			else
				fail("expected '+' or '-'");
			if (trunc)
				fail("terms after the truncation bound");
		}
		return HahnSeries(n_, std::move(terms), trunc);
	}

	Exponent lone_exponent()
	{
		Exponent e = exponent();
		skip();
		if (pos_ != s_.size())
			fail("trailing input");
		return e;
	}
};
} // namespace

HahnSeries parse_series(std::string_view text, std::size_t n)
{
	return SeriesParser(text, n).series();
}

Exponent parse_exponent(std::string_view text, std::size_t n) { return SeriesParser(text, n).lone_exponent(); }

} // namespace valsat
