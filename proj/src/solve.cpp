/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/solve.hpp"
#include "valsat/errors.hpp"

#include <algorithm>

namespace valsat {

namespace {

bool is_monomial(const HahnSeries &x) { return x.terms().size() == 1 && !x.trunc(); }

HahnSeries monomial_inverse(const HahnSeries &m)
{
	const auto &lt = m.leading();
	return HahnSeries::monomial(-lt.exp, lt.coeff.inverse());
}

} // namespace

SeriesFraction::SeriesFraction(HahnSeries n, HahnSeries d) : num(std::move(n)), den(std::move(d))
{
	int s = sign(den);
	if (s == 0)
		throw DivisionByZero("fraction with zero denominator");
	if (s < 0) {
		num = -num;
		den = -den;
	}
	if (is_monomial(den)) {
		num = num * monomial_inverse(den);
		den = HahnSeries::constant(num.dim(), CoefficientReal(1));
	}
}

SeriesFraction::SeriesFraction(const HahnSeries &x)
: num(x), den(HahnSeries::constant(x.dim(), CoefficientReal(1)))
{
}

HahnSeries SeriesFraction::value(const Exponent &precision) const
{
	if (is_monomial(den))
		return num * monomial_inverse(den);
	Value v = valuation(den);
	return num * invert(den, v.exponent() + precision);
}

std::string SeriesFraction::to_string() const
{
	if (is_monomial(den))
		return (num * monomial_inverse(den)).to_string();
	return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

int compare(const SeriesFraction &a, const SeriesFraction &b)
{
	/* denominators are positive */
	auto unit = [](const HahnSeries &d) { return is_monomial(d) && d.leading().exp.is_zero() && d.leading().coeff.is_one(); };
	if (unit(a.den) && unit(b.den))
		return compare_series(a.num, b.num);
	return compare_series(a.num * b.den, b.num * a.den);
}

bool IntervalSet::is_empty() const
{
	return std::none_of(at.begin(), at.end(), [](bool b) { return b; }) &&
	       std::none_of(gap.begin(), gap.end(), [](bool b) { return b; });
}

bool IntervalSet::contains(const SeriesFraction &x) const
{
	for (std::size_t i = 0; i < points.size(); i++) {
		int c = compare(x, points[i]);
		if (c < 0)
			return gap[i];
		if (c == 0)
			return at[i];
	}
	return gap.back();
}

std::optional<SeriesFraction> IntervalSet::as_point() const
{
	if (std::any_of(gap.begin(), gap.end(), [](bool b) { return b; }))
		return std::nullopt;
	std::optional<SeriesFraction> p;
	for (std::size_t i = 0; i < at.size(); i++) {
		if (!at[i])
			continue;
		if (p)
			return std::nullopt;
		p = points[i];
	}
	return p;
}

IntervalSet IntervalSet::everything()
{
	IntervalSet s;
	s.gap.push_back(true);
	return s;
}

IntervalSet IntervalSet::complement() const
{
	IntervalSet c = *this;
	c.at.flip();
	c.gap.flip();
	return c;
}

namespace {

SeriesFraction gap_sample(const std::vector<SeriesFraction> &pts, std::size_t i, std::size_t n)
{
	if (pts.empty())
		return SeriesFraction(HahnSeries(n));
	if (i == 0)
		return SeriesFraction(pts[0].num - pts[0].den, pts[0].den);
	if (i == pts.size())
		return SeriesFraction(pts[i - 1].num + pts[i - 1].den, pts[i - 1].den);
	const auto &a = pts[i - 1], &b = pts[i];
	return SeriesFraction(a.num * b.den + b.num * a.den, CoefficientReal(2) * (a.den * b.den));
}

/* drops breakpoints that separate nothing */
IntervalSet normalized(IntervalSet s)
{
	IntervalSet out;
	out.gap.push_back(s.gap[0]);
	for (std::size_t i = 0; i < s.points.size(); i++) {
		if (s.at[i] == out.gap.back() && s.gap[i + 1] == out.gap.back())
			continue;
		out.points.push_back(std::move(s.points[i]));
		out.at.push_back(s.at[i]);
		out.gap.push_back(s.gap[i + 1]);
	}
	return out;
}

} // namespace

IntervalSet intersect(const IntervalSet &a, const IntervalSet &b)
{
	IntervalSet out;
	std::size_t i = 0, j = 0;
	while (i < a.points.size() || j < b.points.size()) {
		int c = i == a.points.size() ? 1 : j == b.points.size() ? -1 : compare(a.points[i], b.points[j]);
		out.points.push_back(c <= 0 ? a.points[i] : b.points[j]);
		if (c <= 0)
			i++;
		if (c >= 0)
			j++;
	}
	const std::size_t n = !a.points.empty() ? a.points[0].num.dim() : !b.points.empty() ? b.points[0].num.dim() : 1;
	for (std::size_t k = 0; k <= out.points.size(); k++) {
		if (k > 0) {
			const auto &p = out.points[k - 1];
			out.at.push_back(a.contains(p) && b.contains(p));
		}
		if (a.points.empty() && b.points.empty()) {
			out.gap.push_back(a.gap[0] && b.gap[0]);
			continue;
		}
		auto x = gap_sample(out.points, k, n);
		out.gap.push_back(a.contains(x) && b.contains(x));
	}
	return normalized(std::move(out));
}

bool IntervalSet::meets_at_or_below(const SeriesFraction &y) const
{
	for (std::size_t i = 0; i <= points.size(); i++) {
		if (gap[i] && (i == 0 || compare(points[i - 1], y) < 0))
			return true;
		if (i < points.size() && at[i] && compare(points[i], y) <= 0)
			return true;
	}
	return false;
}

bool IntervalSet::meets_at_or_above(const SeriesFraction &y) const
{
	for (std::size_t i = 0; i <= points.size(); i++) {
		if (gap[i] && (i == points.size() || compare(points[i], y) > 0))
			return true;
		if (i < points.size() && at[i] && compare(points[i], y) >= 0)
			return true;
	}
	return false;
}

std::optional<SeriesFraction> IntervalSet::sample() const
{
	if (auto p = as_point())
		return p;
	const std::size_t n = points.empty() ? 1 : points[0].num.dim();
	for (std::size_t i = 0; i <= points.size(); i++) {
		if (gap[i])
			return gap_sample(points, i, n);
		if (i < points.size() && at[i])
			return points[i];
	}
	return std::nullopt;
}

namespace {

void collect_atoms(const Formula &f, std::vector<Term> &out)
{
	if (f.kind() == Kind::Atom) {
		out.push_back(f.atom().d);
		return;
	}
	if (!f.is_quantifier_free())
		throw PreconditionViolated("solution sets need quantifier-free constraints");
	for (const auto &k : f.children())
		collect_atoms(k, out);
}

/* a * var + p with a, p evaluated */
struct LinearForm {
	HahnSeries a, p;
};

LinearForm linearize(const Term &d, const std::string &var, const Env &env)
{
	if (d.degree_in(var) > 1)
		throw NonlinearUnsupported("atom is not linear in " + var + ": " + d.to_string());
	auto [a, p] = d.split_linear(var);
	return {eval_term(a, env), eval_term(p, env)};
}

bool truth_at(const Formula &f, const std::vector<std::pair<Term, LinearForm>> &forms,
              const SeriesFraction &x)
{
	switch (f.kind()) {
	case Kind::True:
		return true;
	case Kind::False:
		return false;
	case Kind::Atom: {
		const std::string key = f.atom().d.to_string();
		for (const auto &[t, lf] : forms) {
			if (t.to_string() != key)
				continue;
			/* sign of a * num / den + p, den > 0 */
			int s = sign(lf.a * x.num + lf.p * x.den);
			return f.atom().rel == Atom::Rel::Pos ? s > 0 : s == 0;
		}
		throw PreconditionViolated("atom missing from linear forms");
	}
	case Kind::Not:
		return !truth_at(f.children()[0], forms, x);
	case Kind::And:
		for (const auto &k : f.children())
			if (!truth_at(k, forms, x))
				return false;
		return true;
	case Kind::Or:
		for (const auto &k : f.children())
			if (truth_at(k, forms, x))
				return true;
		return false;
	case Kind::Implies:
		return !truth_at(f.children()[0], forms, x) || truth_at(f.children()[1], forms, x);
	case Kind::Iff:
		return truth_at(f.children()[0], forms, x) == truth_at(f.children()[1], forms, x);
	default:
		throw PreconditionViolated("quantifier in solution set");
	}
}

} // namespace

IntervalSet solution_set(const std::vector<Formula> &conj, const std::string &var, const Env &env)
{
	std::vector<Term> atoms;
	for (const auto &f : conj)
		collect_atoms(f, atoms);
	std::vector<std::pair<Term, LinearForm>> forms;
	std::vector<SeriesFraction> crit;
	for (const auto &d : atoms) {
		LinearForm lf = linearize(d, var, env);
		if (!lf.a.is_zero() && sign(lf.a) != 0)
			crit.emplace_back(-lf.p, lf.a);
		forms.emplace_back(d, std::move(lf));
	}
	std::sort(crit.begin(), crit.end(),
	          [](const SeriesFraction &a, const SeriesFraction &b) { return compare(a, b) < 0; });
	IntervalSet out;
	for (auto &c : crit)
		if (out.points.empty() || compare(out.points.back(), c) != 0)
			out.points.push_back(std::move(c));

	const std::size_t m = out.points.size();
	const std::size_t n = env.n;
	auto member = [&](const SeriesFraction &x) {
		for (const auto &f : conj)
			if (!truth_at(f, forms, x))
				return false;
		return true;
	};
	const HahnSeries one = HahnSeries::constant(n, CoefficientReal(1));
	if (m == 0) {
		out.gap.push_back(member(SeriesFraction(HahnSeries(n))));
		return out;
	}
	out.gap.push_back(member(SeriesFraction(out.points[0].num - out.points[0].den, out.points[0].den)));
	for (std::size_t i = 0; i < m; i++) {
		out.at.push_back(member(out.points[i]));
		if (i + 1 < m) {
			const auto &a = out.points[i], &b = out.points[i + 1];
			out.gap.push_back(member(SeriesFraction(a.num * b.den + b.num * a.den,
			                                        CoefficientReal(2) * (a.den * b.den))));
		}
	}
	out.gap.push_back(member(SeriesFraction(out.points[m - 1].num + out.points[m - 1].den, out.points[m - 1].den)));
	return out;
}

bool satisfiable(const std::vector<Formula> &conj, const std::string &var, const Env &env)
{
	return !solution_set(conj, var, env).is_empty();
}

bool entails(const std::vector<Formula> &conj, const Formula &f, const std::string &var, const Env &env)
{
	std::vector<Formula> c = conj;
	c.push_back(Formula::negation(f));
	return !satisfiable(c, var, env);
}

CutBounds cut_bounds(const std::vector<Formula> &conj, const Env &env, const std::string &var,
                     const std::optional<Exponent> &precision)
{
	CutBounds cb;
	cb.set = solution_set(conj, var, env);
	if (cb.set.is_empty())
		throw Unsatisfiable("constraints on " + var + " have no common solution");
	const Exponent prec = precision ? *precision : Exponent::unit(env.n, 16, 0);
	if (auto p = cb.set.as_point()) {
		cb.point = p->value(prec);
		cb.lower_exact = cb.upper_exact = *p;
		cb.lower_closed = cb.upper_closed = true;
		return cb;
	}
	const auto &s = cb.set;
	const std::size_t m = s.points.size();
	if (!s.gap.front()) {
		for (std::size_t i = 0; i < m; i++) {
			if (s.at[i] || s.gap[i + 1]) {
				cb.lower_exact = s.points[i];
				cb.lower_closed = s.at[i];
				break;
			}
		}
	}
	if (!s.gap.back()) {
		for (std::size_t i = m; i-- > 0;) {
			if (s.at[i] || s.gap[i]) {
				cb.upper_exact = s.points[i];
				cb.upper_closed = s.at[i];
				break;
			}
		}
	}
	if (cb.lower_exact)
		cb.lower = cb.lower_exact->value(prec);
	if (cb.upper_exact)
		cb.upper = cb.upper_exact->value(prec);
	return cb;
}

} // namespace valsat
