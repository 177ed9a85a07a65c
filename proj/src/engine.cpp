/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/engine.hpp"

#include "valsat/errors.hpp"
#include "valsat/number_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace valsat {

void Budgets::validate() const
{
	if (height <= 0 || denominator <= 0 || prefix == 0 || precision <= 0)
		throw PreconditionViolated("budgets must be positive");
}

std::string to_string(Side s)
{
	switch (s) {
	case Side::Below: return "below";
	case Side::Above: return "above";
	case Side::Equal: return "equal";
	case Side::Undecided: return "undecided";
	}
	return "?";
}

std::string to_string(CaseTag t)
{
	switch (t) {
	case CaseTag::Realized: return "realized";
	case CaseTag::ImmediateTranscendental: return "immediate-transcendental";
	case CaseTag::ResidueTranscendental: return "residue-transcendental";
	case CaseTag::GroupTranscendental: return "group-transcendental";
	}
	return "?";
}

Side CutOracle::side(const HahnSeries &y)
{
	queries_++;
	return decide(y);
}

Side SeriesCutOracle::decide(const HahnSeries &y)
{
	int c = compare_series(y, x0_);
	return c < 0 ? Side::Below : c > 0 ? Side::Above : Side::Equal;
}

Side SetCutOracle::decide(const HahnSeries &y)
{
	SeriesFraction f(y);
	bool below = !set_.meets_at_or_below(f), above = !set_.meets_at_or_above(f);
	if (below && above)
		throw OracleInconsistent("empty solution set");
	if (below)
		return Side::Below;
	if (above)
		return Side::Above;
	if (auto p = set_.as_point(); p && compare(*p, f) == 0)
		return Side::Equal;
	return Side::Undecided;
}

namespace {

Rational simplest_positive(const Rational &lo, const Rational &hi)
{
	Rational fl(floor(lo));
	if (fl == lo)
		return lo;
	if (fl + 1 <= hi)
		return fl + 1;
	Rational r = fl + 1 / simplest_positive(1 / (hi - fl), 1 / (lo - fl));
	r.canonicalize();
	return r;
}

/* least height rational in [lo, hi]; unbounded ends are nullopt */
Rational simplest_rational(const std::optional<Rational> &lo, const std::optional<Rational> &hi)
{
	if ((!lo || *lo <= 0) && (!hi || *hi >= 0))
		return 0;
	if (!hi)
		return Rational(ceil(*lo));
	if (!lo)
		return Rational(floor(*hi));
	if (*hi < 0)
		return -simplest_positive(-*hi, -*lo);
	return simplest_positive(*lo, *hi);
}

/* The cut of x0 along d + q*g, q rational. */
struct RealCut {
	enum Kind { Finite, InfPos, InfNeg } kind = Finite;
	std::optional<Rational> lo, hi; /* enclosure of a finite residue */
	/* region of q the oracle could not place, if any */
	bool gap = false;
	std::optional<Rational> gap_lo, gap_hi;
	/* nested enclosures, coarsest first */
	std::vector<RationalInterval> history;
	/* bisection state, kept so the residue can be refined further */
	std::optional<HahnSeries> d, g;
	Rational alo, ahi, blo, bhi;

	bool zero() const
	{
		return kind == Finite && *lo <= 0 && *hi >= 0;
	}
	RationalInterval interval() const
	{
		return {*lo, *hi};
	}
};

/* Continues the bisection of a finite cut on a private oracle copy. */
class CutRefiner {
	std::mutex m_;
	std::shared_ptr<CutOracle> o_;
	HahnSeries d_, g_;
	Rational alo_, ahi_, blo_, bhi_;

public:
	CutRefiner(std::shared_ptr<CutOracle> o, const RealCut &c)
	: o_(std::move(o)), d_(*c.d), g_(*c.g), alo_(c.alo), ahi_(c.ahi), blo_(c.blo), bhi_(c.bhi)
	{
	}
	RationalInterval at(long n)
	{
		std::lock_guard<std::mutex> lock(m_);
		const Rational eps = pow2(-n);
		auto side = [&](const Rational &q) { return o_->side(d_ + CoefficientReal(q) * g_); };
		while (bhi_ - alo_ > eps) {
			if (ahi_ < blo_ && blo_ - ahi_ > eps / 2)
				throw OracleFailure("residue cut leaves an undecided gap");
			Rational mid = (alo_ + ahi_) / 2;
			(side(mid) == Side::Below ? alo_ : ahi_) = mid;
			mid = (blo_ + bhi_) / 2;
			(side(mid) == Side::Above ? bhi_ : blo_) = mid;
		}
		return {alo_, bhi_};
	}
};

RealCut real_cut(CutOracle &o, const HahnSeries &d, const HahnSeries &g, long precision)
{
	const Rational M = pow2(std::min<long>(precision / 2, 32));
	auto at = [&](const Rational &q) { return o.side(d + CoefficientReal(q) * g); };
	RealCut c;
	Side sp = at(M);
	if (sp == Side::Below) {
		c.kind = RealCut::InfPos;
		return c;
	}
	Side sn = at(-M);
	if (sn == Side::Above) {
		c.kind = RealCut::InfNeg;
		return c;
	}
	if (sp == Side::Equal || sn == Side::Equal) {
		c.lo = c.hi = sp == Side::Equal ? M : -M;
		c.history.push_back({*c.lo, *c.hi});
		return c;
	}
	/* a side left open at +-M is read as unbounded there; with neither
	 * side bounded the positive reading is the default */
	if (sp != Side::Above) {
		c.kind = RealCut::InfPos;
		return c;
	}
	if (sn != Side::Below) {
		c.kind = RealCut::InfNeg;
		return c;
	}
	/* a = sup of Below, b = inf of Above, both inside [-M, M] */
	Rational alo = -M, ahi = M, blo = -M, bhi = M;
	for (long k = 0; k < precision; k++) {
		Rational mid = (alo + ahi) / 2;
		(at(mid) == Side::Below ? alo : ahi) = mid;
		mid = (blo + bhi) / 2;
		(at(mid) == Side::Above ? bhi : blo) = mid;
		c.history.push_back({alo, bhi});
	}
	c.lo = alo;
	c.hi = bhi;
	c.alo = alo, c.ahi = ahi, c.blo = blo, c.bhi = bhi;
	c.d = d;
	c.g = g;
	if (ahi < blo) {
		c.gap = true;
		c.gap_lo = ahi;
		c.gap_hi = blo;
	}
	return c;
}

std::optional<RealAlgebraic> recognize_algebraic(const Rational &lo, const Rational &hi)
{
	for (long h = 1; h <= 12; h++) {
		for (int deg : {2, 3}) {
			const long bound = deg == 2 ? 12 : 4;
			if (h > bound)
				continue;
			std::vector<long> c(deg + 1, -h);
			for (;;) {
				long top = 0;
				for (long x : c)
					top = std::max(top, std::labs(x));
				if (top == h && c[deg] > 0) {
					std::vector<Rational> rc(c.begin(), c.end());
					Poly p(rc);
					if (p.sign_at(lo) * p.sign_at(hi) < 0) {
						try {
							RealAlgebraic a(p, lo, hi);
							if (!a.is_rational())
								return a;
						} catch (const MalformedAlgebraic &) {
						}
					}
				}
				std::size_t i = 0;
				while (i < c.size() && c[i] == h)
					c[i++] = -h;
				if (i == c.size())
					break;
				c[i]++;
			}
		}
	}
	return std::nullopt;
}

/* Outcome of a finite residue under the height budget. */
struct Residue {
	std::optional<Rational> rational; /* accepted within the budget */
	std::optional<CoefficientReal> fill;
	std::string rule;
};

Residue resolve_residue(const RealCut &c, const Budgets &b, const CutOracle &o)
{
	Residue r;
	if (c.gap) {
		Rational q = simplest_rational(c.gap_lo, c.gap_hi);
		if (height(q) <= b.height) {
			r.rational = q;
			r.rule = "rational residue " + q.get_str();
		} else {
			r.fill = CoefficientReal(q);
			r.rule = "undecided residue filled by " + q.get_str();
		}
		return r;
	}
	Rational q = simplest_rational(c.lo, c.hi);
	if (height(q) <= b.height) {
		r.rational = q;
		r.rule = "rational residue " + q.get_str();
		return r;
	}
	if (height(q) <= 2 * b.height)
		throw BudgetExhausted("residue " + q.get_str() + " exceeds the height budget");
	if (auto a = recognize_algebraic(*c.lo, *c.hi)) {
		r.fill = CoefficientReal(*a);
		r.rule = "algebraic residue " + a->to_literal();
		return r;
	}
	auto hist = c.history;
	std::shared_ptr<CutRefiner> more;
	if (c.d && c.g)
		more = std::make_shared<CutRefiner>(o.clone(), c);
	r.fill = CoefficientReal(OracleReal::from_generator(
		[hist, more](long n) {
			for (const auto &I : hist)
				if (I.width() <= pow2(-n))
					return I;
			if (!more)
				throw OracleFailure("residue known only to the bisection budget");
			return more->at(n);
		},
		"residue"));
	r.rule = "residue beyond recognition, kept as an oracle real";
	return r;
}

std::vector<HahnSeries> nonzero(const std::vector<HahnSeries> &params)
{
	std::vector<HahnSeries> out;
	for (const auto &p : params)
		if (!p.is_zero())
			out.push_back(p);
	return out;
}

std::size_t dim_of(const std::vector<HahnSeries> &params)
{
	return params.empty() ? 1 : params[0].dim();
}

CutClassification classify_group(CutOracle &o, const std::vector<HahnSeries> &params, const Budgets &b)
{
	const std::size_t n = dim_of(params);
	CutClassification cls;
	auto nz = nonzero(params);
	SpanBasis basis = valuation_basis(nz);
	HahnSeries d(n);
	auto finish_equal = [&] {
		cls.tag = CaseTag::Realized;
		cls.d0 = cls.witness = d;
		cls.trace.push_back("x0 = " + d.to_string());
		return cls;
	};
	if (o.side(d) == Side::Equal)
		return finish_equal();
	std::optional<Exponent> previous;
	for (std::size_t ci = basis.class_reps.size(); ci-- > 0;) {
		const HahnSeries &rep = basis.class_reps[ci];
		const Exponent gamma = rep.valuation().exponent();
		RealCut c = real_cut(o, d, rep, b.precision);
		if (c.kind != RealCut::Finite) {
			cls.tag = CaseTag::GroupTranscendental;
			cls.d0 = d;
			cls.delta1 = previous;
			cls.delta2 = gamma;
			cls.sign = c.kind == RealCut::InfPos ? 1 : -1;
			Exponent g = previous ? midpoint(*previous, gamma) : gamma - Exponent::unit(n);
			cls.witness = d + HahnSeries::monomial(g, CoefficientReal(cls.sign));
			cls.trace.push_back("class " + gamma.to_string() + ": unbounded, value strictly between");
			return cls;
		}
		previous = gamma;
		if (c.zero()) {
			cls.trace.push_back("class " + gamma.to_string() + ": zero residue");
			continue;
		}
		Residue r = resolve_residue(c, b, o);
		if (r.rational) {
			d = d + CoefficientReal(*r.rational) * rep;
			cls.trace.push_back("class " + gamma.to_string() + ": " + r.rule);
		} else {
			/* a residue that other members of the class already span */
			std::vector<std::size_t> members;
			for (std::size_t i = 0; i < basis.size(); i++)
				if (basis.class_of[i] == ci)
					members.push_back(i);
			std::optional<std::vector<Rational>> rel;
			if (members.size() > 1) {
				std::vector<CoefficientReal> cs{*r.fill};
				for (auto i : members)
					cs.push_back(basis.component_reals[i]);
				try {
					rel = rational_relation(cs);
				} catch (const Error &) {
				}
			}
			if (rel && (*rel)[0] != 0) {
				for (std::size_t k = 0; k < members.size(); k++)
					d = d + CoefficientReal(-(*rel)[k + 1] / (*rel)[0]) * basis.generators[members[k]];
				cls.trace.push_back("class " + gamma.to_string() + ": residue spanned by the class");
			} else {
				cls.tag = CaseTag::ResidueTranscendental;
				cls.d0 = d;
				cls.scale = rep;
				cls.residue_cut = c.interval();
				cls.fill = r.fill;
				cls.witness = d + *r.fill * rep;
				cls.trace.push_back("class " + gamma.to_string() + ": " + r.rule);
				return cls;
			}
		}
		if (o.side(d) == Side::Equal)
			return finish_equal();
	}
	Side s = o.side(d);
	if (s == Side::Equal)
		return finish_equal();
	cls.tag = CaseTag::GroupTranscendental;
	cls.d0 = d;
	cls.delta1 = previous;
	cls.sign = s == Side::Above ? -1 : 1;
	Exponent g = previous ? *previous + Exponent::unit(n) : Exponent::zero(n);
	cls.witness = d + HahnSeries::monomial(g, CoefficientReal(cls.sign));
	cls.trace.push_back("below every class: value above " + (previous ? previous->to_string() : std::string("all")));
	return cls;
}

/* Rationals p/q with q <= D and |p/q| <= D, ascending. */
std::vector<Rational> grid_coefficients(long D)
{
	std::set<Rational> s;
	for (long q = 1; q <= D; q++)
		for (long p = -D * q; p <= D * q; p++) {
			Rational r(p, q);
			r.canonicalize();
			s.insert(r);
		}
	return {s.begin(), s.end()};
}

/* Exponents of the divisible hull of the parameter values on the grid of
 * denominator D; empty when larger than `cap`. */
std::vector<Exponent> value_grid(const std::vector<std::vector<Rational>> &basis, std::size_t n, long D,
                                 std::size_t cap)
{
	std::vector<Exponent> out;
	if (basis.empty()) {
		out.push_back(Exponent::zero(n));
		return out;
	}
	auto cs = grid_coefficients(D);
	double size = 1;
	for (std::size_t i = 0; i < basis.size(); i++)
		size *= double(cs.size());
	if (size > double(cap))
		return out;
	std::vector<std::size_t> idx(basis.size(), 0);
	for (;;) {
		std::vector<Rational> v(n, Rational(0));
		for (std::size_t i = 0; i < basis.size(); i++)
			for (std::size_t k = 0; k < n; k++)
				v[k] += cs[idx[i]] * basis[i][k];
		for (auto &x : v)
			x.canonicalize();
		out.emplace_back(std::move(v));
		std::size_t i = 0;
		while (i < idx.size() && ++idx[i] == cs.size())
			idx[i++] = 0;
		if (i == idx.size())
			break;
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

constexpr std::size_t kGridCap = 200'000;

enum class Probe { Zero, Finite, Inf };

struct GridSearch {
	std::size_t index;      /* first non-zero probe; grid.size() if none */
	std::optional<RealCut> cut;
	Probe probe = Probe::Zero;
};

GridSearch search_grid(CutOracle &o, const HahnSeries &d, const std::vector<Exponent> &grid, long precision)
{
	std::map<std::size_t, std::pair<Probe, RealCut>> memo;
	auto probe = [&](std::size_t i) -> const std::pair<Probe, RealCut> & {
		auto it = memo.find(i);
		if (it != memo.end())
			return it->second;
		RealCut c = real_cut(o, d, HahnSeries::monomial(grid[i]), precision);
		Probe p = c.kind != RealCut::Finite ? Probe::Inf : c.zero() ? Probe::Zero : Probe::Finite;
		return memo.emplace(i, std::make_pair(p, std::move(c))).first->second;
	};
	std::size_t lo = 0, hi = grid.size();
	while (lo < hi) {
		std::size_t mid = (lo + hi) / 2;
		if (probe(mid).first == Probe::Zero)
			lo = mid + 1;
		else
			hi = mid;
	}
	GridSearch g{lo, std::nullopt};
	if (lo < grid.size()) {
		const auto &[p, c] = probe(lo);
		g.probe = p;
		g.cut = c;
	}
	return g;
}

CutClassification classify_field(CutOracle &o, const std::vector<HahnSeries> &params, const Budgets &b)
{
	const std::size_t n = dim_of(params);
	CutClassification cls;
	std::vector<std::vector<Rational>> rows;
	for (const auto &p : nonzero(params))
		rows.push_back(p.valuation().exponent().coords());
	row_reduce(rows);
	std::vector<std::vector<Rational>> basis;
	for (auto &r : rows)
		if (std::any_of(r.begin(), r.end(), [](const Rational &x) { return x != 0; }))
			basis.push_back(r);
	long D = b.denominator;
	std::vector<Exponent> grid;
	while ((grid = value_grid(basis, n, D, kGridCap)).empty())
		D--;
	auto fine = value_grid(basis, n, 2 * D, kGridCap);

	HahnSeries d(n);
	bool event = false;
	for (long step = 0;; step++) {
		if (o.side(d) == Side::Equal) {
			if (!event) {
				cls.tag = CaseTag::Realized;
				cls.d0 = d;
			}
			cls.witness = d;
			cls.trace.push_back("x0 = " + d.to_string());
			return cls;
		}
		if (step == b.height) {
			if (event) {
				cls.witness = d;
				cls.trace.push_back("step budget reached after the residue event");
				return cls;
			}
			cls.tag = CaseTag::ImmediateTranscendental;
			cls.d0 = d;
			PseudoSequence seq(cls.sequence);
			if (cls.sequence.size() >= 3 && !check_pseudo_cauchy(seq, cls.sequence.size()))
				throw BudgetExhausted("approximations do not form a pseudo-Cauchy sequence");
			cls.witness = pseudo_limit(seq, cls.sequence.size());
			cls.trace.push_back("no limit within " + std::to_string(b.height) + " steps");
			return cls;
		}
		GridSearch g = search_grid(o, d, grid, b.precision);
		if (g.index == grid.size())
			throw BudgetExhausted("x0 - d lies below every grid value");
		const Exponent &gamma = grid[g.index];
		if (g.probe == Probe::Inf) {
			std::optional<Exponent> d1, d2 = gamma;
			if (g.index > 0)
				d1 = grid[g.index - 1];
			for (const auto &e : fine) {
				if ((d1 && e <= *d1) || e >= gamma)
					continue;
				RealCut c = real_cut(o, d, HahnSeries::monomial(e), b.precision);
				if (c.kind == RealCut::Finite && !c.zero())
					throw BudgetExhausted("value " + e.to_string() + " needs a finer exponent grid");
			}
			RealCut c = *g.cut;
			cls.tag = CaseTag::GroupTranscendental;
			cls.d0 = d;
			cls.delta1 = d1;
			cls.delta2 = d2;
			cls.sign = c.kind == RealCut::InfPos ? 1 : -1;
			Exponent mid = d1 ? midpoint(*d1, *d2) : *d2 - Exponent::unit(n);
			cls.witness = d + HahnSeries::monomial(mid, CoefficientReal(cls.sign));
			cls.trace.push_back("value strictly between grid points, monomial t^" + mid.to_string());
			return cls;
		}
		Residue r = resolve_residue(*g.cut, b, o);
		HahnSeries mono = HahnSeries::monomial(gamma);
		cls.trace.push_back("value " + gamma.to_string() + ": " + r.rule);
		if (r.rational) {
			d = d + CoefficientReal(*r.rational) * mono;
		} else {
			if (!event) {
				event = true;
				cls.tag = CaseTag::ResidueTranscendental;
				cls.d0 = d;
				cls.scale = mono;
				cls.residue_cut = g.cut->interval();
				cls.fill = r.fill;
			}
			d = d + *r.fill * mono;
			if (r.fill->is_oracle()) {
				cls.witness = d;
				return cls;
			}
		}
		cls.sequence.push_back(d);
	}
}

void verify_queries(CutOracle &o, const HahnSeries &w, const std::vector<HahnSeries> &params, Mode mode,
                    const Budgets &b, bool immediate)
{
	for (const auto &y : query_elements(params, mode, b.height)) {
		Side s = o.side(y);
		if (s == Side::Undecided)
			continue;
		int c;
		try {
			c = compare_series(y, w);
		} catch (const ComparisonUndecidedAtPrecision &) {
			continue;
		} catch (const OracleFailure &) {
			continue;
		}
		Side t = c < 0 ? Side::Below : c > 0 ? Side::Above : Side::Equal;
		if (t != s) {
			std::string msg = "witness " + w.to_string() + " is " + to_string(t) + " " + y.to_string() +
			                  " but x0 is " + to_string(s);
			if (immediate)
				throw PseudoLimitUnverified(msg);
			throw BudgetExhausted(msg);
		}
	}
}

} // namespace

CutClassification classify_cut(CutOracle &oracle, const std::vector<HahnSeries> &params, Mode mode,
                               const Budgets &budgets)
{
	budgets.validate();
	return mode == Mode::Group ? classify_group(oracle, params, budgets) : classify_field(oracle, params, budgets);
}

HahnSeries realize_cut_group(const CutClassification &cls, CutOracle &oracle, const std::vector<HahnSeries> &params,
                             const Budgets &budgets)
{
	verify_queries(oracle, cls.witness, params, Mode::Group, budgets, false);
	return cls.witness;
}

HahnSeries realize_cut_field(const CutClassification &cls, CutOracle &oracle, const std::vector<HahnSeries> &params,
                             const Budgets &budgets)
{
	HahnSeries w = cls.witness;
	const bool immediate = cls.tag == CaseTag::ImmediateTranscendental;
	if (immediate) {
		PseudoSequence seq(cls.sequence);
		w = pseudo_limit(seq, cls.sequence.size());
		if (!is_pseudo_limit(w, cls.sequence))
			throw PseudoLimitUnverified("candidate is not a pseudo-limit of the approximations");
	}
	verify_queries(oracle, w, params, Mode::Field, budgets, immediate);
	return w;
}

std::vector<HahnSeries> query_elements(const std::vector<HahnSeries> &params, Mode mode, long max_height,
                                       std::size_t cap)
{
	const std::size_t n = dim_of(params);
	std::vector<HahnSeries> base;
	auto add = [&](const HahnSeries &x) {
		if (x.is_zero())
			return;
		for (const auto &y : base)
			if (compare_series(x, y) == 0)
				return;
		base.push_back(x);
	};
	auto nz = nonzero(params);
	if (mode == Mode::Field) {
		add(HahnSeries::constant(n, CoefficientReal(1)));
		for (std::size_t i = 0; i < nz.size(); i++) {
			add(nz[i]);
			for (std::size_t j = i; j < nz.size(); j++)
				add(nz[i] * nz[j]);
		}
	} else {
		for (const auto &p : nz)
			add(p);
	}
	std::vector<HahnSeries> out{HahnSeries(n)};
	const std::size_t max_support = mode == Mode::Field ? std::min<std::size_t>(2, base.size()) : base.size();
	for (long L = 1; L <= max_height && out.size() < cap; L++) {
		std::vector<Rational> cs;
		for (long q = 1; q <= L; q++)
			for (long p = -L; p <= L; p++) {
				if (p == 0)
					continue;
				Rational r(p, q);
				r.canonicalize();
				if (r.get_den() == q)
					cs.push_back(r);
			}
		std::stable_sort(cs.begin(), cs.end(),
		                 [](const Rational &a, const Rational &b) { return height(a) < height(b); });
		for (std::size_t k = 1; k <= max_support && out.size() < cap; k++) {
			std::vector<std::size_t> supp(k);
			for (std::size_t i = 0; i < k; i++)
				supp[i] = i;
			for (;;) {
				std::vector<std::size_t> idx(k, 0);
				for (;;) {
					bool top = false;
					for (auto i : idx)
						top = top || height(cs[i]) == L;
					if (top) {
						HahnSeries y(n);
						for (std::size_t i = 0; i < k; i++)
							y = y + CoefficientReal(cs[idx[i]]) * base[supp[i]];
						out.push_back(y);
						if (out.size() >= cap)
							return out;
					}
					std::size_t i = 0;
					while (i < k && ++idx[i] == cs.size())
						idx[i++] = 0;
					if (i == k)
						break;
				}
				std::size_t i = k;
				while (i-- > 0 && supp[i] == base.size() - k + i) {
				}
				if (i == std::size_t(-1))
					break;
				supp[i]++;
				for (std::size_t j = i + 1; j < k; j++)
					supp[j] = supp[j - 1] + 1;
			}
		}
	}
	return out;
}

namespace {

Signature signature_of(const PartialType &type, Mode mode)
{
	Signature s;
	s.var = type.var;
	s.field = mode == Mode::Field;
	s.symbols = {type.var};
	for (const auto &p : type.params)
		s.symbols.push_back(p);
	return s;
}

IntervalSet solutions(const Formula &f, const std::string &var, const Env &env)
{
	return solution_set({f}, var, env);
}

[[noreturn]] void report_conflict(const std::vector<Formula> &fs, std::size_t j, const std::string &var,
                                  const Env &env)
{
	IntervalSet last = solutions(fs[j], var, env);
	if (last.is_empty())
		throw NotFinitelySatisfiable("unsatisfiable formula: " + fs[j].to_string());
	for (std::size_t i = 0; i < j; i++)
		if (intersect(solutions(fs[i], var, env), last).is_empty())
			throw NotFinitelySatisfiable("conflicting formulas: " + fs[i].to_string() + " and " +
			                             fs[j].to_string());
	throw NotFinitelySatisfiable("formula " + fs[j].to_string() + " contradicts the " + std::to_string(j) +
	                             " formulas before it");
}

} // namespace

Completion complete_type(const PartialType &type, const Env &params, Mode mode, const Budgets &budgets)
{
	budgets.validate();
	Completion c;
	const std::size_t K = budgets.prefix, horizon = budgets.horizon();
	auto fs = type.prefix(horizon, 4 * horizon + 100);
	IntervalSet S = IntervalSet::everything();
	for (std::size_t j = 0; j < fs.size(); j++) {
		IntervalSet next = intersect(S, solutions(fs[j], type.var, params));
		if (next.is_empty()) {
			if (j < K)
				report_conflict(fs, j, type.var, params);
			break;
		}
		S = std::move(next);
		c.horizon_used = j + 1;
	}
	c.type_prefix.assign(fs.begin(), fs.begin() + std::min(K, fs.size()));

	const Signature sig = signature_of(type, mode);
	std::vector<Formula> thetas;
	for (std::size_t j = 0; j < K; j++)
		thetas.push_back(enumerate_formulas(j, sig));
	std::map<std::string, IntervalSet> memo{{"", S}};
	std::function<const IntervalSet &(const BinString &)> set_at = [&](const BinString &s) -> const IntervalSet & {
		auto key = s.to_string();
		if (auto it = memo.find(key); it != memo.end())
			return it->second;
		const std::size_t L = s.length();
		IntervalSet sol = solutions(thetas[L - 1], type.var, params);
		if (s.bits[L - 1])
			sol = sol.complement();
		IntervalSet r = intersect(set_at(s.prefix(L - 1)), sol);
		return memo.emplace(key, std::move(r)).first->second;
	};
	TreeOracle tree([&](const BinString &s) { return !set_at(s).is_empty(); });
	auto path = find_path_bounded(tree, K);
	if (!path)
		throw NotFinitelySatisfiable("no consistent completion of length " + std::to_string(K));
	c.path = *path;
	for (std::size_t j = 0; j < K; j++)
		c.decided.push_back(path->bits[j] ? Formula::negation(thetas[j]) : thetas[j]);
	c.set = set_at(*path);
	return c;
}

bool RealizationReport::verified() const
{
	return std::all_of(verification.begin(), verification.end(), [](const auto &v) { return v.second; });
}

std::string RealizationReport::to_string() const
{
	std::ostringstream o;
	const auto &cl = classification;
	o << "COMPLETION\n";
	o << "mode " << valsat::to_string(mode) << "\n";
	o << "type formulas " << completion.type_prefix.size() << ", horizon " << completion.horizon_used << "\n";
	o << "path " << (completion.path.length() ? completion.path.to_string() : "(root)") << "\n";
	for (std::size_t j = 0; j < completion.decided.size(); j++)
		o << "  " << j << " " << completion.decided[j].to_string() << "\n";
	o << "CLASSIFICATION\n" << valsat::to_string(cl.tag) << "\n";
	o << "CASE\n";
	o << "d0 " << cl.d0.to_string() << "\n";
	switch (cl.tag) {
	case CaseTag::Realized:
		break;
	case CaseTag::ImmediateTranscendental:
		o << "sequence";
		for (const auto &a : cl.sequence)
			o << "\n  " << a.to_string();
		o << "\n";
		break;
	case CaseTag::ResidueTranscendental:
		if (cl.scale)
			o << "scale " << cl.scale->to_string() << "\n";
		if (cl.residue_cut)
			o << "residue cut [" << cl.residue_cut->lo.get_str() << ", " << cl.residue_cut->hi.get_str() << "]\n";
		if (cl.fill)
			o << "fill " << cl.fill->to_string() << "\n";
		break;
	case CaseTag::GroupTranscendental:
		o << "value above " << (cl.delta1 ? cl.delta1->to_string() : std::string("-inf")) << " and below "
		  << (cl.delta2 ? cl.delta2->to_string() : std::string("inf")) << "\n";
		o << "sign " << (cl.sign > 0 ? "+" : "-") << "\n";
		break;
	}
	for (const auto &t : cl.trace)
		o << "step " << t << "\n";
	o << "WITNESS\n" << witness.to_string() << "\n";
	if (fallback)
		o << "fallback sample of the solution set\n";
	o << "VERIFICATION\n";
	std::size_t ok = 0;
	for (const auto &[f, pass] : verification) {
		o << (pass ? "pass " : "FAIL ") << f << "\n";
		ok += pass;
	}
	o << ok << "/" << verification.size() << " verified\n";
	o << "BUDGETS\n";
	o << "height " << budgets.height << "\ndenominator " << budgets.denominator << "\nprefix " << budgets.prefix
	  << "\nprecision " << budgets.precision << "\nhorizon " << budgets.horizon() << "\noracle queries "
	  << oracle_queries << "\n";
	return o.str();
}

namespace {

std::vector<std::pair<std::string, bool>> check_witness(const Completion &c, const std::string &var,
                                                        const Env &env, const HahnSeries &w)
{
	std::vector<std::pair<std::string, bool>> out;
	Env e = env.with(var, w);
	auto check = [&](const Formula &f) {
		bool ok;
		try {
			ok = eval(f, e);
		} catch (const Error &) {
			ok = false;
		}
		out.emplace_back(f.to_string(), ok);
	};
	for (const auto &f : c.type_prefix)
		check(f);
	for (const auto &f : c.decided)
		check(f);
	return out;
}

} // namespace

RealizationReport realize_type(const PartialType &type, const Env &params, Mode mode, const Budgets &budgets)
{
	RealizationReport rep;
	rep.mode = mode;
	rep.budgets = budgets;
	rep.completion = complete_type(type, params, mode, budgets);
	std::vector<HahnSeries> ps;
	for (const auto &name : type.params)
		ps.push_back(params.lookup(name));
	std::unique_ptr<CutOracle> oracle;
	if (type.exact_point)
		oracle = std::make_unique<SeriesCutOracle>(*type.exact_point);
	else
		oracle = std::make_unique<SetCutOracle>(rep.completion.set);
	if (ps.empty())
		ps.push_back(HahnSeries(params.n));
	rep.classification = classify_cut(*oracle, ps, mode, budgets);
	rep.witness = mode == Mode::Group ? realize_cut_group(rep.classification, *oracle, ps, budgets)
	                                  : realize_cut_field(rep.classification, *oracle, ps, budgets);
	rep.verification = check_witness(rep.completion, type.var, params, rep.witness);
	if (!rep.verified()) {
		auto s = rep.completion.set.sample();
		if (!s)
			throw BudgetExhausted("empty completion set");
		rep.witness = s->value(Exponent::unit(params.n, 16));
		rep.fallback = true;
		rep.verification = check_witness(rep.completion, type.var, params, rep.witness);
		if (!rep.verified())
			throw BudgetExhausted("no witness satisfies the completion");
	}
	rep.oracle_queries = oracle->queries();
	return rep;
}

Formula ComputableInReal::at(std::size_t i)
{
	for (long n = 0; n <= budget_; n++)
		if (auto f = gen_(i, r_.approx(n))) {
			used_.push_back(n);
			return *f;
		}
	throw OracleFailure("formula " + std::to_string(i) + " not determined within precision " +
	                    std::to_string(budget_));
}

long ComputableInReal::max_precision_used() const
{
	return used_.empty() ? 0 : *std::max_element(used_.begin(), used_.end());
}

ComputableInReal sequence_is_computable_in(RGenerator g, const OracleReal &r, std::size_t check, long budget)
{
	ComputableInReal c(g, r, budget);
	for (std::size_t i = 0; i < check; i++) {
		Formula f = c.at(i);
		const long n = c.precision_used();
		for (long m = n + 1; m <= std::min(n + 4, budget); m++) {
			auto h = g(i, r.approx(m));
			if (!h || !(*h == f))
				throw OracleFailure("formula " + std::to_string(i) + " changes at precision " + std::to_string(m));
		}
	}
	return c;
}

} // namespace valsat
