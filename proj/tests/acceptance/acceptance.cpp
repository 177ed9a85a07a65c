/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

/* One PASS/FAIL line per acceptance criterion.  Exit status is the number
 * of failed criteria. */

#include "valsat/engine.hpp"
#include "valsat/errors.hpp"

#include "../support/golden.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace valsat;

namespace {

using Clock = std::chrono::steady_clock;
std::mt19937_64 rng;

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational rand_rational(long num, long den, bool nonzero = true)
{
	for (;;) {
		Rational q(uniform(-num, num), uniform(1, den));
		q.canonicalize();
		if (!nonzero || q != 0)
			return q;
	}
}

CoefficientReal rand_coeff()
{
	CoefficientReal c(rand_rational(5, 4));
	switch (uniform(0, 5)) {
	case 0: return c * CoefficientReal(RealAlgebraic::sqrt(Rational(2)));
	case 1: return c * CoefficientReal(RealAlgebraic::sqrt(Rational(3)));
	default: return c;
	}
}

Exponent rand_exponent(std::size_t n, long num = 6, long den = 3)
{
	std::vector<Rational> v;
	for (std::size_t i = 0; i < n; i++)
		v.push_back(rand_rational(num, den, false));
	return Exponent(v);
}

HahnSeries rand_series(std::size_t n, long max_terms = 4)
{
	std::vector<SeriesTerm> ts;
	for (long k = uniform(0, max_terms); k > 0; k--)
		ts.push_back({rand_exponent(n), rand_coeff()});
	return HahnSeries(n, ts);
}

HahnSeries rand_nonzero(std::size_t n, long max_terms = 4)
{
	for (;;) {
		auto s = rand_series(n, max_terms);
		if (!s.is_zero())
			return s;
	}
}

struct Result {
	bool pass;
	std::string detail;
};

int failed = 0;

std::uint64_t fnv1a(const std::string &s)
{
	std::uint64_t h = 14695981039346656037ull;
	for (unsigned char c : s)
		h = (h ^ c) * 1099511628211ull;
	return h;
}

void criterion(const std::string &name, double limit_s, const std::function<Result()> &body)
{
	rng.seed(fnv1a(name));
	auto t0 = Clock::now();
	Result r;
	try {
		r = body();
	} catch (const std::exception &e) {
		r = {false, std::string("uncaught: ") + e.what()};
	}
	double s = std::chrono::duration<double>(Clock::now() - t0).count();
	bool pass = r.pass && s < limit_s;
	failed += !pass;
	std::ostringstream o;
	o.setf(std::ios::fixed);
	o.precision(2);
	o << (pass ? "PASS " : "FAIL ") << name << ": " << r.detail << " (" << s << " s, limit " << limit_s << " s)";
	std::cout << o.str() << std::endl;
}

Value vmin(const Value &a, const Value &b) { return a < b ? a : b; }

/* ---- valuation axioms ---- */
Result valuation_axioms()
{
	long failures = 0;
	const int cases = 1000;
	for (int i = 0; i < cases; i++) {
		const std::size_t n = uniform(1, 2);
		auto x = rand_series(n), y = rand_series(n), z = rand_series(n);
		Rational q = rand_rational(7, 5);
		bool ok = valuation(HahnSeries(n)).is_infinite();
		ok = ok && valuation(CoefficientReal(q) * x) == valuation(x);
		ok = ok && valuation(x - x).is_infinite();
		auto ultra = [&](const HahnSeries &a, const HahnSeries &b) {
			Value va = valuation(a), vb = valuation(b), vs = valuation(a + b);
			if (vs < vmin(va, vb))
				return false;
			return va == vb || vs == vmin(va, vb);
		};
		ok = ok && ultra(x, y) && ultra(y, z) && ultra(x + y, z);
		failures += !ok;
	}
	return {failures == 0, std::to_string(cases) + " random pairs and triples, " + std::to_string(failures) + " failures"};
}

/* ---- interval coding ---- */
Result interval_coding()
{
	std::vector<BinString> nodes{BinString()};
	for (std::size_t i = 0; i < nodes.size(); i++)
		if (nodes[i].length() < 12) {
			nodes.push_back(nodes[i].child(false));
			nodes.push_back(nodes[i].child(true));
		}
	long failures = 0, nested = 0;
	for (const auto &s : nodes) {
		auto I = node_interval(s);
		if (I.hi - I.lo != pow2(-static_cast<long>(s.length())))
			failures++;
		for (std::size_t k = 0; k < s.length(); k++) {
			auto J = node_interval(s.prefix(k));
			nested++;
			if (!(J.lo <= I.lo && I.hi <= J.hi))
				failures++;
		}
	}
	long pairs = 0;
	while (pairs < 100000) {
		const auto &a = nodes[uniform(0, nodes.size() - 1)], &b = nodes[uniform(0, nodes.size() - 1)];
		if (a.is_prefix_of(b) || b.is_prefix_of(a))
			continue;
		pairs++;
		auto I = node_interval(a), J = node_interval(b);
		if (!(I.hi <= J.lo || J.hi <= I.lo))
			failures++;
	}
	return {failures == 0, std::to_string(nodes.size()) + " nodes, " + std::to_string(nested) + " nested pairs, " +
	                           std::to_string(pairs) + " incomparable pairs, " + std::to_string(failures) +
	                           " failures"};
}

/* ---- valuation basis ---- */
Result basis_suite()
{
	long failures = 0, vectors = 0;
	for (int set = 0; set < 100; set++) {
		const std::size_t n = uniform(1, 2);
		std::vector<HahnSeries> gs;
		/* shared exponents make eliminations likely */
		std::vector<Exponent> pool;
		for (int k = 0; k < 3; k++)
			pool.push_back(rand_exponent(n, 3, 2));
		for (long k = uniform(1, 4); k > 0; k--) {
			std::vector<SeriesTerm> ts;
			for (long j = uniform(1, 4); j > 0; j--)
				ts.push_back({pool[uniform(0, pool.size() - 1)], CoefficientReal(rand_rational(3, 2))});
			HahnSeries g(n, ts);
			if (!g.is_zero())
				gs.push_back(g);
		}
		if (gs.empty())
			gs.push_back(HahnSeries::t(n));
		SpanBasis b = valuation_basis(gs);
		bool ok = is_valuation_independent(b.generators);
		for (std::size_t i = 0; i + 1 < b.size(); i++)
			ok = ok && compare_series(b.generators[i], b.generators[i + 1]) < 0;
		for (const auto &g : b.generators)
			ok = ok && sign(g) > 0;
		/* spans the input, witnessed both ways */
		for (std::size_t i = 0; i < b.size(); i++) {
			HahnSeries c(n);
			for (std::size_t j = 0; j < gs.size(); j++)
				c = c + CoefficientReal(b.change_of_basis[i][j]) * gs[j];
			ok = ok && compare_series(c, b.generators[i]) == 0;
		}
		for (const auto &g : gs) {
			auto co = express_in_basis(b, g);
			ok = ok && co && compare_series(b.combine(*co), g) == 0;
		}
		for (int v = 0; v < 200; v++) {
			std::vector<Rational> q;
			for (std::size_t i = 0; i < b.size(); i++)
				q.push_back(uniform(0, 3) == 0 ? Rational(0) : rand_rational(8, 8));
			HahnSeries sum(n);
			Value expect;
			for (std::size_t i = 0; i < b.size(); i++)
				if (q[i] != 0) {
					sum = sum + CoefficientReal(q[i]) * b.generators[i];
					expect = vmin(expect, valuation(b.generators[i]));
				}
			vectors++;
			ok = ok && valuation(sum) == expect;
		}
		failures += !ok;
	}
	return {failures == 0, "100 generator sets, " + std::to_string(vectors) + " coefficient vectors, " +
	                           std::to_string(failures) + " failing sets"};
}

/* ---- term sign ---- */
Result term_sign_suite()
{
	std::vector<std::vector<HahnSeries>> inputs;
	auto sqrt2 = CoefficientReal(RealAlgebraic::sqrt(Rational(2)));
	inputs.push_back({HahnSeries::t(1), sqrt2 * HahnSeries::t(1)});
	inputs.push_back({HahnSeries::t(1), HahnSeries::constant(1, 1), sqrt2 * HahnSeries::constant(1, 1)});
	while (inputs.size() < 40) {
		const std::size_t n = uniform(1, 2);
		std::vector<HahnSeries> gs;
		for (long k = uniform(1, 3); k > 0; k--)
			gs.push_back(rand_nonzero(n, 3));
		inputs.push_back(gs);
	}
	long checks = 0, disagreements = 0;
	for (const auto &gs : inputs) {
		SpanBasis b = valuation_basis(gs);
		if (b.size() > 3 || b.size() == 0)
			continue;
		std::vector<Rational> s(b.size(), Rational(-3));
		for (;;) {
			HahnSeries sum(b.generators[0].dim());
			for (std::size_t i = 0; i < s.size(); i++)
				sum = sum + CoefficientReal(s[i]) * b.generators[i];
			checks++;
			disagreements += term_sign(s, b) != sign(sum);
			std::size_t i = 0;
			while (i < s.size() && s[i] == 3)
				s[i++] = -3;
			if (i == s.size())
				break;
			s[i] += 1;
		}
	}
	return {disagreements == 0, std::to_string(checks) + " sign vectors over bases of size <= 3, " +
	                                std::to_string(disagreements) + " disagreements"};
}

/* ---- quantifier elimination ---- */
std::string rand_linear()
{
	static const char *syms[] = {"x", "a", "b", "c"};
	std::string s;
	for (const char *v : syms) {
		long k = uniform(-2, 2);
		if (k == 0)
			continue;
		if (!s.empty())
			s += k > 0 ? " + " : " - ";
		else if (k < 0)
			s += "-";
		if (std::labs(k) != 1)
			s += std::to_string(std::labs(k)) + "*";
		s += v;
	}
	return s.empty() ? "0" : s;
}

std::string rand_qf(int depth)
{
	static const char *rels[] = {"<", "<=", "=", "!=", ">"};
	if (depth == 0 || uniform(0, 2) == 0)
		return rand_linear() + " " + rels[uniform(0, 4)] + " " + rand_linear();
	switch (uniform(0, 2)) {
	case 0: return "(" + rand_qf(depth - 1) + " and " + rand_qf(depth - 1) + ")";
	case 1: return "(" + rand_qf(depth - 1) + " or " + rand_qf(depth - 1) + ")";
	default: return "not " + rand_qf(depth - 1);
	}
}

Result qe_suite()
{
	long failures = 0, checks = 0;
	for (int i = 0; i < 100; i++) {
		const bool ex = uniform(0, 1) == 0;
		const std::string body = rand_qf(2);
		Formula f = parse_formula((ex ? "exists x (" : "forall x (") + body + ")", 1);
		Formula matrix = parse_formula(body, 1);
		Formula q = doag_qe(f);
		bool ok = q.is_quantifier_free() && !q.free_symbols().count("x");
		for (int e = 0; e < 100; e++) {
			Env env(1);
			for (const char *s : {"a", "b", "c"})
				env = env.with(s, uniform(0, 3) == 0 ? HahnSeries(1) : rand_series(1, 2));
			/* semantic side: exact solution set of the matrix in x */
			IntervalSet sol = solution_set({matrix}, "x", env);
			bool truth = ex ? !sol.is_empty() : sol.complement().is_empty();
			checks++;
			ok = ok && eval(q, env) == truth;
		}
		failures += !ok;
	}
	return {failures == 0, "100 quantified formulas x 100 environments (" + std::to_string(checks) +
	                           " evaluations), " + std::to_string(failures) + " failing formulas"};
}

/* ---- pseudo-limits ---- */
Result pseudo_limit_suite()
{
	long failures = 0;
	for (int i = 0; i < 50; i++) {
		const std::size_t n = uniform(1, 2);
		const long k = uniform(3, 8);
		std::vector<HahnSeries> seq{rand_series(n, 3)};
		Exponent e = rand_exponent(n, 2, 2);
		for (long j = 1; j < k; j++) {
			/* difference of value e plus a tail strictly above it */
			Exponent step = Exponent::unit(n, Rational(uniform(1, 4), uniform(1, 3)));
			HahnSeries d = HahnSeries::monomial(e, rand_coeff());
			for (long m = uniform(0, 2); m > 0; m--)
				d = d + HahnSeries::monomial(e + Rational(uniform(1, 3)) * step, rand_coeff());
			seq.push_back(seq.back() + d);
			e = e + step;
		}
		PseudoSequence ps(seq);
		bool ok = check_pseudo_cauchy(ps, seq.size());
		HahnSeries x = pseudo_limit(ps, seq.size());
		for (std::size_t r = 0; r + 1 < seq.size(); r++)
			ok = ok && valuation(x - seq[r]) == valuation(seq[r + 1] - seq[r]);
		failures += !ok;
	}
	return {failures == 0, "50 prefixes of length <= 8, " + std::to_string(failures) + " failures"};
}

/* ---- case fixtures ---- */
bool side_consistent(CutOracle &o, const HahnSeries &w, const std::vector<HahnSeries> &ps, Mode m)
{
	for (const auto &y : query_elements(ps, m, 8)) {
		Side s = o.side(y);
		int c = compare_series(y, w);
		if ((s == Side::Below && c >= 0) || (s == Side::Above && c <= 0) || (s == Side::Equal && c != 0))
			return false;
	}
	return true;
}

Result case_fixtures()
{
	std::vector<std::string> bad;
	Budgets b;
	auto t = [](const Rational &q) { return HahnSeries::monomial(Exponent::unit(1, q)); };
	{
		std::vector<HahnSeries> ps{t(1)};
		SeriesCutOracle o(CoefficientReal(RealAlgebraic::sqrt(Rational(2))) * t(1));
		auto c = classify_cut(o, ps, Mode::Group, b);
		auto w = realize_cut_group(c, o, ps, b);
		if (c.tag != CaseTag::ResidueTranscendental || w.to_string() != "alg[-2,0,1;1,2]*t^(1)" ||
		    !side_consistent(o, w, ps, Mode::Group))
			bad.push_back("residue");
	}
	{
		std::vector<HahnSeries> ps{t(0), t(1)};
		SeriesCutOracle o(t(Rational(1, 2)));
		auto c = classify_cut(o, ps, Mode::Group, b);
		auto w = realize_cut_group(c, o, ps, b);
		if (c.tag != CaseTag::GroupTranscendental || w.to_string() != "t^(1/2)" ||
		    !side_consistent(o, w, ps, Mode::Group))
			bad.push_back("group");
	}
	{
		std::vector<HahnSeries> ps{t(0), t(1)};
		HahnSeries x0(1);
		for (long j = 1; j <= 64; j++)
			x0 = x0 + t(1 - Rational(1, j));
		SeriesCutOracle o(x0);
		auto c = classify_cut(o, ps, Mode::Field, b);
		auto w = realize_cut_field(c, o, ps, b);
		if (c.tag != CaseTag::ImmediateTranscendental || !is_pseudo_limit(w, c.sequence) ||
		    !side_consistent(o, w, ps, Mode::Field))
			bad.push_back("immediate");
	}
	for (const char *name : {"residue_sqrt2", "group_gap", "immediate"}) {
		for (const auto &gc : golden::load_cases(VALSAT_GOLDEN_DIR "/cases.txt"))
			if (gc.name == name &&
			    golden::run(VALSAT_CLI, gc, VALSAT_FIXTURE_DIR) !=
			            golden::read(std::string(VALSAT_GOLDEN_DIR) + "/" + name + ".out"))
				bad.push_back(std::string(name) + " report");
	}
	std::string d = "3 oracles classified and side-checked at height 8, 3 golden reports";
	for (const auto &s : bad)
		d += "; mismatch: " + s;
	return {bad.empty(), d};
}

/* ---- end-to-end realization ---- */
struct RandomType {
	std::vector<std::pair<std::string, HahnSeries>> params;
	PartialType type;
	std::string kind;
};

RandomType rand_type(int i)
{
	RandomType r;
	const std::size_t np = uniform(1, 3);
	static const char *names[] = {"g", "h", "k"};
	for (std::size_t j = 0; j < np; j++)
		r.params.emplace_back(names[j], rand_nonzero(1, 2));
	Env env(1);
	Signature sig;
	for (const auto &[name, v] : r.params) {
		env = env.with(name, v);
		sig.symbols.push_back(name);
		r.type.params.push_back(name);
	}
	/* hidden point: a parameter combination, possibly displaced by a new
	 * value or an irrational residue */
	HahnSeries x = HahnSeries(1);
	for (const auto &[name, v] : r.params)
		if (uniform(0, 1))
			x = x + CoefficientReal(rand_rational(3, 2)) * v;
	switch (i % 3) {
	case 0: x = x + HahnSeries::monomial(rand_exponent(1, 6, 5), rand_coeff()); break;
	case 1: x = x + CoefficientReal(RealAlgebraic::sqrt(Rational(uniform(2, 7)))) * r.params[0].second; break;
	default: break;
	}
	const Env at = env.with("x", x);
	if (i % 2 == 0) {
		/* complete type of x, answered from the series itself */
		r.kind = "complete";
		r.type.exact_point = x;
		r.type.generator = [sig, at](std::size_t k) -> std::optional<Formula> {
			Formula f = enumerate_formulas(k, sig);
			return eval(f, at) ? f : Formula::negation(f);
		};
	} else {
		/* partial type: true formulas, thinned by a deterministic filter */
		r.kind = "partial";
		r.type = PartialType::decidable(sig, [at](const Formula &f) {
			return f.to_string().size() % 3 != 0 && eval(f, at);
		});
		r.type.params.clear();
		for (const auto &[name, v] : r.params)
			r.type.params.push_back(name);
	}
	return r;
}

Result end_to_end()
{
	long failures = 0;
	double worst = 0;
	std::string notes;
	for (int i = 0; i < 50; i++) {
		auto t0 = Clock::now();
		RandomType rt = rand_type(i);
		Env env(1);
		for (const auto &[name, v] : rt.params)
			env = env.with(name, v);
		bool ok = false;
		try {
			Budgets b;
			auto rep = realize_type(rt.type, env, Mode::Group, b);
			const Env at = env.with("x", rep.witness);
			ok = true;
			for (const auto &f : rt.type.prefix(100, 4 * b.horizon() + 100))
				if (ok && !eval(f, at)) {
					ok = false;
					notes += " [" + std::to_string(i) + " " + rt.kind + ": " + f.to_string() + " fails at " +
					         rep.witness.to_string() + "]";
				}
		} catch (const std::exception &e) {
			notes += " [" + std::to_string(i) + " " + rt.kind + ": " + e.what() + "]";
		}
		double s = std::chrono::duration<double>(Clock::now() - t0).count();
		worst = std::max(worst, s);
		if (s >= 10) {
			ok = false;
			notes += " [" + std::to_string(i) + " " + rt.kind + ": " + std::to_string(s) + " s]";
		}
		failures += !ok;
	}
	std::ostringstream o;
	o.setf(std::ios::fixed);
	o.precision(2);
	o << "50 random types, first 100 formulas checked at the witness, " << failures << " failures, slowest " << worst
	  << " s" << notes;
	return {failures == 0, o.str()};
}

/* ---- determinism ---- */
Result determinism()
{
	auto cases = golden::load_cases(VALSAT_GOLDEN_DIR "/cases.txt");
	long differ = 0, stale = 0;
	for (const auto &c : cases) {
		auto a = golden::run(VALSAT_CLI, c, VALSAT_FIXTURE_DIR);
		auto b = golden::run(VALSAT_CLI, c, VALSAT_FIXTURE_DIR);
		differ += a != b;
		stale += a != golden::read(std::string(VALSAT_GOLDEN_DIR) + "/" + c.name + ".out");
	}
	return {differ == 0 && stale == 0, std::to_string(cases.size()) + " CLI golden cases run twice, " +
	                                       std::to_string(differ) + " differing, " + std::to_string(stale) +
	                                       " differing from the golden files"};
}

} // namespace

int main(int argc, char **argv)
{
	const std::string only = argc > 1 ? argv[1] : "";
	auto criterion = [&](const std::string &name, double limit, const std::function<Result()> &body) {
		if (only.empty() || name == only)
			::criterion(name, limit, body);
	};
	criterion("valuation axioms", 5, valuation_axioms);
	criterion("interval coding", 30, interval_coding);
	criterion("valuation basis", 60, basis_suite);
	criterion("term sign", 30, term_sign_suite);
	criterion("quantifier elimination", 60, qe_suite);
	criterion("pseudo-limit", 10, pseudo_limit_suite);
	criterion("case fixtures", 60, case_fixtures);
	criterion("end-to-end realization", 500, end_to_end);
	criterion("CLI determinism", 120, determinism);
	return failed;
}
