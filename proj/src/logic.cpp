/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/logic.hpp"
#include "valsat/errors.hpp"

#include <set>

namespace valsat {

Env Env::with(const std::string &sym, const HahnSeries &v) const
{
	Env e = *this;
	e.values.insert_or_assign(sym, v);
	return e;
}

HahnSeries Env::lookup(const std::string &sym) const
{
	if (auto it = values.find(sym); it != values.end())
		return it->second;
	if (is_series_symbol(sym))
		return parse_series(std::string_view(sym).substr(1, sym.size() - 2), n);
	if (sym == "t")
		return HahnSeries::t(n);
	throw UnboundSymbol("symbol '" + sym + "' has no value");
}

HahnSeries eval_term(const Term &t, const Env &env)
{
	return t.eval([&](const std::string &s) { return env.lookup(s); }, env.n);
}

namespace {
bool eval_qf(const Formula &f, const Env &env)
{
	switch (f.kind()) {
	case Kind::True:
		return true;
	case Kind::False:
		return false;
	case Kind::Atom: {
		int s = sign(eval_term(f.atom().d, env));
		return f.atom().rel == Atom::Rel::Pos ? s > 0 : s == 0;
	}
	case Kind::Not:
		return !eval_qf(f.children()[0], env);
	case Kind::And:
		for (const auto &k : f.children())
			if (!eval_qf(k, env))
				return false;
		return true;
	case Kind::Or:
		for (const auto &k : f.children())
			if (eval_qf(k, env))
				return true;
		return false;
	case Kind::Implies:
		return !eval_qf(f.children()[0], env) || eval_qf(f.children()[1], env);
	case Kind::Iff:
		return eval_qf(f.children()[0], env) == eval_qf(f.children()[1], env);
	default:
		throw PreconditionViolated("quantifier in quantifier-free evaluation");
	}
}
} // namespace

bool eval(const Formula &f, const Env &env)
{
	if (f.is_quantifier_free())
		return eval_qf(f, env);
	return eval_qf(doag_qe(f), env);
}

Formula simplify(const Formula &f)
{
	switch (f.kind()) {
	case Kind::Not: {
		Formula k = simplify(f.children()[0]);
		if (k.kind() == Kind::True || k.kind() == Kind::False)
			return Formula::truth(k.kind() == Kind::False);
		if (k.kind() == Kind::Not)
			return k.children()[0];
		return Formula::negation(k);
	}
	case Kind::And:
	case Kind::Or: {
		const bool is_and = f.kind() == Kind::And;
		const Kind absorbing = is_and ? Kind::False : Kind::True;
		const Kind neutral = is_and ? Kind::True : Kind::False;
		std::vector<Formula> kids;
		std::set<std::string> seen;
		for (const auto &c : f.children()) {
			Formula k = simplify(c);
			if (k.kind() == absorbing)
				return k;
			if (k.kind() == neutral)
				continue;
			std::vector<Formula> parts = k.kind() == f.kind() ? k.children() : std::vector<Formula>{k};
			for (auto &p : parts)
				if (seen.insert(p.to_string()).second)
					kids.push_back(p);
		}
		return is_and ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
	}
	case Kind::Implies:
		return simplify(Formula::disj({Formula::negation(f.children()[0]), f.children()[1]}));
	case Kind::Iff: {
		Formula a = simplify(f.children()[0]), b = simplify(f.children()[1]);
		if (a.kind() == Kind::True)
			return b;
		if (b.kind() == Kind::True)
			return a;
		if (a.kind() == Kind::False)
			return simplify(Formula::negation(b));
		if (b.kind() == Kind::False)
			return simplify(Formula::negation(a));
		return Formula::iff(a, b);
	}
	case Kind::Exists:
		return Formula::exists(f.var(), simplify(f.children()[0]));
	case Kind::Forall:
		return Formula::forall(f.var(), simplify(f.children()[0]));
	default:
		return f;
	}
}

namespace {

struct Lit {
	Term d;
	Atom::Rel rel;
};
using Conjunct = std::vector<Lit>;

/* disjunctive normal form of a quantifier-free formula, negations pushed
 * to atoms; not (d = 0) becomes d > 0 or -d > 0 */
std::vector<Conjunct> dnf(const Formula &f, bool neg)
{
	switch (f.kind()) {
	case Kind::True:
		return neg ? std::vector<Conjunct>{} : std::vector<Conjunct>{{}};
	case Kind::False:
		return neg ? std::vector<Conjunct>{{}} : std::vector<Conjunct>{};
	case Kind::Atom: {
		const Term &d = f.atom().d;
		if (!neg)
			return {{{d, f.atom().rel}}};
		if (f.atom().rel == Atom::Rel::Pos)
			return {{{-d, Atom::Rel::Pos}}, {{d, Atom::Rel::Zero}}};
		return {{{d, Atom::Rel::Pos}}, {{-d, Atom::Rel::Pos}}};
	}
	case Kind::Not:
		return dnf(f.children()[0], !neg);
	case Kind::And:
	case Kind::Or: {
		const bool product = (f.kind() == Kind::And) != neg;
		std::vector<Conjunct> acc = product ? std::vector<Conjunct>{{}} : std::vector<Conjunct>{};
		for (const auto &k : f.children()) {
			auto part = dnf(k, neg);
			if (!product) {
				acc.insert(acc.end(), part.begin(), part.end());
				continue;
			}
			std::vector<Conjunct> next;
			for (const auto &a : acc)
				for (const auto &b : part) {
					Conjunct c = a;
					c.insert(c.end(), b.begin(), b.end());
					next.push_back(std::move(c));
				}
			acc = std::move(next);
		}
		return acc;
	}
	case Kind::Implies:
		return dnf(Formula::disj({Formula::negation(f.children()[0]), f.children()[1]}), neg);
	case Kind::Iff: {
		const auto &a = f.children()[0], &b = f.children()[1];
		Formula both = Formula::conj({a, b});
		Formula neither = Formula::conj({Formula::negation(a), Formula::negation(b)});
		return dnf(Formula::disj({both, neither}), neg);
	}
	default:
		throw PreconditionViolated("quantifier inside normal form conversion");
	}
}

Formula lit_formula(const Lit &l) { return Formula::atom(l.d, l.rel); }

Formula eliminate(const std::string &x, const Formula &body)
{
	std::vector<Formula> out;
	for (auto conj : dnf(body, false)) {
		/* equality with x: substitute */
		for (std::size_t i = 0; i < conj.size(); i++) {
			if (conj[i].rel != Atom::Rel::Zero)
				continue;
			auto [a, p] = conj[i].d.split_linear(x);
			if (a.is_zero())
				continue;
			if (!a.is_constant())
				throw NotGroupFragment("coefficient of '" + x + "' is not rational");
			Term val = Rational(-1) / a.constant_value() * p;
			Conjunct rest;
			for (std::size_t j = 0; j < conj.size(); j++)
				if (j != i)
					rest.push_back({conj[j].d.substitute(x, val), conj[j].rel});
			conj = std::move(rest);
			break;
		}
		std::vector<Formula> keep;
		std::vector<Term> lower, upper; /* x > l, x < u */
		for (const auto &l : conj) {
			auto [a, p] = l.d.split_linear(x);
			if (a.is_zero()) {
				keep.push_back(lit_formula(l));
				continue;
			}
			if (!a.is_constant())
				throw NotGroupFragment("coefficient of '" + x + "' is not rational");
			Rational c = a.constant_value();
			if (l.rel == Atom::Rel::Zero) {
				/* only reachable when x was substituted away already */
				keep.push_back(lit_formula(l));
				continue;
			}
			Term bound = Rational(-1) / c * p;
			(c > 0 ? lower : upper).push_back(bound);
		}
		for (const auto &lo : lower)
			for (const auto &hi : upper)
				keep.push_back(Formula::atom(hi - lo, Atom::Rel::Pos));
		out.push_back(Formula::conj(std::move(keep)));
	}
	return simplify(Formula::disj(std::move(out)));
}

Formula qe_rec(const Formula &f)
{
	switch (f.kind()) {
	case Kind::Not:
		return Formula::negation(qe_rec(f.children()[0]));
	case Kind::And:
	case Kind::Or: {
		std::vector<Formula> kids;
		for (const auto &k : f.children())
			kids.push_back(qe_rec(k));
		return f.kind() == Kind::And ? Formula::conj(kids) : Formula::disj(kids);
	}
	case Kind::Implies:
		return Formula::implies(qe_rec(f.children()[0]), qe_rec(f.children()[1]));
	case Kind::Iff:
		return Formula::iff(qe_rec(f.children()[0]), qe_rec(f.children()[1]));
	case Kind::Exists:
		return eliminate(f.var(), qe_rec(f.children()[0]));
	case Kind::Forall:
		return simplify(Formula::negation(eliminate(f.var(), Formula::negation(qe_rec(f.children()[0])))));
	default:
		return f;
	}
}

} // namespace

Formula doag_qe(const Formula &f)
{
	if (!f.in_group_fragment())
		throw NotGroupFragment("formula has products of symbols: " + f.to_string());
	if (f.is_quantifier_free())
		return f;
	return simplify(qe_rec(f));
}

} // namespace valsat
