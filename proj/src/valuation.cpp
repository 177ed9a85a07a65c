/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/valuation.hpp"
#include "valsat/errors.hpp"

#include <algorithm>
#include <numeric>

namespace valsat {

namespace {

/* Cancels the leading term of x against basis elements of the same
 * valuation while its leading coefficient lies in the Q-span of theirs.
 * Returns a with x - sum a_i B_i equal to the final remainder. */
struct Reduction {
	HahnSeries rest;
	std::vector<Rational> used;
};

/* coefficient c in the Q-span of leads; leads assumed independent */
std::optional<std::vector<Rational>> span_coords(const std::vector<CoefficientReal> &leads,
                                                 const CoefficientReal &c, IndependenceOptions opt)
{
	std::vector<CoefficientReal> all = leads;
	all.push_back(c);
	auto rel = rational_relation(all, opt.trust_oracle_atoms);
	if (!rel || rel->back() == 0)
		return std::nullopt;
	std::vector<Rational> q(leads.size());
	for (std::size_t i = 0; i < leads.size(); i++)
		q[i] = -(*rel)[i] / rel->back();
	return q;
}

std::vector<std::size_t> with_valuation(const std::vector<HahnSeries> &B, const Exponent &e)
{
	std::vector<std::size_t> idx;
	for (std::size_t i = 0; i < B.size(); i++)
		if (!B[i].has_no_terms() && B[i].leading().exp == e)
			idx.push_back(i);
	return idx;
}

/* tries to remove the coefficient of x at e using elements led at e */
bool cancel_at(HahnSeries &x, std::vector<Rational> &used, const std::vector<HahnSeries> &B,
               const Exponent &e, IndependenceOptions opt)
{
	auto idx = with_valuation(B, e);
	if (idx.empty())
		return false;
	std::vector<CoefficientReal> leads;
	for (auto i : idx)
		leads.push_back(B[i].leading().coeff);
	auto q = span_coords(leads, x.coefficient(e), opt);
	if (!q)
		return false;
	for (std::size_t k = 0; k < idx.size(); k++) {
		if ((*q)[k] == 0)
			continue;
		x = x - CoefficientReal((*q)[k]) * B[idx[k]];
		used[idx[k]] += (*q)[k];
	}
	return true;
}

Reduction reduce(const HahnSeries &x, const std::vector<HahnSeries> &B, IndependenceOptions opt)
{
	Reduction r{x, std::vector<Rational>(B.size())};
	while (!r.rest.has_no_terms()) {
		if (!cancel_at(r.rest, r.used, B, r.rest.leading().exp, opt))
			break;
	}
	return r;
}

} // namespace

HahnSeries SpanBasis::combine(const std::vector<Rational> &s) const
{
	if (s.size() != generators.size())
		throw PreconditionViolated("coefficient vector length does not match the basis");
	HahnSeries r(generators.empty() ? 1 : generators[0].dim());
	for (std::size_t i = 0; i < s.size(); i++)
		if (s[i] != 0)
			r = r + CoefficientReal(s[i]) * generators[i];
	return r;
}

bool is_valuation_independent(const std::vector<HahnSeries> &gs, IndependenceOptions opt)
{
	std::vector<std::size_t> order(gs.size());
	std::iota(order.begin(), order.end(), 0);
	for (const auto &g : gs)
		if (g.has_no_terms())
			throw PreconditionViolated("valuation independence of a zero element");
	std::vector<bool> done(gs.size(), false);
	for (std::size_t i = 0; i < gs.size(); i++) {
		if (done[i])
			continue;
		std::vector<CoefficientReal> leads;
		for (std::size_t j = i; j < gs.size(); j++)
			if (gs[j].leading().exp == gs[i].leading().exp) {
				leads.push_back(gs[j].leading().coeff);
				done[j] = true;
			}
		if (rational_relation(leads, opt.trust_oracle_atoms))
			return false;
	}
	return true;
}

SpanBasis valuation_basis(const std::vector<HahnSeries> &gs, IndependenceOptions opt)
{
	const std::size_t m = gs.size();
	std::vector<HahnSeries> B;
	std::vector<std::vector<Rational>> combo;
	for (std::size_t j = 0; j < m; j++) {
		if (gs[j].has_no_terms())
			throw PreconditionViolated("valuation basis of a zero element");
		auto r = reduce(gs[j], B, opt);
		if (r.rest.has_no_terms())
			continue;
		std::vector<Rational> c(m);
		c[j] = 1;
		for (std::size_t i = 0; i < B.size(); i++)
			for (std::size_t k = 0; k < m; k++)
				c[k] -= r.used[i] * combo[i][k];
		B.push_back(r.rest);
		combo.push_back(std::move(c));
	}
	/* clear tail coefficients that other elements can absorb */
	for (std::size_t b = 0; b < B.size(); b++) {
		Exponent cur = B[b].leading().exp;
		while (true) {
			const SeriesTerm *next = nullptr;
			for (const auto &t : B[b].terms())
				if (t.exp > cur) {
					next = &t;
					break;
				}
			if (!next)
				break;
			cur = next->exp;
			std::vector<Rational> used(B.size());
			HahnSeries x = B[b];
			if (!cancel_at(x, used, B, cur, opt))
				continue;
			B[b] = x;
			for (std::size_t i = 0; i < B.size(); i++)
				for (std::size_t k = 0; k < m; k++)
					combo[b][k] -= used[i] * combo[i][k];
		}
	}
	for (std::size_t b = 0; b < B.size(); b++)
		if (sign(B[b]) < 0) {
			B[b] = -B[b];
			for (auto &q : combo[b])
				q = -q;
		}
	std::vector<std::size_t> order(B.size());
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(),
	                 [&](std::size_t a, std::size_t b) { return compare_series(B[a], B[b]) < 0; });
	SpanBasis out;
	for (auto i : order) {
		const HahnSeries &g = B[i];
		if (out.class_reps.empty() || !(out.class_reps.back().leading().exp == g.leading().exp))
			out.class_reps.push_back(g);
		out.generators.push_back(g);
		out.change_of_basis.push_back(combo[i]);
		out.class_of.push_back(out.class_reps.size() - 1);
		out.component_reals.push_back(arch_ratio(g, out.class_reps.back()));
	}
	return out;
}

std::optional<std::vector<Rational>> express_in_basis(const SpanBasis &basis, const HahnSeries &x,
                                                      IndependenceOptions opt)
{
	auto r = reduce(x, basis.generators, opt);
	if (!r.rest.has_no_terms() || r.rest.trunc())
		return std::nullopt;
	return r.used;
}

int term_sign(const std::vector<Rational> &s, const SpanBasis &basis, long budget)
{
	if (s.size() != basis.size())
		throw PreconditionViolated("coefficient vector length does not match the basis");
	/* classes ascend, so the dominant one has the largest index */
	std::optional<std::size_t> top;
	for (std::size_t i = 0; i < s.size(); i++)
		if (s[i] != 0 && (!top || basis.class_of[i] > *top))
			top = basis.class_of[i];
	if (!top)
		return 0;
	CoefficientReal sum;
	for (std::size_t i = 0; i < s.size(); i++)
		if (s[i] != 0 && basis.class_of[i] == *top)
			sum = sum + CoefficientReal(s[i]) * basis.component_reals[i];
	return sum.sign(budget);
}

PseudoSequence::PseudoSequence(std::vector<HahnSeries> prefix) : explicit_(std::move(prefix)) {}

PseudoSequence::PseudoSequence(std::function<HahnSeries(std::size_t)> gen, std::size_t budget)
: gen_(std::move(gen)), budget_(budget)
{}

std::vector<HahnSeries> PseudoSequence::prefix(std::size_t k) const
{
	if (!gen_) {
		if (k > explicit_.size())
			throw PreconditionViolated("prefix of length " + std::to_string(k) + " requested from " +
			                           std::to_string(explicit_.size()) + " explicit elements");
		return {explicit_.begin(), explicit_.begin() + static_cast<std::ptrdiff_t>(k)};
	}
	if (k > budget_)
		throw TruncationInsufficient("prefix of length " + std::to_string(k) + " exceeds budget " +
		                             std::to_string(budget_));
	std::vector<HahnSeries> out;
	for (std::size_t i = 0; i < k; i++)
		out.push_back(gen_(i));
	return out;
}

bool check_pseudo_cauchy(const PseudoSequence &seq, std::size_t k)
{
	if (k < 3)
		throw PreconditionViolated("pseudo-Cauchy check needs at least 3 elements");
	auto a = seq.prefix(k);
	std::optional<Exponent> last;
	for (std::size_t i = 0; i + 1 < k; i++) {
		HahnSeries d = a[i + 1] - a[i];
		Value v = valuation(d);
		if (v.is_infinite())
			return false;
		if (last && !(v.exponent() > *last))
			return false;
		last = v.exponent();
	}
	return true;
}

bool is_pseudo_limit(const HahnSeries &x, const std::vector<HahnSeries> &a)
{
	for (std::size_t i = 0; i + 1 < a.size(); i++)
		if (valuation(x - a[i]) != valuation(a[i + 1] - a[i]))
			return false;
	return true;
}

HahnSeries pseudo_limit(const PseudoSequence &seq, std::size_t k)
{
	if (!check_pseudo_cauchy(seq, k))
		throw PreconditionViolated("sequence prefix is not pseudo-Cauchy");
	auto a = seq.prefix(k);
	HahnSeries x = a[0];
	for (std::size_t i = 0; i + 1 < k; i++)
		x = x + (a[i + 1] - a[i]).leading_monomial();
	if (is_pseudo_limit(x, a))
		return x;
	return a.back();
}

} // namespace valsat
