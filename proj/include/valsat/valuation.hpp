/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/series.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace valsat {

/* A valuation basis of the Q-span of finitely many series, viewed as
 * elements of the additive group.  Generators are positive and sorted
 * 0 < g_1 < g_2 < ...; generators of equal valuation form an archimedean
 * class whose representative is its least generator. */
struct SpanBasis {
	std::vector<HahnSeries> generators;
	/* generators[i] = sum_j change_of_basis[i][j] * inputs[j] */
	std::vector<std::vector<Rational>> change_of_basis;
	/* class representatives h_1 << h_2 << ..., ascending */
	std::vector<HahnSeries> class_reps;
	std::vector<std::size_t> class_of;             /* per generator */
	std::vector<CoefficientReal> component_reals; /* g_i / h_{class_of[i]} */

	std::size_t size() const { return generators.size(); }
	HahnSeries combine(const std::vector<Rational> &s) const;
};

/* Options for coefficient linear algebra with oracle reals. */
struct IndependenceOptions {
	/* treat distinct oracle atoms as independent over the algebraics */
	bool trust_oracle_atoms = false;
};

bool is_valuation_independent(const std::vector<HahnSeries> &gs, IndependenceOptions opt = {});

SpanBasis valuation_basis(const std::vector<HahnSeries> &gs, IndependenceOptions opt = {});

/* Coordinates of x over the generators when x lies in their Q-span. */
std::optional<std::vector<Rational>> express_in_basis(const SpanBasis &basis, const HahnSeries &x,
                                                      IndependenceOptions opt = {});

/* Sign of sum s_i g_i decided from the class structure alone. */
int term_sign(const std::vector<Rational> &s, const SpanBasis &basis,
              long budget = default_precision_budget());

/* Explicit prefix or generated sequence i -> a_i with a materialization
 * budget. */
class PseudoSequence {
	std::vector<HahnSeries> explicit_;
	std::function<HahnSeries(std::size_t)> gen_;
	std::size_t budget_ = 0;

public:
	explicit PseudoSequence(std::vector<HahnSeries> prefix);
	PseudoSequence(std::function<HahnSeries(std::size_t)> gen, std::size_t budget);

	/* the first k elements; TruncationInsufficient beyond the budget */
	std::vector<HahnSeries> prefix(std::size_t k) const;
};

bool check_pseudo_cauchy(const PseudoSequence &seq, std::size_t k);

/* x with v(x - a_i) = v(a_{i+1} - a_i) for all i < k - 1.  Tries
 * a_0 + sum lead(a_{i+1} - a_i) first and falls back to a_{k-1}. */
HahnSeries pseudo_limit(const PseudoSequence &seq, std::size_t k);

/* whether x satisfies the pseudo-limit equalities on the prefix */
bool is_pseudo_limit(const HahnSeries &x, const std::vector<HahnSeries> &prefix);

} // namespace valsat
