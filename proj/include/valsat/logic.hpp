/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/formula.hpp"

#include <map>
#include <string>

namespace valsat {

/* Symbol assignment in the Hahn model of dimension n.  Bracketed series
 * symbols denote themselves; an unbound `t` denotes t^(1,0,...,0). */
struct Env {
	std::size_t n = 1;
	std::map<std::string, HahnSeries> values;

	Env() = default;
	explicit Env(std::size_t dim) : n(dim) {}
	Env with(const std::string &sym, const HahnSeries &v) const;
	HahnSeries lookup(const std::string &sym) const; /* UnboundSymbol */
};

HahnSeries eval_term(const Term &t, const Env &env);

/* Truth in the model.  Quantifiers are eliminated first, which needs the
 * group fragment (NotGroupFragment otherwise). */
bool eval(const Formula &f, const Env &env);

/* Folds true/false through connectives and removes duplicate children. */
Formula simplify(const Formula &f);

/* Equivalent quantifier-free formula for the divisible ordered abelian
 * group fragment: equality substitution, then Fourier-Motzkin. */
Formula doag_qe(const Formula &f);

} // namespace valsat
