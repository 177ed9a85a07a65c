/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/enumerate.hpp"
#include "valsat/logic.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace valsat {

enum class Mode { Group, Field };

std::string to_string(Mode m);
Mode parse_mode(std::string_view s); /* PreconditionViolated */

/* Computably enumerable set of formulas in `var` and the parameters.  The
 * generator may answer "not yet" (nullopt) for an index. */
struct PartialType {
	std::string var = "x";
	std::vector<std::string> params;
	std::function<std::optional<Formula>(std::size_t)> generator;
	/* set by generators that describe a cut by an exact series; order
	 * queries may then be answered against it */
	std::optional<HahnSeries> exact_point;

	static PartialType from_formulas(std::vector<Formula> fs, std::vector<std::string> params);
	/* computable type: the enumerated formulas the predicate accepts */
	static PartialType decidable(const Signature &sig, std::function<bool(const Formula &)> member);

	/* first k emitted formulas, asking at most `max_index` indices */
	std::vector<Formula> prefix(std::size_t k, std::size_t max_index) const;
};

/* Parameters and type read from a type file. */
struct TypeSpec {
	std::size_t n = 1;
	Mode mode = Mode::Group;
	std::vector<std::pair<std::string, HahnSeries>> params;
	PartialType type;

	Env env() const;
	Signature signature() const;
};

/* One construct per line, '#' starts a comment:
 *   param <name> = <series literal>
 *   formula <formula>
 *   generator <name> <arg>...
 * Formula lines are emitted first, then the generators in turn.
 * Generators (g, h parameter names; r an alg[...] literal or rational;
 * s a series literal in brackets):
 *   above_all g          n*g < x for n = 1, 2, ...
 *   beta g h             n*h < x and n*x < g, for h infinitesimal to g
 *   residue_cut g r      dyadic brackets a_k*g < x < (a_k + 2^-k)*g around r*g
 *   series_cut [s]       complete type of s over the enumeration
 *   partial_sums J       series_cut of sum_{j=1..J} t^(1 - 1/j)
 * SyntaxError carries the line in its message. */
TypeSpec parse_type_file(std::string_view text, std::size_t n, Mode mode);

} // namespace valsat
