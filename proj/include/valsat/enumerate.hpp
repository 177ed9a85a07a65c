/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/formula.hpp"

#include <memory>
#include <string>
#include <vector>

namespace valsat {

/* Symbols and fragment of an enumeration.  Group atoms are Z-linear in the
 * symbols with no constant; field atoms are integer polynomials whose
 * degree in `var` is at most max_var_degree. */
struct Signature {
	std::vector<std::string> symbols{"x"};
	bool field = false;
	std::string var = "x";
	int max_var_degree = 1;

	friend bool operator==(const Signature &, const Signature &) = default;
};

/* Quantifier-free formulas of the signature in length-lexicographic order
 * of their canonical prints.  Buckets are built lazily, one print length
 * at a time; a length whose predecessor already holds more than 100000
 * prints raises BudgetExhausted. */
class FormulaEnumerator {
public:
	explicit FormulaEnumerator(Signature sig);
	~FormulaEnumerator();

	Formula at(std::size_t i);
	std::string print_at(std::size_t i);
	/* PreconditionViolated when f is not a canonical formula of the signature */
	std::size_t index(const Formula &f);
	const Signature &signature() const;
	/* number of formulas whose print is shorter than len */
	std::size_t count_shorter(std::size_t len);

private:
	struct Impl;
	std::unique_ptr<Impl> p_;
};

Formula enumerate_formulas(std::size_t i, const Signature &sig);
std::size_t formula_index(const Formula &f, const Signature &sig);

} // namespace valsat
