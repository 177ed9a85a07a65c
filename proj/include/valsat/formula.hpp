/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/term.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace valsat {

/* Canonical atom: d > 0 or d = 0, with d scaled to coprime integer
 * coefficients; for equations the first monomial is negative, so it prints
 * on the left. */
struct Atom {
	enum class Rel { Pos, Zero };
	Term d;
	Rel rel = Rel::Pos;

	friend bool operator==(const Atom &, const Atom &) = default;
	/* negative monomials on the left, positive ones on the right */
	std::string to_string() const;
};

enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff, Exists, Forall };

class Formula {
	struct Node;
	std::shared_ptr<const Node> p_;
	explicit Formula(std::shared_ptr<const Node> p) : p_(std::move(p)) {}

public:
	Formula(); /* true */

	static Formula truth(bool b);
	/* lhs rel rhs for rel in < <= > >= = != ; constant atoms fold to
	 * true/false */
	static Formula compare(const Term &lhs, std::string_view rel, const Term &rhs);
	/* d > 0 (pos) or d = 0, canonicalized; equations keep their first monomial on the left */
	static Formula atom(const Term &d, Atom::Rel rel);
	static Formula negation(const Formula &f);
	static Formula conj(std::vector<Formula> fs); /* flattened; empty gives true */
	static Formula disj(std::vector<Formula> fs); /* flattened; empty gives false */
	static Formula implies(const Formula &a, const Formula &b);
	static Formula iff(const Formula &a, const Formula &b);
	static Formula exists(const std::string &var, const Formula &body);
	static Formula forall(const std::string &var, const Formula &body);

	Kind kind() const;
	const Atom &atom() const;
	const std::vector<Formula> &children() const;
	const std::string &var() const; /* quantifiers */

	bool is_quantifier_free() const;
	std::set<std::string> free_symbols() const;
	/* all atoms are linear combinations of symbols with no products */
	bool in_group_fragment() const;

	std::string to_string() const;
	friend bool operator==(const Formula &a, const Formula &b);
};

/* Parses a formula; series constants inside brackets use dimension n. */
Formula parse_formula(std::string_view text, std::size_t n);
Term parse_term(std::string_view text, std::size_t n);

} // namespace valsat
