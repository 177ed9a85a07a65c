/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include "valsat/ptype.hpp"
#include "valsat/solve.hpp"
#include "valsat/trees.hpp"
#include "valsat/valuation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace valsat {

struct Budgets {
	long height = 8;          /* coefficient height of candidate elements */
	long denominator = 8;     /* exponent denominators on the value grid */
	std::size_t prefix = 100; /* formulas of the type and of the completion */
	long precision = 64;      /* bisection steps on real cuts */

	/* type formulas read to decide order queries beyond the prefix */
	std::size_t horizon() const { return 10 * prefix; }
	void validate() const; /* PreconditionViolated unless all positive */
};

/* Position of a query element relative to the realized point x0. */
enum class Side { Below, Above, Equal, Undecided };
std::string to_string(Side s);

class CutOracle {
public:
	virtual ~CutOracle() = default;
	Side side(const HahnSeries &y);
	std::size_t queries() const { return queries_; }
	/* independent copy, used to refine a cut after the report is built */
	virtual std::shared_ptr<CutOracle> clone() const = 0;

protected:
	virtual Side decide(const HahnSeries &y) = 0;

private:
	std::size_t queries_ = 0;
};

/* x0 given as a series, consulted only through comparisons */
class SeriesCutOracle : public CutOracle {
	HahnSeries x0_;

public:
	explicit SeriesCutOracle(HahnSeries x0) : x0_(std::move(x0)) {}
	std::shared_ptr<CutOracle> clone() const override { return std::make_shared<SeriesCutOracle>(x0_); }

protected:
	Side decide(const HahnSeries &y) override;
};

/* x0 constrained to a solution set; elements inside the hull that the set
 * does not place are Undecided */
class SetCutOracle : public CutOracle {
	IntervalSet set_;

public:
	explicit SetCutOracle(IntervalSet s) : set_(std::move(s)) {}
	const IntervalSet &set() const { return set_; }
	std::shared_ptr<CutOracle> clone() const override { return std::make_shared<SetCutOracle>(set_); }

protected:
	Side decide(const HahnSeries &y) override;
};

enum class CaseTag { Realized, ImmediateTranscendental, ResidueTranscendental, GroupTranscendental };
std::string to_string(CaseTag t);

struct CutClassification {
	CaseTag tag = CaseTag::Realized;
	HahnSeries d0;                       /* best approximation found */
	std::vector<HahnSeries> sequence;    /* successive approximations */
	/* residue case */
	std::optional<HahnSeries> scale;     /* b0 - d0 */
	std::optional<RationalInterval> residue_cut;
	std::optional<CoefficientReal> fill;
	/* group case: v(x0 - d0) lies strictly between the two */
	std::optional<Exponent> delta1, delta2;
	int sign = 1;
	/* witness proposed by the expansion; realize_* check it */
	HahnSeries witness;
	std::vector<std::string> trace;      /* the rule that fired at each step */
};

/* Expands x0 against the elements generated by the parameters.  Group
 * mode: rational combinations of a valuation basis; field mode: monomials
 * t^g with g on the divisible hull of the parameter values.  BudgetExhausted
 * when a finer budget generation would still change the answer. */
CutClassification classify_cut(CutOracle &oracle, const std::vector<HahnSeries> &params, Mode mode,
                               const Budgets &budgets);

/* witness of a group classification, checked against every side query of
 * height <= budgets.height */
HahnSeries realize_cut_group(const CutClassification &cls, CutOracle &oracle, const std::vector<HahnSeries> &params,
                             const Budgets &budgets);
/* same for field classifications; the immediate case returns the pseudo
 * limit of the approximations (PseudoLimitUnverified on a failed query) */
HahnSeries realize_cut_field(const CutClassification &cls, CutOracle &oracle, const std::vector<HahnSeries> &params,
                             const Budgets &budgets);

/* Height-bounded elements used for side queries: rational combinations of
 * the parameters (field mode: of their products of degree <= 2). */
std::vector<HahnSeries> query_elements(const std::vector<HahnSeries> &params, Mode mode, long height,
                                       std::size_t cap = 4000);

/* Leftmost consistent completion of a type over enumerate_formulas. */
struct Completion {
	std::vector<Formula> type_prefix;   /* first budgets.prefix formulas of the type */
	std::size_t horizon_used = 0;       /* type formulas in the constraint set */
	std::vector<Formula> decided;       /* literal for each enumerated formula */
	BinString path;                     /* 0 = formula true */
	IntervalSet set;                    /* solutions of everything above */
};

Completion complete_type(const PartialType &type, const Env &params, Mode mode, const Budgets &budgets);

struct RealizationReport {
	Mode mode = Mode::Group;
	Budgets budgets;
	Completion completion;
	CutClassification classification;
	HahnSeries witness;
	bool fallback = false; /* witness sampled from the solution set */
	std::vector<std::pair<std::string, bool>> verification;
	std::size_t oracle_queries = 0;

	bool verified() const;
	std::string to_string() const;
};

/* NotFinitelySatisfiable names the conflicting formulas. */
RealizationReport realize_type(const PartialType &type, const Env &params, Mode mode, const Budgets &budgets);

/* r-computable sequence of formulas: the generator sees an interval
 * approximation of r and answers nullopt while it needs more precision. */
using RGenerator = std::function<std::optional<Formula>(std::size_t, const RationalInterval &)>;

class ComputableInReal {
	RGenerator gen_;
	OracleReal r_;
	long budget_;
	std::vector<long> used_;

public:
	ComputableInReal(RGenerator g, OracleReal r, long budget) : gen_(std::move(g)), r_(std::move(r)), budget_(budget) {}
	/* OracleFailure if no answer within the budget */
	Formula at(std::size_t i);
	/* precision consumed by the last call to at */
	long precision_used() const { return used_.empty() ? 0 : used_.back(); }
	long max_precision_used() const;
};

/* Checks interval monotonicity on the first `check` indices (an answer,
 * once given, never changes at finer precision); OracleFailure otherwise. */
ComputableInReal sequence_is_computable_in(RGenerator g, const OracleReal &r, std::size_t check = 8,
                                           long budget = default_precision_budget());

} // namespace valsat
