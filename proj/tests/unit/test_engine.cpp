/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include <doctest.h>

#include "valsat/engine.hpp"
#include "valsat/errors.hpp"

using namespace valsat;

namespace {
HahnSeries S(const char *s) { return parse_series(s, 1); }
HahnSeries T(const Rational &q) { return HahnSeries::monomial(Exponent::unit(1, q)); }
CoefficientReal sqrt_of(long q) { return CoefficientReal(RealAlgebraic::sqrt(Rational(q))); }

HahnSeries partial_sum(long J)
{
	HahnSeries s(1);
	for (long j = 1; j <= J; j++)
		s = s + T(1 - Rational(1, j));
	return s;
}
} // namespace

TEST_CASE("series oracle sides")
{
	SeriesCutOracle o(S("t"));
	CHECK(o.side(S("0")) == Side::Below);
	CHECK(o.side(S("1")) == Side::Above);
	CHECK(o.side(S("t")) == Side::Equal);
	CHECK(o.queries() == 3);
}

TEST_CASE("set oracle sides")
{
	Env env(1);
	env = env.with("g", S("t"));
	auto set = solution_set({parse_formula("g < x", 1), parse_formula("x < 2*g", 1)}, "x", env);
	SetCutOracle o(set);
	CHECK(o.side(S("t")) == Side::Below);
	CHECK(o.side(S("2*t")) == Side::Above);
	CHECK(o.side(S("3/2*t")) == Side::Undecided);
	SetCutOracle p(solution_set({parse_formula("x = g", 1)}, "x", env));
	CHECK(p.side(S("t")) == Side::Equal);
}

TEST_CASE("budgets")
{
	Budgets b;
	CHECK(b.horizon() == 1000);
	b.height = 0;
	CHECK_THROWS_AS(b.validate(), PreconditionViolated);
}

TEST_CASE("group: realized point")
{
	SeriesCutOracle o(S("3*t - 1/2"));
	Budgets b;
	auto cls = classify_cut(o, {S("t"), S("1")}, Mode::Group, b);
	CHECK(cls.tag == CaseTag::Realized);
	CHECK(compare_series(cls.witness, S("3*t - 1/2")) == 0);
	CHECK(compare_series(realize_cut_group(cls, o, {S("t"), S("1")}, b), S("3*t - 1/2")) == 0);
}

TEST_CASE("group: residue transcendental")
{
	SeriesCutOracle o(sqrt_of(2) * S("t"));
	Budgets b;
	auto cls = classify_cut(o, {S("t")}, Mode::Group, b);
	CHECK(cls.tag == CaseTag::ResidueTranscendental);
	REQUIRE(cls.fill);
	CHECK(cls.fill->to_string() == "alg[-2,0,1;1,2]");
	REQUIRE(cls.residue_cut);
	CHECK(cls.residue_cut->lo > Rational(1414213, 1000000));
	CHECK(cls.residue_cut->hi < Rational(1414214, 1000000));
	CHECK(cls.residue_cut->width() <= pow2(-30));
	auto w = realize_cut_group(cls, o, {S("t")}, b);
	CHECK(w.to_string() == "alg[-2,0,1;1,2]*t^(1)");
}

TEST_CASE("group: residue spanned by the class is not an event")
{
	HahnSeries g2 = sqrt_of(2) * S("t");
	SeriesCutOracle o(S("t") + g2);
	auto cls = classify_cut(o, {S("t"), g2}, Mode::Group, Budgets{});
	CHECK(cls.tag == CaseTag::Realized);
}

TEST_CASE("group: value gap")
{
	SeriesCutOracle o(T(Rational(1, 2)));
	Budgets b;
	auto cls = classify_cut(o, {S("1"), S("t")}, Mode::Group, b);
	CHECK(cls.tag == CaseTag::GroupTranscendental);
	REQUIRE(cls.delta1);
	REQUIRE(cls.delta2);
	CHECK(*cls.delta1 == Exponent::unit(1, 0));
	CHECK(*cls.delta2 == Exponent::unit(1, 1));
	CHECK(cls.sign == 1);
	CHECK(realize_cut_group(cls, o, {S("1"), S("t")}, b).to_string() == "t^(1/2)");
}

TEST_CASE("group: below every class and above every class")
{
	Budgets b;
	SeriesCutOracle small(-T(2));
	auto c1 = classify_cut(small, {S("t")}, Mode::Group, b);
	CHECK(c1.tag == CaseTag::GroupTranscendental);
	CHECK(c1.sign == -1);
	CHECK(c1.witness.to_string() == "-t^(2)");
	SeriesCutOracle big(T(-1));
	auto c2 = classify_cut(big, {S("t")}, Mode::Group, b);
	CHECK(c2.tag == CaseTag::GroupTranscendental);
	CHECK(!c2.delta1);
	CHECK(compare_series(c2.witness, T(0)) == 0);
}

TEST_CASE("group: residue at the height boundary exhausts the budget")
{
	SeriesCutOracle o(CoefficientReal(Rational(11, 3)) * S("t"));
	CHECK_THROWS_AS(classify_cut(o, {S("t")}, Mode::Group, Budgets{}), BudgetExhausted);
	Budgets big;
	big.height = 11;
	CHECK(classify_cut(o, {S("t")}, Mode::Group, big).tag == CaseTag::Realized);
}

TEST_CASE("field: residue then realized tail")
{
	SeriesCutOracle o(HahnSeries::constant(1, sqrt_of(3)) + S("t"));
	Budgets b;
	std::vector<HahnSeries> ps{S("1"), S("t")};
	auto cls = classify_cut(o, ps, Mode::Field, b);
	CHECK(cls.tag == CaseTag::ResidueTranscendental);
	auto w = realize_cut_field(cls, o, ps, b);
	CHECK(w.to_string() == "alg[-3,0,1;1,2] + t^(1)");
}

TEST_CASE("field: immediate transcendental")
{
	SeriesCutOracle o(partial_sum(64));
	Budgets b;
	std::vector<HahnSeries> ps{S("1"), S("t")};
	auto cls = classify_cut(o, ps, Mode::Field, b);
	CHECK(cls.tag == CaseTag::ImmediateTranscendental);
	CHECK(cls.sequence.size() == 8);
	auto w = realize_cut_field(cls, o, ps, b);
	CHECK(compare_series(w, partial_sum(8)) == 0);
	CHECK(is_pseudo_limit(w, cls.sequence));

	Budgets tiny;
	tiny.denominator = 1;
	SeriesCutOracle o2(partial_sum(64));
	CHECK_THROWS_AS(classify_cut(o2, ps, Mode::Field, tiny), BudgetExhausted);
}

TEST_CASE("field: value between grid points")
{
	SeriesCutOracle o(HahnSeries::monomial(Exponent(std::vector<Rational>{0, 1})));
	Budgets b;
	std::vector<HahnSeries> ps{HahnSeries::constant(2, 1), HahnSeries::t(2)};
	auto cls = classify_cut(o, ps, Mode::Field, b);
	CHECK(cls.tag == CaseTag::GroupTranscendental);
	REQUIRE(cls.delta1);
	REQUIRE(cls.delta2);
	CHECK(*cls.delta1 == Exponent::zero(2));
	CHECK(*cls.delta2 == Exponent(std::vector<Rational>{Rational(1, 8), 0}));
	auto w = realize_cut_field(cls, o, ps, b);
	CHECK(w.to_string() == "t^(1/16,0)");
}

TEST_CASE("query elements")
{
	auto q = query_elements({S("t")}, Mode::Group, 2);
	CHECK(q.size() == 1 + 2 + 4);
	CHECK(q[0].is_zero());
	CHECK(q[1].to_string() == "-t^(1)");
	auto f = query_elements({S("t")}, Mode::Field, 1);
	/* 0, then +-1, +-t, +-t^2, then two-term sums */
	CHECK(f.size() == 1 + 6 + 12);
	CHECK(query_elements({S("t"), S("1")}, Mode::Group, 8, 50).size() == 50);
}

TEST_CASE("completion of a finite type")
{
	auto spec = parse_type_file("param g = t\nformula 0 < x\nformula x < g\n", 1, Mode::Group);
	Budgets b;
	b.prefix = 12;
	auto c = complete_type(spec.type, spec.env(), Mode::Group, b);
	CHECK(c.type_prefix.size() == 2);
	CHECK(c.decided.size() == 12);
	CHECK(c.path.length() == 12);
	CHECK(!c.set.is_empty());
	/* completing the completion changes nothing */
	auto again = complete_type(PartialType::from_formulas(c.decided, {"g"}), spec.env(), Mode::Group, b);
	CHECK(again.path == c.path);
}

TEST_CASE("contradictory type names the conflicting pair")
{
	auto spec = parse_type_file("param g = t\nformula g < x\nformula 0 < x\nformula x < 0\n", 1, Mode::Group);
	Budgets b;
	b.prefix = 10;
	try {
		complete_type(spec.type, spec.env(), Mode::Group, b);
		FAIL("expected NotFinitelySatisfiable");
	} catch (const NotFinitelySatisfiable &e) {
		CHECK(std::string(e.what()) == "conflicting formulas: g < x and x < 0");
	}
}

TEST_CASE("realize: equality")
{
	auto spec = parse_type_file("param g1 = t\nformula x = g1\n", 1, Mode::Group);
	Budgets b;
	b.prefix = 10;
	auto r = realize_type(spec.type, spec.env(), Mode::Group, b);
	CHECK(r.classification.tag == CaseTag::Realized);
	CHECK(r.witness.to_string() == "t^(1)");
	CHECK(r.verified());
	CHECK(!r.fallback);
}

TEST_CASE("realize: beta type lies strictly between")
{
	auto spec = parse_type_file("param g = 1\nparam h = t\ngenerator beta g h\n", 1, Mode::Group);
	Budgets b;
	b.prefix = 20;
	auto r = realize_type(spec.type, spec.env(), Mode::Group, b);
	CHECK(r.classification.tag == CaseTag::GroupTranscendental);
	CHECK(r.verified());
	auto v = r.witness.valuation();
	CHECK(v > Value(Exponent::unit(1, 0)));
	CHECK(v < Value(Exponent::unit(1, 1)));
}

TEST_CASE("realize: report sections")
{
	auto spec = parse_type_file("param g = t\ngenerator residue_cut g alg[-2,0,1;1,2]\n", 1, Mode::Group);
	Budgets b;
	b.prefix = 16;
	auto r = realize_type(spec.type, spec.env(), Mode::Group, b);
	auto s = r.to_string();
	for (const char *h : {"COMPLETION\n", "CLASSIFICATION\n", "CASE\n", "WITNESS\n", "VERIFICATION\n", "BUDGETS\n"})
		CHECK(s.find(h) != std::string::npos);
	CHECK(r.verified());
}

TEST_CASE("computable in a real")
{
	RGenerator g = [](std::size_t i, const RationalInterval &I) -> std::optional<Formula> {
		if (I.hi < Rational(1, 2))
			return parse_formula(i % 2 ? "x < 1" : "0 < x", 1);
		if (I.lo >= Rational(1, 2))
			return parse_formula("x = 0", 1);
		return std::nullopt;
	};
	auto c = sequence_is_computable_in(g, OracleReal::ball(Rational(1, 3)), 4, 64);
	c.at(0);
	CHECK(c.precision_used() == 2);
	CHECK(c.at(1).to_string() == "x < 1");

	RGenerator constant = [](std::size_t, const RationalInterval &) -> std::optional<Formula> {
		return parse_formula("0 < x", 1);
	};
	auto k = sequence_is_computable_in(constant, OracleReal::ball(Rational(1, 3)));
	k.at(5);
	CHECK(k.max_precision_used() == 0);

	RGenerator fickle = [](std::size_t, const RationalInterval &I) -> std::optional<Formula> {
		return parse_formula(I.width() > Rational(1, 4) ? "0 < x" : "x < 0", 1);
	};
	CHECK_THROWS_AS(sequence_is_computable_in(fickle, OracleReal::ball(Rational(1, 3))), OracleFailure);
	RGenerator never = [](std::size_t, const RationalInterval &) -> std::optional<Formula> { return std::nullopt; };
	CHECK_THROWS_AS(sequence_is_computable_in(never, OracleReal::ball(Rational(1, 3)), 1, 10), OracleFailure);
}
