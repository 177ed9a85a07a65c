/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/formula.hpp"
#include "valsat/errors.hpp"

#include <cctype>
#include <optional>

namespace valsat {

struct Formula::Node {
	Kind kind = Kind::True;
	Atom atom;
	std::vector<Formula> kids;
	std::string var;
};

namespace {

std::string side_to_string(const std::vector<std::pair<Monomial, Rational>> &side)
{
	if (side.empty())
		return "0";
	std::string s;
	for (const auto &[mono, c] : side) {
		if (!s.empty())
			s += " + ";
		if (mono.is_constant())
			s += to_string(c);
		else if (c == 1)
			s += mono.to_string();
		else
			s += to_string(c) + "*" + mono.to_string();
	}
	return s;
}

int prec(Kind k)
{
	switch (k) {
	case Kind::Not:
		return 5;
	case Kind::And:
		return 4;
	case Kind::Or:
		return 3;
	case Kind::Implies:
		return 2;
	case Kind::Iff:
		return 1;
	default:
		return 6;
	}
}

} // namespace

std::string Atom::to_string() const
{
	std::vector<std::pair<Monomial, Rational>> left, right;
	for (const auto &[mono, c] : d.monomials()) {
		if (c < 0)
			left.emplace_back(mono, Rational(-c));
		else
			right.emplace_back(mono, c);
	}
	return side_to_string(left) + (rel == Rel::Pos ? " < " : " = ") + side_to_string(right);
}

Formula::Formula() : p_(std::make_shared<Node>()) {}

Formula Formula::truth(bool b)
{
	auto n = std::make_shared<Node>();
	n->kind = b ? Kind::True : Kind::False;
	return Formula(n);
}

Formula Formula::atom(const Term &d, Atom::Rel rel)
{
	if (d.is_constant()) {
		int s = sgn(d.constant_value());
		return truth(rel == Atom::Rel::Pos ? s > 0 : s == 0);
	}
	/* scale to coprime integers */
	Integer l = 1, g = 0;
	for (const auto &[mono, c] : d.monomials())
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
	for (const auto &[mono, c] : d.monomials()) {
		Integer num = c.get_num() * (l / c.get_den());
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
	}
	Rational scale = Rational(l) / Rational(g);
	if (rel == Atom::Rel::Zero && d.monomials().begin()->second > 0)
		scale = -scale;
	auto n = std::make_shared<Node>();
	n->kind = Kind::Atom;
	n->atom = Atom{scale * d, rel};
	return Formula(n);
}

Formula Formula::compare(const Term &lhs, std::string_view rel, const Term &rhs)
{
	Term d = rhs - lhs;
	if (rel == "<")
		return atom(d, Atom::Rel::Pos);
	if (rel == ">")
		return atom(-d, Atom::Rel::Pos);
	if (rel == "=")
		return atom(d, Atom::Rel::Zero);
	if (rel == "<=")
		return disj({atom(d, Atom::Rel::Pos), atom(d, Atom::Rel::Zero)});
	if (rel == ">=")
		return disj({atom(-d, Atom::Rel::Pos), atom(d, Atom::Rel::Zero)});
	if (rel == "!=")
		return negation(atom(d, Atom::Rel::Zero));
	throw PreconditionViolated("unknown relation '" + std::string(rel) + "'");
}

Formula Formula::negation(const Formula &f)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Not;
	n->kids = {f};
	return Formula(n);
}

Formula Formula::conj(std::vector<Formula> fs)
{
	if (fs.empty())
		return truth(true);
	if (fs.size() == 1)
		return fs[0];
	auto n = std::make_shared<Node>();
	n->kind = Kind::And;
	for (auto &f : fs) {
		if (f.kind() == Kind::And)
			n->kids.insert(n->kids.end(), f.children().begin(), f.children().end());
		else
			n->kids.push_back(f);
	}
	return Formula(n);
}

Formula Formula::disj(std::vector<Formula> fs)
{
	if (fs.empty())
		return truth(false);
	if (fs.size() == 1)
		return fs[0];
	auto n = std::make_shared<Node>();
	n->kind = Kind::Or;
	for (auto &f : fs) {
		if (f.kind() == Kind::Or)
			n->kids.insert(n->kids.end(), f.children().begin(), f.children().end());
		else
			n->kids.push_back(f);
	}
	return Formula(n);
}

Formula Formula::implies(const Formula &a, const Formula &b)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Implies;
	n->kids = {a, b};
	return Formula(n);
}

Formula Formula::iff(const Formula &a, const Formula &b)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Iff;
	n->kids = {a, b};
	return Formula(n);
}

Formula Formula::exists(const std::string &var, const Formula &body)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Exists;
	n->var = var;
	n->kids = {body};
	return Formula(n);
}

Formula Formula::forall(const std::string &var, const Formula &body)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Forall;
	n->var = var;
	n->kids = {body};
	return Formula(n);
}

Kind Formula::kind() const { return p_->kind; }
const Atom &Formula::atom() const { return p_->atom; }
const std::vector<Formula> &Formula::children() const { return p_->kids; }
const std::string &Formula::var() const { return p_->var; }

bool Formula::is_quantifier_free() const
{
	if (kind() == Kind::Exists || kind() == Kind::Forall)
		return false;
	for (const auto &k : children())
		if (!k.is_quantifier_free())
			return false;
	return true;
}

std::set<std::string> Formula::free_symbols() const
{
	if (kind() == Kind::Atom)
		return atom().d.symbols();
	std::set<std::string> s;
	for (const auto &k : children())
		for (const auto &x : k.free_symbols())
			s.insert(x);
	if (kind() == Kind::Exists || kind() == Kind::Forall)
		s.erase(var());
	return s;
}

bool Formula::in_group_fragment() const
{
	if (kind() == Kind::Atom)
		return atom().d.degree() <= 1;
	for (const auto &k : children())
		if (!k.in_group_fragment())
			return false;
	return true;
}

std::string Formula::to_string() const
{
	auto wrap = [](const Formula &f, bool paren) { return paren ? "(" + f.to_string() + ")" : f.to_string(); };
	switch (kind()) {
	case Kind::True:
		return "true";
	case Kind::False:
		return "false";
	case Kind::Atom:
		return atom().to_string();
	case Kind::Not:
		return "not " + wrap(children()[0], prec(children()[0].kind()) < 5);
	case Kind::And:
	case Kind::Or: {
		const int p = prec(kind());
		std::string s;
		for (const auto &k : children()) {
			if (!s.empty())
				s += kind() == Kind::And ? " and " : " or ";
			s += wrap(k, prec(k.kind()) <= p);
		}
		return s;
	}
	case Kind::Implies:
		return wrap(children()[0], prec(children()[0].kind()) <= 2) + " -> " +
		       wrap(children()[1], prec(children()[1].kind()) < 2);
	case Kind::Iff:
		return wrap(children()[0], prec(children()[0].kind()) <= 1) + " <-> " +
		       wrap(children()[1], prec(children()[1].kind()) <= 1);
	case Kind::Exists:
		return "exists " + var() + " (" + children()[0].to_string() + ")";
	case Kind::Forall:
		return "forall " + var() + " (" + children()[0].to_string() + ")";
	}
	return "";
}

bool operator==(const Formula &a, const Formula &b)
{
	if (a.p_ == b.p_)
		return true;
	if (a.kind() != b.kind() || a.var() != b.var() || a.children().size() != b.children().size())
		return false;
	if (a.kind() == Kind::Atom && !(a.atom() == b.atom()))
		return false;
	for (std::size_t i = 0; i < a.children().size(); i++)
		if (!(a.children()[i] == b.children()[i]))
			return false;
	return true;
}

/* ---- parser ---- */

namespace {

bool is_keyword(std::string_view w)
{
	return w == "and" || w == "or" || w == "not" || w == "exists" || w == "forall" || w == "true" ||
	       w == "false";
}

class Parser {
	std::string_view s_;
	std::size_t pos_ = 0;
	std::size_t n_;
	std::optional<SyntaxError> furthest_;

	[[noreturn]] void fail(const std::string &msg)
	{
		SyntaxError e(msg, pos_ + 1);
		if (furthest_ && furthest_->column > e.column)
			throw *furthest_;
		throw e;
	}
	void note(const SyntaxError &e)
	{
		if (!furthest_ || e.column > furthest_->column)
			furthest_ = e;
	}
	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			pos_++;
	}
	bool at(std::string_view tok)
	{
		skip();
		return s_.substr(pos_, tok.size()) == tok;
	}
	bool eat(std::string_view tok)
	{
		if (!at(tok))
			return false;
		pos_ += tok.size();
		return true;
	}
	std::optional<std::string> peek_word()
	{
		skip();
		std::size_t p = pos_;
		if (p >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[p])) || s_[p] == '_'))
			return std::nullopt;
		while (p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_'))
			p++;
		return std::string(s_.substr(pos_, p - pos_));
	}
	bool eat_word(std::string_view w)
	{
		auto pw = peek_word();
		if (!pw || *pw != w)
			return false;
		pos_ += w.size();
		return true;
	}

	Integer natural()
	{
		skip();
		std::size_t b = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			pos_++;
		if (b == pos_)
			fail("expected a number");
		return Integer(std::string(s_.substr(b, pos_ - b)));
	}

	Term power(Term base)
	{
		if (!eat("^"))
			return base;
		Integer k = natural();
		if (k > 64)
			fail("exponent too large");
		Term r = Term::constant(1);
		for (long i = 0; i < k.get_si(); i++)
			r = r * base;
		return r;
	}

	Term factor()
	{
		skip();
		if (pos_ >= s_.size())
			fail("expected a term");
		char c = s_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c)))
			return Term::constant(Rational(natural()));
		if (c == '(') {
			pos_++;
			Term t = expr();
			if (!eat(")"))
				fail("expected ')'");
			return power(t);
		}
		if (c == '[') {
			std::size_t start = pos_ + 1;
			int depth = 0;
			std::size_t p = pos_;
			for (; p < s_.size(); p++) {
				if (s_[p] == '[')
					depth++;
				else if (s_[p] == ']' && --depth == 0)
					break;
			}
			if (p >= s_.size())
				fail("unterminated series constant");
			HahnSeries v;
			try {
				v = parse_series(s_.substr(start, p - start), n_);
			} catch (const SyntaxError &e) {
				throw e.shifted(start);
			}
			pos_ = p + 1;
			if (v.is_zero())
				return power(Term());
			if (v.trunc())
				fail("truncated series constant");
			/* rational constants stay numeric */
			if (v.terms().size() == 1 && v.terms()[0].exp.is_zero() && v.terms()[0].coeff.is_rational())
				return power(Term::constant(v.terms()[0].coeff.rational()));
			return power(Term::symbol(series_symbol(v)));
		}
		auto w = peek_word();
		if (!w || is_keyword(*w))
			fail("expected a term");
		pos_ += w->size();
		return power(Term::symbol(*w));
	}

	Term unary_term()
	{
		if (at("-") && !at("->")) {
			pos_++;
			return -unary_term();
		}
		return factor();
	}

	Term product()
	{
		Term t = unary_term();
		while (true) {
			if (eat("*")) {
				t = t * unary_term();
			} else if (eat("/")) {
				Integer d = natural();
				if (d == 0)
					fail("division by zero");
				t = Rational(1, 1) / Rational(d) * t;
			} else {
				return t;
			}
		}
	}

	Term expr()
	{
		Term t;
		if (at("+"))
			pos_++;
		t = product();
		while (true) {
			if (at("+")) {
				pos_++;
				t = t + product();
			} else if (at("-") && !at("->")) {
				pos_++;
				t = t - product();
			} else {
				return t;
			}
		}
	}

	std::optional<std::string> relop()
	{
		skip();
		for (std::string_view op : {"<=", ">=", "!=", "<", ">", "="}) {
			if (s_.substr(pos_, op.size()) != op)
				continue;
			if (op == "<" && at("<->"))
				return std::nullopt;
			pos_ += op.size();
			return std::string(op);
		}
		return std::nullopt;
	}

	Formula atom()
	{
		Term lhs = expr();
		auto op = relop();
		if (!op)
			fail("expected a relation");
		Term rhs = expr();
		return Formula::compare(lhs, *op, rhs);
	}

	Formula primary()
	{
		if (eat_word("true"))
			return Formula::truth(true);
		if (eat_word("false"))
			return Formula::truth(false);
		std::size_t save = pos_;
		try {
			return atom();
		} catch (const SyntaxError &e) {
			note(e);
			pos_ = save;
			if (!eat("("))
				throw;
		}
		Formula f = formula();
		if (!eat(")"))
			fail("expected ')'");
		return f;
	}

	Formula unary()
	{
		if (eat_word("not"))
			return Formula::negation(unary());
		for (const char *q : {"exists", "forall"}) {
			if (!eat_word(q))
				continue;
			auto v = peek_word();
			if (!v || is_keyword(*v))
				fail("expected a variable");
			pos_ += v->size();
			Formula body = unary();
			return q[0] == 'e' ? Formula::exists(*v, body) : Formula::forall(*v, body);
		}
		return primary();
	}

	Formula conj()
	{
		std::vector<Formula> fs{unary()};
		while (eat_word("and"))
			fs.push_back(unary());
		return Formula::conj(std::move(fs));
	}

	Formula disj()
	{
		std::vector<Formula> fs{conj()};
		while (eat_word("or"))
			fs.push_back(conj());
		return Formula::disj(std::move(fs));
	}

	Formula implication()
	{
		Formula a = disj();
		if (eat("->"))
			return Formula::implies(a, implication());
		return a;
	}

public:
	Parser(std::string_view s, std::size_t n) : s_(s), n_(n) {}

	Formula formula()
	{
		Formula a = implication();
		while (eat("<->"))
			a = Formula::iff(a, implication());
		return a;
	}

	void finish()
	{
		skip();
		if (pos_ != s_.size())
			fail("unexpected input");
	}

	Formula whole_formula()
	{
		Formula f = formula();
		finish();
		return f;
	}

	Term whole_term()
	{
		Term t = expr();
		finish();
		return t;
	}
};

} // namespace

Formula parse_formula(std::string_view text, std::size_t n) { return Parser(text, n).whole_formula(); }

Term parse_term(std::string_view text, std::size_t n) { return Parser(text, n).whole_term(); }

} // namespace valsat
