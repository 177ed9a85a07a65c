/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/ptype.hpp"
#include "valsat/errors.hpp"

#include <cctype>
#include <memory>

namespace valsat {

std::string to_string(Mode m) { return m == Mode::Group ? "group" : "field"; }

Mode parse_mode(std::string_view s)
{
	if (s == "group")
		return Mode::Group;
	if (s == "field")
		return Mode::Field;
	throw PreconditionViolated("mode must be group or field, got '" + std::string(s) + "'");
}

PartialType PartialType::from_formulas(std::vector<Formula> fs, std::vector<std::string> params)
{
	PartialType p;
	p.params = std::move(params);
	p.generator = [fs = std::move(fs)](std::size_t i) -> std::optional<Formula> {
		if (i < fs.size())
			return fs[i];
		return std::nullopt;
	};
	return p;
}

PartialType PartialType::decidable(const Signature &sig, std::function<bool(const Formula &)> member)
{
	PartialType p;
	p.var = sig.var;
	for (const auto &s : sig.symbols)
		if (s != sig.var)
			p.params.push_back(s);
	p.generator = [sig, member = std::move(member)](std::size_t i) -> std::optional<Formula> {
		Formula f = enumerate_formulas(i, sig);
		if (member(f))
			return f;
		return std::nullopt;
	};
	return p;
}

std::vector<Formula> PartialType::prefix(std::size_t k, std::size_t max_index) const
{
	std::vector<Formula> out;
	for (std::size_t i = 0; i < max_index && out.size() < k; i++)
		if (auto f = generator(i))
			out.push_back(std::move(*f));
	return out;
}

Env TypeSpec::env() const
{
	Env e(n);
	for (const auto &[name, v] : params)
		e = e.with(name, v);
	return e;
}

Signature TypeSpec::signature() const
{
	Signature s;
	s.var = type.var;
	s.field = mode == Mode::Field;
	s.symbols = {type.var};
	for (const auto &[name, v] : params)
		s.symbols.push_back(name);
	return s;
}

namespace {

using Gen = std::function<std::optional<Formula>(std::size_t)>;

struct Line {
	std::size_t number;
	std::string text;
};

[[noreturn]] void fail(const Line &l, const std::string &msg, std::size_t col)
{
	throw SyntaxError("line " + std::to_string(l.number) + ": " + msg, col);
}

/* whitespace separated; a token starting with '[' runs to its matching ']' */
std::vector<std::pair<std::string, std::size_t>> tokens(const Line &l, std::size_t from)
{
	std::vector<std::pair<std::string, std::size_t>> out;
	const std::string &s = l.text;
	std::size_t i = from;
	while (i < s.size()) {
		if (std::isspace(static_cast<unsigned char>(s[i]))) {
			i++;
			continue;
		}
		std::size_t start = i;
		int depth = 0;
		while (i < s.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(s[i])))) {
			if (s[i] == '[')
				depth++;
			else if (s[i] == ']')
				depth--;
			i++;
		}
		if (depth != 0)
			fail(l, "unbalanced brackets", start + 1);
		out.emplace_back(s.substr(start, i - start), start + 1);
	}
	return out;
}

Term x_term(const std::string &var) { return Term::symbol(var); }

/* floor(r * 2^k) / 2^k */
Rational dyadic_floor(const RealAlgebraic &r, long k)
{
	const Rational scale = pow2(k);
	if (r.is_rational())
		return Rational(floor(r.to_rational() * scale)) / scale;
	/* irrational: some refinement puts both ends in the same cell */
	for (long n = k + 2;; n++) {
		auto I = r.approx(n);
		Integer fa = floor(I.lo * scale), fb = floor(I.hi * scale);
		if (fa == fb)
			return Rational(fa) / scale;
	}
}

} // namespace

TypeSpec parse_type_file(std::string_view text, std::size_t n, Mode mode)
{
	TypeSpec spec;
	spec.n = n;
	spec.mode = mode;
	std::vector<Formula> formulas;
	std::vector<std::pair<Line, std::vector<std::pair<std::string, std::size_t>>>> gens;

	std::size_t number = 0, pos = 0;
	while (pos <= text.size()) {
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos)
			end = text.size();
		Line l{++number, std::string(text.substr(pos, end - pos))};
		pos = end + 1;
		if (auto c = l.text.find('#'); c != std::string::npos)
			l.text.erase(c);
		while (!l.text.empty() && std::isspace(static_cast<unsigned char>(l.text.back())))
			l.text.pop_back();
		std::size_t i = 0;
		while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i])))
			i++;
		if (i == l.text.size())
			continue;
		std::size_t kw_end = i;
		while (kw_end < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[kw_end])))
			kw_end++;
		const std::string kw = l.text.substr(i, kw_end - i);
		std::size_t rest = kw_end;
		while (rest < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[rest])))
			rest++;
		const std::string body = l.text.substr(rest);
		try {
			if (kw == "param") {
				auto eq = body.find('=');
				if (eq == std::string::npos)
					fail(l, "expected '=' in param line", rest + 1);
				std::string name = body.substr(0, eq);
				while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
					name.pop_back();
				bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
				for (char c : name)
					ident = ident && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
				if (!ident || name == "t" || name == spec.type.var)
					fail(l, "bad parameter name '" + name + "'", rest + 1);
				for (const auto &[other, v] : spec.params)
					if (other == name)
						fail(l, "parameter '" + name + "' declared twice", rest + 1);
				std::size_t vstart = eq + 1;
				try {
					spec.params.emplace_back(name, parse_series(body.substr(vstart), n));
				} catch (const SyntaxError &e) {
					fail(l, e.detail, rest + vstart + e.column);
				}
			} else if (kw == "formula") {
				try {
					formulas.push_back(parse_formula(body, n));
				} catch (const SyntaxError &e) {
					fail(l, e.detail, rest + e.column);
				}
			} else if (kw == "generator") {
				gens.emplace_back(l, tokens(l, rest));
				if (gens.back().second.empty())
					fail(l, "generator needs a name", rest + 1);
			} else {
				fail(l, "unknown construct '" + kw + "'", i + 1);
			}
		} catch (const DimensionMismatch &e) {
			fail(l, e.what(), rest + 1);
		}
	}

	for (const auto &f : formulas)
		for (const auto &s : f.free_symbols()) {
			bool known = s == spec.type.var || s == "t" || is_series_symbol(s);
			for (const auto &[name, v] : spec.params)
				known = known || name == s;
			if (!known)
				throw UnboundSymbol("formula " + f.to_string() + " uses undeclared symbol '" + s + "'");
		}

	const std::string x = spec.type.var;
	auto param_term = [&](const Line &l, const std::pair<std::string, std::size_t> &tok) {
		for (const auto &[name, v] : spec.params)
			if (name == tok.first)
				return Term::symbol(name);
		fail(l, "unknown parameter '" + tok.first + "'", tok.second);
	};
	auto arity = [&](const Line &l, const auto &toks, std::size_t k) {
		if (toks.size() != k + 1)
			fail(l, "generator '" + toks[0].first + "' takes " + std::to_string(k) + " argument(s)", toks[0].second);
	};

	std::vector<Gen> built;
	for (const auto &[l, toks] : gens) {
		const std::string &name = toks[0].first;
		if (name == "above_all") {
			arity(l, toks, 1);
			Term g = param_term(l, toks[1]);
			built.push_back([g, x](std::size_t k) -> std::optional<Formula> {
				return Formula::compare(Rational(static_cast<long>(k + 1)) * g, "<", x_term(x));
			});
		} else if (name == "beta") {
			arity(l, toks, 2);
			Term g = param_term(l, toks[1]), h = param_term(l, toks[2]);
			built.push_back([g, h, x](std::size_t k) -> std::optional<Formula> {
				Rational m(static_cast<long>(k / 2 + 1));
				if (k % 2 == 0)
					return Formula::compare(m * h, "<", x_term(x));
				return Formula::compare(m * x_term(x), "<", g);
			});
		} else if (name == "residue_cut") {
			arity(l, toks, 2);
			Term g = param_term(l, toks[1]);
			RealAlgebraic r(Rational(0));
			try {
				r = parse_coefficient(toks[2].first).to_algebraic();
			} catch (const SyntaxError &e) {
				fail(l, e.detail, toks[2].second + e.column - 1);
			}
			built.push_back([g, r, x](std::size_t k) -> std::optional<Formula> {
				const long level = static_cast<long>(k / 2);
				Rational a = dyadic_floor(r, level);
				if (k % 2 == 0)
					return Formula::compare(a * g, "<", x_term(x));
				return Formula::compare(x_term(x), "<", (a + pow2(-level)) * g);
			});
		} else if (name == "series_cut" || name == "partial_sums") {
			arity(l, toks, 1);
			HahnSeries s(n);
			if (name == "series_cut") {
				const auto &tok = toks[1].first;
				if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
					fail(l, "series_cut expects a bracketed series literal", toks[1].second);
				try {
					s = parse_series(std::string_view(tok).substr(1, tok.size() - 2), n);
				} catch (const SyntaxError &e) {
					fail(l, e.detail, toks[1].second + e.column);
				}
			} else {
				long J = 0;
				try {
					J = std::stol(toks[1].first);
				} catch (const std::exception &) {
					fail(l, "partial_sums expects a positive integer", toks[1].second);
				}
				if (J < 1)
					fail(l, "partial_sums expects a positive integer", toks[1].second);
				for (long j = 1; j <= J; j++)
					s = s + HahnSeries::monomial(Exponent::unit(n, Rational(j - 1, j)));
			}
			if (spec.type.exact_point && compare_series(*spec.type.exact_point, s) != 0)
				fail(l, "two exact cuts in one type", toks[0].second);
			spec.type.exact_point = s;
			built.push_back([sig = spec.signature(), env = spec.env(), s, x](std::size_t k) -> std::optional<Formula> {
				Formula f = enumerate_formulas(k, sig);
				if (eval(f, env.with(x, s)))
					return f;
				return Formula::negation(f);
			});
		} else {
			fail(l, "unknown generator '" + name + "'", toks[0].second);
		}
	}

	for (const auto &[name, v] : spec.params)
		spec.type.params.push_back(name);
	spec.type.generator = [formulas, built](std::size_t i) -> std::optional<Formula> {
		if (i < formulas.size())
			return formulas[i];
		if (built.empty())
			return std::nullopt;
		const std::size_t j = i - formulas.size();
		return built[j % built.size()](j / built.size());
	};
	return spec;
}

} // namespace valsat
