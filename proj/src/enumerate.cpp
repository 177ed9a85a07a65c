/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/enumerate.hpp"
#include "valsat/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace valsat {

namespace {

enum Cat { Atomic, NotC, AndC, OrC, ImpC, IffC, NumCats };

using Bucket = std::vector<std::string>;

/* buckets grow about tenfold per character; lengths past this are refused */
constexpr std::size_t kMaxBucket = 100'000;

std::size_t digits(long v)
{
	return std::to_string(v).size();
}

struct Mono {
	Term term;
	std::string print;
	bool constant;
};

std::vector<Mono> monomial_universe(const Signature &sig, std::size_t max_len)
{
	std::vector<Mono> out;
	/* factors in name order so the print matches Monomial::to_string */
	std::vector<std::string> syms = sig.symbols;
	std::sort(syms.begin(), syms.end());
	if (!sig.field) {
		for (const auto &s : syms)
			if (s.size() <= max_len)
				out.push_back({Term::symbol(s), s, false});
	} else {
		out.push_back({Term::constant(1), "", true});
		std::vector<std::pair<std::string, int>> cur;
		auto rec = [&](auto &self, std::size_t k, std::size_t len) -> void {
			if (k == syms.size()) {
				if (cur.empty())
					return;
				Term t = Term::constant(1);
				std::string p;
				for (const auto &[s, e] : cur) {
					for (int j = 0; j < e; j++)
						t = t * Term::symbol(s);
					if (!p.empty())
						p += "*";
					p += s + (e > 1 ? "^" + std::to_string(e) : "");
				}
				out.push_back({t, p, false});
				return;
			}
			self(self, k + 1, len);
			for (int e = 1;; e++) {
				if (syms[k] == sig.var && e > sig.max_var_degree)
					break;
				std::size_t add = syms[k].size() + (e > 1 ? 1 + digits(e) : 0) + (cur.empty() ? 0 : 1);
				if (len + add > max_len)
					break;
				cur.emplace_back(syms[k], e);
				self(self, k + 1, len + add);
				cur.pop_back();
			}
		};
		rec(rec, 0, 0);
	}
	return out;
}

std::size_t contribution(const Mono &m, long c)
{
	long a = c < 0 ? -c : c;
	if (m.constant)
		return digits(a);
	if (a == 1)
		return m.print.size();
	return digits(a) + 1 + m.print.size();
}

/* all canonical atoms whose print has exactly length L */
Bucket atoms_of_length(const Signature &sig, std::size_t L)
{
	Bucket out;
	if (L < 5)
		return out;
	const auto uni = monomial_universe(sig, L - 4);
	std::vector<std::pair<std::size_t, long>> chosen;
	auto emit = [&]() {
		long g = 0;
		bool has_var_part = false;
		for (const auto &[i, c] : chosen) {
			g = std::gcd(g, c);
			has_var_part = has_var_part || !uni[i].constant;
		}
		if (g != 1 || !has_var_part)
			return;
		Term d;
		for (const auto &[i, c] : chosen)
			d = d + Rational(c) * uni[i].term;
		for (auto rel : {Atom::Rel::Pos, Atom::Rel::Zero}) {
			/* equations are stored with a negative leading coefficient */
			if (rel == Atom::Rel::Zero && d.monomials().begin()->second > 0)
				continue;
			Formula f = Formula::atom(d, rel);
			if (f.kind() != Kind::Atom)
				continue;
			const Atom &a = f.atom();
			if (!(a.d == d))
				continue;
			std::string s = f.to_string();
			if (s.size() == L)
				out.push_back(std::move(s));
		}
	};
	/* lower bound of the print length: contributions plus separators */
	auto rec = [&](auto &self, std::size_t from, std::size_t sum) -> void {
		if (!chosen.empty())
			emit();
		for (std::size_t i = from; i < uni.size(); i++) {
			for (long a = 1;; a++) {
				std::size_t add = contribution(uni[i], a);
				std::size_t k = chosen.size() + 1;
				if (sum + add + 3 * k - 3 + (k == 1 ? 4 : 0) > L)
					break;
				for (long c : {a, -a}) {
					chosen.emplace_back(i, c);
					self(self, i + 1, sum + add);
					chosen.pop_back();
				}
			}
		}
	};
	rec(rec, 0, 0);
	return out;
}

} // namespace

struct FormulaEnumerator::Impl {
	Signature sig;
	std::vector<Bucket> cat[NumCats]; /* by print length */
	std::vector<Bucket> sorted;       /* all categories, lexicographic */
	std::vector<std::size_t> start;   /* index of the first formula of each length */

	const Bucket &get(Cat c, long L) const
	{
		static const Bucket empty;
		if (L < 0 || static_cast<std::size_t>(L) >= cat[c].size())
			return empty;
		return cat[c][L];
	}

	void wrap_into(Bucket &out, std::initializer_list<Cat> cats, long L) const
	{
		for (Cat c : cats)
			for (const auto &s : get(c, L - 2))
				out.push_back("(" + s + ")");
	}
	void bare_into(Bucket &out, std::initializer_list<Cat> cats, long L) const
	{
		for (Cat c : cats)
			for (const auto &s : get(c, L))
				out.push_back(s);
	}

	/* strings of length L for a child position */
	Bucket child(std::initializer_list<Cat> bare, std::initializer_list<Cat> paren, long L) const
	{
		Bucket b;
		bare_into(b, bare, L);
		wrap_into(b, paren, L);
		return b;
	}

	void binary(Bucket &out, long L, const std::string &op, std::initializer_list<Cat> lb,
	            std::initializer_list<Cat> lp, std::initializer_list<Cat> rb, std::initializer_list<Cat> rp) const
	{
		const long rest = L - static_cast<long>(op.size());
		for (long a = 1; a < rest; a++) {
			Bucket left = child(lb, lp, a);
			if (left.empty())
				continue;
			Bucket right = child(rb, rp, rest - a);
			for (const auto &l : left)
				for (const auto &r : right)
					out.push_back(l + op + r);
		}
	}

	void build_length(std::size_t L)
	{
		if (sorted.back().size() > kMaxBucket)
			throw BudgetExhausted("formula enumeration: prints of length " + std::to_string(L) +
			                      " exceed the materialization limit");
		const long l = static_cast<long>(L);
		Bucket b[NumCats];
		b[Atomic] = atoms_of_length(sig, L);
		if (L == 4)
			b[Atomic].push_back("true");
		if (L == 5)
			b[Atomic].push_back("false");
		for (const auto &s : child({Atomic, NotC}, {AndC, OrC, ImpC, IffC}, l - 4))
			b[NotC].push_back("not " + s);
		binary(b[AndC], l, " and ", {Atomic, NotC}, {OrC, ImpC, IffC}, {Atomic, NotC, AndC}, {OrC, ImpC, IffC});
		binary(b[OrC], l, " or ", {Atomic, NotC, AndC}, {ImpC, IffC}, {Atomic, NotC, AndC, OrC}, {ImpC, IffC});
		binary(b[ImpC], l, " -> ", {Atomic, NotC, AndC, OrC}, {ImpC, IffC}, {Atomic, NotC, AndC, OrC, ImpC}, {IffC});
		binary(b[IffC], l, " <-> ", {Atomic, NotC, AndC, OrC, ImpC}, {IffC}, {Atomic, NotC, AndC, OrC, ImpC}, {IffC});
		Bucket all;
		for (int c = 0; c < NumCats; c++) {
			all.insert(all.end(), b[c].begin(), b[c].end());
			cat[c].push_back(std::move(b[c]));
		}
		std::sort(all.begin(), all.end());
		start.push_back(start.back() + sorted.back().size());
		sorted.push_back(std::move(all));
	}

	/* extends buckets until index i is covered */
	std::pair<std::size_t, std::size_t> locate(std::size_t i)
	{
		while (start.back() + sorted.back().size() <= i)
			build_length(sorted.size());
		auto it = std::upper_bound(start.begin(), start.end(), i);
		std::size_t L = static_cast<std::size_t>(it - start.begin()) - 1;
		return {L, i - start[L]};
	}

	void ensure_length(std::size_t L)
	{
		while (sorted.size() <= L)
			build_length(sorted.size());
	}
};

FormulaEnumerator::FormulaEnumerator(Signature sig) : p_(std::make_unique<Impl>())
{
	p_->sig = std::move(sig);
	for (auto &c : p_->cat)
		c.emplace_back(); /* length 0 */
	p_->sorted.emplace_back();
	p_->start.push_back(0);
}

FormulaEnumerator::~FormulaEnumerator() = default;

const Signature &FormulaEnumerator::signature() const { return p_->sig; }

std::size_t FormulaEnumerator::count_shorter(std::size_t len)
{
	p_->ensure_length(len);
	return p_->start[len];
}

std::string FormulaEnumerator::print_at(std::size_t i)
{
	auto [L, k] = p_->locate(i);
	return p_->sorted[L][k];
}

Formula FormulaEnumerator::at(std::size_t i) { return parse_formula(print_at(i), 1); }

std::size_t FormulaEnumerator::index(const Formula &f)
{
	const std::string s = f.to_string();
	p_->ensure_length(s.size());
	const auto &b = p_->sorted[s.size()];
	auto it = std::lower_bound(b.begin(), b.end(), s);
	if (it == b.end() || *it != s)
		throw PreconditionViolated("not an enumerated formula: " + s);
	return p_->start[s.size()] + static_cast<std::size_t>(it - b.begin());
}

namespace {
FormulaEnumerator &cached(const Signature &sig)
{
	static std::mutex mu;
	static std::vector<std::unique_ptr<FormulaEnumerator>> cache;
	std::lock_guard lock(mu);
	for (auto &e : cache)
		if (e->signature() == sig)
			return *e;
	cache.push_back(std::make_unique<FormulaEnumerator>(sig));
	return *cache.back();
}
} // namespace

Formula enumerate_formulas(std::size_t i, const Signature &sig) { return cached(sig).at(i); }

std::size_t formula_index(const Formula &f, const Signature &sig) { return cached(sig).index(f); }

} // namespace valsat
