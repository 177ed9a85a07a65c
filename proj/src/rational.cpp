/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/rational.hpp"
#include "valsat/errors.hpp"

#include <cctype>

namespace valsat {

Rational make_rational(const Integer &num, const Integer &den)
{
	if (den == 0)
		throw DivisionByZero("rational with zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

static Integer parse_integer(std::string_view s, std::size_t offset)
{
	std::size_t i = 0;
	bool neg = false;
	if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
		neg = s[i] == '-';
		i++;
	}
	if (i == s.size())
		throw SyntaxError("expected digits", offset + i + 1);
	for (std::size_t j = i; j < s.size(); j++)
		if (!std::isdigit(static_cast<unsigned char>(s[j])))
			throw SyntaxError("unexpected character '" + std::string(1, s[j]) + "'",
			                  offset + j + 1);
	Integer z(std::string(s.substr(i)), 10);
	return neg ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text)
{
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Rational(parse_integer(text, 0));
	Integer num = parse_integer(text.substr(0, slash), 0);
	auto dtext = text.substr(slash + 1);
	if (!dtext.empty() && (dtext[0] == '-' || dtext[0] == '+'))
		throw SyntaxError("signed denominator", slash + 2);
	Integer den = parse_integer(dtext, slash + 1);
	if (den == 0)
		throw SyntaxError("zero denominator", slash + 2);
	return make_rational(num, den);
}

std::string to_string(const Integer &z) { return z.get_str(); }

std::string to_string(const Rational &q)
{
	if (q.get_den() == 1)
		return q.get_num().get_str();
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational &q) { return sgn(q); }
int sign(const Integer &z) { return sgn(z); }

Integer floor(const Rational &q)
{
	Integer r;
	mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
	return r;
}

Integer ceil(const Rational &q)
{
	Integer r;
	mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
	return r;
}

Rational pow2(long e)
{
	Integer p;
	unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
	mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
	if (e >= 0)
		return Rational(p);
	return make_rational(1, p);
}

Integer height(const Rational &q)
{
	Integer n = abs(q.get_num());
	return n > q.get_den() ? n : Integer(q.get_den());
}

long ceil_log2_abs(const Rational &q)
{
	if (q == 0)
		return 0;
	Rational a = abs(q);
	/* bits(num) - bits(den) is within one of log2 */
	long k = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
	         static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2)) - 1;
	while (pow2(k) < a)
		k++;
	while (k > -4096 && pow2(k - 1) >= a)
		k--;
	return k;
}

} // namespace valsat
