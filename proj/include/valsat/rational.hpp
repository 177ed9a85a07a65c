/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace valsat {

using Integer = mpz_class;
/* mpq_class canonicalizes on every arithmetic operation: lowest terms,
 * positive denominator. */
using Rational = mpq_class;

Rational make_rational(const Integer &num, const Integer &den);

/* Parses "p" or "p/q" (optional leading '-'). Throws SyntaxError. */
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

int sign(const Rational &q);
int sign(const Integer &z);

Integer floor(const Rational &q);
Integer ceil(const Rational &q);

/* 2^e for any integer e. */
Rational pow2(long e);

/* max(|num|, den): the height used by every height-bounded enumeration. */
Integer height(const Rational &q);

/* Smallest k with |q| <= 2^k (q != 0); 0 for q == 0. */
long ceil_log2_abs(const Rational &q);

} // namespace valsat
