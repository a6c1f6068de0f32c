#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "hbsums/series.hpp"

namespace hbsums {

using Integer = mpz_class;
// mpq_class keeps results canonical: gcd-reduced, positive denominator, 0 as 0/1.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// "num/den" with canonical reduction; zero is "0/1".
std::string to_string(const Rational& x);
/// Accepts "a/b" or "a".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

/// [x]_G: the largest integer <= x.
Integer floor_g(const Rational& x);
/// {x} = x - [x]_G, in [0, 1).
Rational frac(const Rational& x);
/// ((x)) = x - [x]_G - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

Integer binomial(long n, long k);
Integer factorial(long n);

/// B_n with B_1 = -1/2. Memoized; safe to call from several threads.
Rational bernoulli_number(long n);
/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_poly(long n, const Rational& x);
/// Periodic Bernoulli function: B_n({x}), except 0 at integers when n = 1.
Rational bernoulli_fn(long n, const Rational& x);

/// e_0..e_T with 2/(e^t + 1) = sum e_n t^n / n!.
std::vector<Rational> euler_numbers(long T);

/// Maclaurin coefficients of tan(b/2) through b^T.
TruncatedSeries<Rational> tan_series(long T);

}  // namespace hbsums
