#pragma once

#include <string>
#include <vector>

#include "hbsums/exactnum.hpp"

namespace hbsums {

/// Element of Q_p known to finite absolute precision.
///
/// A nonzero value is p^valuation * unit with p not dividing unit and the unit
/// known modulo p^precision (relative precision). A zero is only known to be
/// divisible by p^valuation; its relative precision is 0. Arithmetic never
/// reports more precision than its inputs justify.
class PadicNumber {
 public:
  // Cap used for exactly known zeros (e.g. padding coefficients).
  static constexpr long kExactCap = 1L << 30;

  static PadicNumber zero(long p, long absolute_precision);
  static PadicNumber exact_zero(long p) { return zero(p, kExactCap); }
  /// x rounded to `precision` significant p-adic digits (absolute precision
  /// `precision` when x = 0).
  static PadicNumber from_rational(long p, const Rational& x, long precision);
  static PadicNumber from_integer(long p, const Integer& x, long precision) {
    return from_rational(p, Rational(x), precision);
  }
  static PadicNumber one(long p, long precision) { return from_integer(p, 1, precision); }
  /// Unit digits d_0..d_{M-1} in base p (d_0 != 0 unless all digits are zero).
  static PadicNumber from_digits(long p, long valuation, const std::vector<long>& digits);

  long prime() const { return p_; }
  long valuation() const { return valuation_; }
  long precision() const { return precision_; }
  long absolute_precision() const { return valuation_ + precision_; }
  bool is_zero() const { return precision_ == 0; }
  const Integer& unit() const { return unit_; }

  /// Base-p digits of the unit, least significant first.
  std::vector<long> digits() const;
  /// p^valuation * unit as a rational (the canonical lift).
  Rational lift() const;
  /// |x|_p = p^(-valuation); 0 for a zero.
  Rational norm() const;
  /// Same value with absolute precision lowered to `absolute_precision`.
  PadicNumber reduced_to(long absolute_precision) const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber& operator+=(const PadicNumber& b) { return *this = *this + b; }
  PadicNumber& operator-=(const PadicNumber& b) { return *this = *this - b; }
  PadicNumber& operator*=(const PadicNumber& b) { return *this = *this * b; }

  /// Multiplication by an exact integer or rational keeps relative precision.
  PadicNumber scaled(const Rational& r) const;

 private:
  PadicNumber(long p, long valuation, Integer unit, long precision)
      : p_(p), valuation_(valuation), unit_(std::move(unit)), precision_(precision) {}

  static PadicNumber normalize(long p, Integer n, long valuation, long absolute_precision);

  long p_;
  long valuation_;
  Integer unit_;
  long precision_;
};

/// True when a - b is zero at the precision both operands justify.
bool agrees(const PadicNumber& a, const PadicNumber& b);
/// Valuation of a - b (the absolute precision when they agree).
long distance_valuation(const PadicNumber& a, const PadicNumber& b);

void require_odd_prime(long p);
bool is_prime(long n);
/// v_p(x) for nonzero x.
long valuation(long p, const Integer& x);
long valuation(long p, const Rational& x);
Integer p_power(long p, long e);

/// Iwasawa logarithm on 1-units (v_p(u - 1) >= 1).
PadicNumber padic_log(const PadicNumber& u);
/// exp on v_p(x) >= 1.
PadicNumber padic_exp(const PadicNumber& x);
/// q^x by repeated squaring (exact for integer exponents); q must be a 1-unit.
PadicNumber padic_pow(const PadicNumber& q, long x);
/// q^x = exp(x log q) for |x|_p <= 1.
PadicNumber padic_pow(const PadicNumber& q, const PadicNumber& x);

/// [x:q] = 1 + q + ... + q^(x-1), computed without dividing by 1 - q.
template <typename Ring>
Ring qnum(long x, const Ring& q, const Ring& one, const Ring& zero) {
  // Binary splitting: [2a] = [a](1 + q^a), [a+1] = 1 + q [a].
  Ring acc = zero;   // [a]
  Ring qa = one;     // q^a
  for (int bit = 62; bit >= 0; --bit) {
    acc = acc * (one + qa);
    qa = qa * qa;
    if ((x >> bit) & 1L) {
      acc = one + q * acc;
      qa = qa * q;
    }
  }
  return acc;
}

PadicNumber qnum(long x, const PadicNumber& q);
Rational qnum(long x, const Rational& q);

/// Least d >= 1 with p^d = 1 (mod M).
long mult_order(long p, long M);

}  // namespace hbsums
