#include "hbsums/padic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hbsums/errors.hpp"

namespace hbsums {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(long p) {
  require(is_prime(p) && p != 2, "p must be an odd prime (got " + std::to_string(p) + ")");
}

Integer p_power(long p, long e) {
  require(e >= 0, "p_power: negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

namespace {

// Strips p from n in place and returns the count.
long remove_p(long p, Integer& n) {
  const Integer pz(p);
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Integer mod_pow(long p, const Integer& n, long e) {
  Integer m = p_power(p, e);
  Integer r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

long valuation(long p, const Integer& x) {
  require(x != 0, "valuation of zero");
  Integer n = x;
  return remove_p(p, n);
}

long valuation(long p, const Rational& x) {
  return valuation(p, x.get_num()) - valuation(p, x.get_den());
}

PadicNumber PadicNumber::zero(long p, long absolute_precision) {
  return PadicNumber(p, std::min(absolute_precision, kExactCap), Integer(0), 0);
}

PadicNumber PadicNumber::normalize(long p, Integer n, long v, long absolute_precision) {
  absolute_precision = std::min(absolute_precision, kExactCap);
  if (absolute_precision <= v || n == 0) return zero(p, absolute_precision);
  n = mod_pow(p, n, absolute_precision - v);
  if (n == 0) return zero(p, absolute_precision);
  v += remove_p(p, n);
  return PadicNumber(p, v, std::move(n), absolute_precision - v);
}

PadicNumber PadicNumber::from_rational(long p, const Rational& x, long precision) {
  require_odd_prime(p);
  require(precision >= 1, "p-adic precision must be >= 1");
  if (x == 0) return zero(p, precision);
  Integer num = x.get_num();
  Integer den = x.get_den();
  const long v = remove_p(p, num) - remove_p(p, den);
  const Integer m = p_power(p, precision);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  Integer u = num * inv;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  return PadicNumber(p, v, std::move(u), precision);
}

PadicNumber PadicNumber::from_digits(long p, long v, const std::vector<long>& digits) {
  require_odd_prime(p);
  require(!digits.empty(), "p-adic digit list must be non-empty");
  Integer n(0);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    require(*it >= 0 && *it < p, "p-adic digit out of range");
    n = n * p + *it;
  }
  return normalize(p, n, v, v + static_cast<long>(digits.size()));
}

std::vector<long> PadicNumber::digits() const {
  std::vector<long> out;
  Integer n = unit_;
  for (long i = 0; i < precision_; ++i) {
    Integer d;
    mpz_fdiv_qr_ui(n.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p_));
    out.push_back(d.get_si());
  }
  return out;
}

Rational PadicNumber::lift() const {
  if (is_zero()) return Rational(0);
  if (valuation_ >= 0) return Rational(unit_ * p_power(p_, valuation_));
  return make_rational(unit_, p_power(p_, -valuation_));
}

Rational PadicNumber::norm() const {
  if (is_zero()) return Rational(0);
  if (valuation_ >= 0) return make_rational(Integer(1), p_power(p_, valuation_));
  return Rational(p_power(p_, -valuation_));
}

PadicNumber PadicNumber::reduced_to(long absolute_precision) const {
  if (absolute_precision >= this->absolute_precision()) return *this;
  if (is_zero()) return zero(p_, absolute_precision);
  return normalize(p_, unit_, valuation_, absolute_precision);
}

PadicNumber PadicNumber::operator-() const {
  if (is_zero()) return *this;
  Integer n = p_power(p_, precision_) - unit_;
  return PadicNumber(p_, valuation_, std::move(n), precision_);
}

namespace {

void require_same_prime(const PadicNumber& a, const PadicNumber& b) {
  require(a.prime() == b.prime(), "p-adic prime mismatch (" + std::to_string(a.prime()) + " vs " +
                                      std::to_string(b.prime()) + ")");
}

}  // namespace

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero()) return b.reduced_to(abs_prec);
  if (b.is_zero()) return a.reduced_to(abs_prec);
  const long v0 = std::min(a.valuation_, b.valuation_);
  Integer n = a.unit_ * p_power(a.p_, a.valuation_ - v0) + b.unit_ * p_power(b.p_, b.valuation_ - v0);
  return PadicNumber::normalize(a.p_, std::move(n), v0, abs_prec);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  if (a.is_zero() || b.is_zero()) {
    // A zero known mod p^A times something divisible by p^v is known mod p^(A+v);
    // for a zero, valuation_ holds A.
    return PadicNumber::zero(a.p_, std::min(a.valuation_ + b.valuation_, PadicNumber::kExactCap));
  }
  const long prec = std::min(a.precision_, b.precision_);
  Integer n = a.unit_ * b.unit_;
  n = mod_pow(a.p_, n, prec);
  return PadicNumber(a.p_, a.valuation_ + b.valuation_, std::move(n), prec);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  require(!b.is_zero(), "division by a p-adic number indistinguishable from 0");
  if (a.is_zero()) return PadicNumber::zero(a.p_, a.valuation_ - b.valuation_);
  const long prec = std::min(a.precision_, b.precision_);
  const Integer m = p_power(a.p_, prec);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), m.get_mpz_t());
  Integer n = a.unit_ * inv;
  mpz_mod(n.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return PadicNumber(a.p_, a.valuation_ - b.valuation_, std::move(n), prec);
}

PadicNumber PadicNumber::scaled(const Rational& r) const {
  if (r == 0) return exact_zero(p_);
  if (is_zero()) return zero(p_, valuation_ + hbsums::valuation(p_, r));
  return *this * from_rational(p_, r, precision_);
}

bool agrees(const PadicNumber& a, const PadicNumber& b) { return (a - b).is_zero(); }

long distance_valuation(const PadicNumber& a, const PadicNumber& b) { return (a - b).valuation(); }

namespace {

// Largest e with p^e <= j.
long floor_log(long p, long j) {
  long e = 0;
  for (long t = p; t <= j; t *= p) ++e;
  return e;
}

}  // namespace

PadicNumber padic_log(const PadicNumber& u) {
  const long p = u.prime();
  require(!u.is_zero() && u.valuation() == 0, "padic_log: argument must be a 1-unit (v_p(u-1) >= 1)");
  const long A = u.absolute_precision();
  const PadicNumber x = u - PadicNumber::one(p, A);
  require(x.valuation() >= 1, "padic_log: argument must be a 1-unit (v_p(u-1) >= 1)");
  if (x.is_zero()) return PadicNumber::zero(p, A);
  const long a = x.valuation();
  // Term j has valuation >= j*a - floor_log(j), nondecreasing in j since a >= 1.
  PadicNumber sum = x;
  PadicNumber power = x;
  for (long j = 2; j * a - floor_log(p, j) < A; ++j) {
    power *= x;
    const PadicNumber term = power.scaled(make_rational(1, j));
    sum = (j % 2 == 0) ? sum - term : sum + term;
  }
  return sum.reduced_to(A);
}

PadicNumber padic_exp(const PadicNumber& x) {
  const long p = x.prime();
  require(x.valuation() >= 1, "padic_exp: argument must satisfy v_p(x) >= 1");
  const long A = x.absolute_precision();
  require(A < PadicNumber::kExactCap, "padic_exp: argument needs finite precision");
  if (x.is_zero()) return PadicNumber::one(p, A);
  const long a = x.valuation();
  // v_p(j!) <= (j-1)/(p-1), so term j has valuation >= j*a - (j-1)/(p-1).
  PadicNumber sum = PadicNumber::one(p, A) + x;
  PadicNumber term = x;
  for (long j = 2; static_cast<double>(j * a) - static_cast<double>(j - 1) / static_cast<double>(p - 1) < A; ++j) {
    term = (term * x).scaled(make_rational(1, j));
    sum += term;
  }
  return sum.reduced_to(A);
}

PadicNumber padic_pow(const PadicNumber& q, long x) {
  const long p = q.prime();
  require(!q.is_zero() && q.valuation() == 0 &&
              (q - PadicNumber::one(p, q.absolute_precision())).valuation() >= 1,
          "padic_pow: base must be a 1-unit (v_p(q-1) >= 1)");
  PadicNumber result = PadicNumber::one(p, q.absolute_precision());
  PadicNumber base = q;
  unsigned long e = static_cast<unsigned long>(x < 0 ? -x : x);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  if (x < 0) result = PadicNumber::one(p, q.absolute_precision()) / result;
  return result;
}

PadicNumber padic_pow(const PadicNumber& q, const PadicNumber& x) {
  require(x.valuation() >= 0, "padic_pow: exponent must satisfy |x|_p <= 1");
  return padic_exp(x * padic_log(q));
}

PadicNumber qnum(long x, const PadicNumber& q) {
  require(x >= 0, "qnum: x must be >= 0");
  const long p = q.prime();
  const long A = q.absolute_precision();
  return qnum<PadicNumber>(x, q, PadicNumber::one(p, A), PadicNumber::exact_zero(p));
}

Rational qnum(long x, const Rational& q) {
  require(x >= 0, "qnum: x must be >= 0");
  return qnum<Rational>(x, q, Rational(1), Rational(0));
}

long mult_order(long p, long M) {
  require(M >= 1, "mult_order: modulus must be >= 1");
  require(std::gcd(p, M) == 1, "mult_order: gcd(p, M) must be 1");
  if (M == 1) return 1;
  long r = p % M;
  long d = 1;
  while (r != 1) {
    r = (r * p) % M;
    ++d;
  }
  return d;
}

}  // namespace hbsums
