#include <doctest.h>

#include <random>

#include "hbsums/errors.hpp"
#include "hbsums/padic.hpp"

using namespace hbsums;

namespace {

// x mod p^e for a p-integral rational, computed with plain modular inverses.
Integer residue(const Rational& x, long p, long e) {
  const Integer m = p_power(p, e);
  Integer inv;
  REQUIRE(mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t()) != 0);
  Integer r = (x.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 700);
  return make_rational(num(rng), den(rng));
}

// Every digit the number claims must be right.
void check_honest(const PadicNumber& computed, const Rational& exact) {
  if (exact == 0) {
    CHECK(computed.is_zero());
    return;
  }
  const long v = valuation(computed.prime(), exact);
  if (computed.is_zero()) {
    CHECK(v >= computed.valuation());
    return;
  }
  CHECK(computed.valuation() == v);
  const PadicNumber reference = PadicNumber::from_rational(computed.prime(), exact, computed.precision() + 5);
  CHECK(distance_valuation(computed, reference) >= computed.absolute_precision());
}

}  // namespace

TEST_CASE("digits of simple rationals") {
  // -1/4 = 1/(1-5) = 1 + 5 + 25 + ... in Z_5; modulo 125 that is 31.
  const PadicNumber x = PadicNumber::from_rational(5, Rational(-1, 4), 3);
  CHECK(x.digits() == std::vector<long>{1, 1, 1});
  CHECK(x.lift() == 31);
  CHECK(residue(Rational(-1, 4), 5, 3) == 31);
  const PadicNumber y = PadicNumber::from_rational(3, Rational(2, 9), 4);
  CHECK(y.valuation() == -2);
  CHECK(y.digits() == std::vector<long>{2, 0, 0, 0});
  CHECK(y.norm() == 9);
  CHECK(PadicNumber::from_digits(7, 1, {3, 0, 1}).lift() == Rational(7 * (3 + 49)));
}

TEST_CASE("arithmetic agrees with exact rationals and never overclaims") {
  std::mt19937 rng(101);
  for (long p : {3L, 5L, 7L, 11L}) {
    for (int trial = 0; trial < 150; ++trial) {
      const Rational a = random_rational(rng), b = random_rational(rng);
      const long pa = 6 + trial % 5, pb = 4 + trial % 7;
      const PadicNumber x = PadicNumber::from_rational(p, a, pa);
      const PadicNumber y = PadicNumber::from_rational(p, b, pb);
      check_honest(x + y, a + b);
      check_honest(x - y, a - b);
      check_honest(x * y, a * b);
      if (b != 0) check_honest(x / y, a / b);
      check_honest(x.scaled(make_rational(p * 3, 2)), a * make_rational(p * 3, 2));
      if (a != 0 && b != 0) CHECK((x * y).precision() <= std::min(x.precision(), y.precision()));
    }
  }
}

TEST_CASE("cancellation lowers the precision") {
  const PadicNumber a = PadicNumber::from_rational(5, Rational(1), 6);
  const PadicNumber b = PadicNumber::from_rational(5, Rational(1 + 625), 6);
  const PadicNumber d = b - a;
  CHECK(d.valuation() == 4);
  CHECK(d.absolute_precision() == 6);
  CHECK(d.precision() == 2);
  const PadicNumber z = a - a;
  CHECK(z.is_zero());
  CHECK(z.absolute_precision() == 6);
  CHECK_THROWS_AS(a / z, PreconditionError);
}

TEST_CASE("p-adic logarithm") {
  // log_5(6) = sum_{j>=1} (-1)^(j+1) 5^j / j, summed exactly.
  Rational series(0);
  Rational pj(1);
  for (long j = 1; j <= 40; ++j) {
    pj *= 5;
    series += ((j % 2 == 1) ? Rational(1) : Rational(-1)) * pj / Rational(j);
  }
  CHECK(residue(series, 5, 3) == 55);
  const PadicNumber lg = padic_log(PadicNumber::from_rational(5, Rational(6), 12));
  CHECK(lg.absolute_precision() >= 10);
  CHECK(distance_valuation(lg, PadicNumber::from_rational(5, series, 30)) >= lg.absolute_precision());
  CHECK(residue(lg.lift(), 5, 3) == 55);
  CHECK_THROWS_AS(padic_log(PadicNumber::from_rational(5, Rational(2), 8)), PreconditionError);
}

TEST_CASE("log and exp are inverse and log is additive") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(1, 200);
  for (long p : {3L, 5L, 7L}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Rational u = Rational(1) + Rational(p * d(rng), d(rng) * p + 1);
      const Rational v = Rational(1) + Rational(p * p * d(rng));
      const PadicNumber U = PadicNumber::from_rational(p, u, 15);
      const PadicNumber V = PadicNumber::from_rational(p, v, 15);
      const PadicNumber e = padic_exp(padic_log(U));
      CHECK(agrees(e, U));
      CHECK(agrees(padic_log(U * V), padic_log(U) + padic_log(V)));
    }
  }
}

TEST_CASE("powers and q-numbers") {
  const PadicNumber q = PadicNumber::from_rational(5, Rational(26), 12);
  CHECK(agrees(padic_pow(q, 3), PadicNumber::from_rational(5, Rational(26 * 26 * 26), 12)));
  CHECK(agrees(padic_pow(q, -2), PadicNumber::from_rational(5, Rational(1, 26 * 26), 12)));
  // q^x for integral x agrees with the exponential definition.
  CHECK(agrees(padic_pow(q, PadicNumber::from_integer(5, 7, 12)), padic_pow(q, 7)));
  // [x]_q = (1 - q^x) / (1 - q)
  for (long x = 0; x <= 30; ++x) {
    Rational qx(1);
    for (long i = 0; i < x; ++i) qx *= 26;
    CHECK(qnum(x, Rational(26)) == (Rational(1) - qx) / Rational(-25));
    CHECK(agrees(qnum(x, q), PadicNumber::from_rational(5, (Rational(1) - qx) / Rational(-25), 12)));
  }
}

TEST_CASE("primes, valuations and orders") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(require_odd_prime(2), PreconditionError);
  CHECK_THROWS_AS(require_odd_prime(9), PreconditionError);
  CHECK(valuation(3, Integer(162)) == 4);
  CHECK(valuation(5, Rational(7, 50)) == -2);
  CHECK(mult_order(5, 6) == 2);
  CHECK(mult_order(3, 8) == 2);
  CHECK(mult_order(7, 12) == 2);
  CHECK(mult_order(5, 12) == 2);
  CHECK(mult_order(3, 10) == 4);
}
