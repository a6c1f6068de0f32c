#include <doctest.h>

#include <random>

#include "hbsums/errors.hpp"
#include "hbsums/exactnum.hpp"

using namespace hbsums;

namespace {

// Akiyama-Tanigawa: yields B_n with B_1 = +1/2.
std::vector<Rational> akiyama_tanigawa(int n_max) {
  std::vector<Rational> out;
  std::vector<Rational> a(static_cast<std::size_t>(n_max + 1));
  for (int m = 0; m <= n_max; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[static_cast<std::size_t>(j - 1)] = Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    out.push_back(a[0]);
  }
  return out;
}

Rational power(const Rational& x, long n) {
  Rational r(1);
  for (long i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

TEST_CASE("Bernoulli numbers match the Akiyama-Tanigawa oracle") {
  const auto at = akiyama_tanigawa(40);
  for (long n = 0; n <= 40; ++n) {
    const Rational expected = (n == 1) ? Rational(-1, 2) : at[static_cast<std::size_t>(n)];
    CHECK_MESSAGE(bernoulli_number(n) == expected, "n = " << n);
  }
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("Bernoulli polynomials") {
  const auto at = akiyama_tanigawa(16);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational x = make_rational(num(rng), den(rng));
    for (long n = 0; n <= 16; ++n) {
      Rational expected(0);
      for (long k = 0; k <= n; ++k) {
        const Rational bk = (k == 1) ? Rational(-1, 2) : at[static_cast<std::size_t>(k)];
        expected += Rational(binomial(n, k)) * bk * power(x, n - k);
      }
      CHECK(bernoulli_poly(n, x) == expected);
    }
  }
  // Bbar_1 vanishes at integers, Bbar_n = B_n otherwise.
  CHECK(bernoulli_fn(1, Rational(3)) == 0);
  CHECK(bernoulli_fn(1, Rational(1, 3)) == Rational(-1, 6));
  CHECK(bernoulli_fn(2, Rational(7, 3)) == bernoulli_poly(2, Rational(1, 3)));
  CHECK(bernoulli_fn(4, Rational(-2)) == Rational(-1, 30));
}

TEST_CASE("floor, fractional part and sawtooth") {
  CHECK(floor_g(Rational(-1, 3)) == -1);
  CHECK(floor_g(Rational(7, 2)) == 3);
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(sawtooth(Rational(1, 3)) == Rational(-1, 6));
  CHECK(sawtooth(Rational(2)) == 0);
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  for (int i = 0; i < 200; ++i) {
    const Rational x = make_rational(num(rng), den(rng));
    CHECK(sawtooth(-x) == -sawtooth(x));
    CHECK(sawtooth(x + 1) == sawtooth(x));
    CHECK(Rational(floor_g(x)) + frac(x) == x);
  }
}

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(parse_rational("5") == 5);
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
  CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 100; ++i) {
    long den = d(rng);
    if (den == 0) den = 1;
    const Rational x = make_rational(d(rng), den);
    CHECK(parse_rational(to_string(x)) == x);
  }
}

TEST_CASE("Euler-type numbers of 2/(e^t+1)") {
  // e_n = -2 (2^(n+1) - 1) B_(n+1) / (n+1) for n >= 1.
  const auto e = euler_numbers(20);
  CHECK(e[0] == 1);
  for (long n = 1; n <= 20; ++n) {
    Integer two_pow = 1;
    for (long i = 0; i <= n; ++i) two_pow *= 2;
    const Rational expected = Rational(-2) * Rational(two_pow - 1) * bernoulli_number(n + 1) / Rational(n + 1);
    CHECK_MESSAGE(e[static_cast<std::size_t>(n)] == expected, "n = " << n);
  }
}

TEST_CASE("tan(b/2) against its Bernoulli expansion") {
  const long T = 21;
  const auto t = tan_series(T);
  REQUIRE(t.order() == static_cast<std::size_t>(T));
  // tan u = sum_{n>=1} (-1)^(n-1) 2^(2n) (2^(2n) - 1) B_(2n) u^(2n-1) / (2n)!
  for (long j = 0; j <= T; ++j) {
    Rational expected(0);
    if (j % 2 == 1) {
      const long n = (j + 1) / 2;
      Integer four_n = 1;
      for (long i = 0; i < n; ++i) four_n *= 4;
      const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
      expected = sign * Rational(four_n) * Rational(four_n - 1) * bernoulli_number(2 * n) / Rational(factorial(2 * n));
      expected /= Rational(Integer(1) << static_cast<unsigned>(j));  // u = b/2
    }
    CHECK_MESSAGE(t[static_cast<std::size_t>(j)] == expected, "j = " << j);
  }
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), PreconditionError);
}
