#include <doctest.h>

#include <random>

#include "hbsums/cyclo.hpp"
#include "hbsums/errors.hpp"

using namespace hbsums;

namespace {

CycloElement random_element(std::mt19937& rng, long p, long level, long prec) {
  std::uniform_int_distribution<long> d(-400, 400);
  std::vector<PadicNumber> c;
  for (long i = 0; i < cyclo_degree(p, level); ++i)
    c.push_back(PadicNumber::from_rational(p, make_rational(d(rng), 1 + 2 * p * (d(rng) % 3 == 0)), prec));
  return CycloElement::from_coeffs(p, level, std::move(c), CycloOptions{level});
}

CycloElement one(long p, long level, long prec) {
  return CycloElement::constant(p, level, Rational(1), prec, CycloOptions{level});
}

}  // namespace

TEST_CASE("degrees") {
  CHECK(cyclo_degree(5, 0) == 1);
  CHECK(cyclo_degree(5, 1) == 4);
  CHECK(cyclo_degree(3, 2) == 6);
}

TEST_CASE("zeta is a primitive root of unity") {
  for (long p : {3L, 5L, 7L}) {
    const CycloElement z = CycloElement::zeta(p, 1, 10);
    CHECK(agrees(z.pow(p), one(p, 1, 10)));
    CHECK_FALSE(agrees(z, one(p, 1, 10)));
    CycloElement sum = one(p, 1, 10);
    CycloElement power = z;
    for (long i = 1; i < p; ++i) {
      sum += power;
      power *= z;
    }
    CHECK(sum.is_zero());
    // Norm of zeta - 1 is the constant term of Phi_p(x+1) up to sign: p.
    CHECK(agrees(PadicNumber::from_integer(p, p, 10), (z - one(p, 1, 10)).norm()));
  }
  const CycloOptions two{2};
  const CycloElement z9 = CycloElement::zeta(3, 2, 8, two);
  CHECK(agrees(z9.pow(9), one(3, 2, 8)));
  CHECK_FALSE(agrees(z9.pow(3), one(3, 2, 8)));
  CHECK_THROWS_AS(CycloElement::zeta(3, 2, 8), PreconditionError);  // level 2 not enabled
}

TEST_CASE("ring laws on random elements") {
  std::mt19937 rng(17);
  for (long p : {3L, 5L}) {
    for (int trial = 0; trial < 25; ++trial) {
      const CycloElement a = random_element(rng, p, 1, 12);
      const CycloElement b = random_element(rng, p, 1, 12);
      const CycloElement c = random_element(rng, p, 1, 12);
      CHECK(agrees(a * (b + c), a * b + a * c));
      CHECK(agrees((a * b) * c, a * (b * c)));
      CHECK(agrees(a * b, b * a));
      CHECK(agrees((a + b) - b, a));
      if (!a.is_zero() && a.min_valuation() == 0) {
        CHECK(agrees(a * a.inverse(), one(p, 1, 12)));
        CHECK(agrees((b / a) * a, b));
      }
    }
  }
}

TEST_CASE("Galois conjugates and the norm") {
  std::mt19937 rng(23);
  const long p = 5;
  for (int trial = 0; trial < 15; ++trial) {
    const CycloElement a = random_element(rng, p, 1, 10);
    const CycloElement b = random_element(rng, p, 1, 10);
    CHECK(agrees((a * b).norm(), a.norm() * b.norm()));
    CHECK(agrees((a * b).conjugate(2), a.conjugate(2) * b.conjugate(2)));
    CHECK(agrees(a.conjugate(2).conjugate(3), a.conjugate(6 % 5)));
  }
  // Norm of an embedded element is its phi-th power.
  const PadicNumber x = PadicNumber::from_rational(p, Rational(7, 3), 10);
  CHECK(agrees(CycloElement::embed(x, 1).norm(), x * x * x * x));
}

TEST_CASE("logarithm of roots of unity vanishes") {
  for (long p : {3L, 5L}) {
    const CycloElement z = CycloElement::zeta(p, 1, 8);
    const CycloElement lz = cyclo_log(z);
    CHECK(lz.is_zero());
    CHECK(lz.absolute_precision() >= 6);
  }
  // log of a base-field principal unit matches padic_log.
  const PadicNumber u = PadicNumber::from_rational(5, Rational(26, 31), 10);
  CHECK(agrees(cyclo_log(CycloElement::embed(u, 1)).base(), padic_log(u)));
  CHECK_THROWS_AS(cyclo_log(CycloElement::constant(5, 1, Rational(2), 8)), PreconditionError);
}
