#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "hbsums/classical_sums.hpp"
#include "hbsums/errors.hpp"

using namespace hbsums;

namespace {

// s(h,k) = (1/4k) sum_{a=1}^{k-1} cot(pi a / k) cot(pi h a / k).
double dedekind_cot(long h, long k) {
  double s = 0;
  for (long a = 1; a < k; ++a)
    s += 1.0 / std::tan(std::numbers::pi * a / k) / std::tan(std::numbers::pi * h * a / k);
  return s / (4.0 * k);
}

// Plain partial sums of the tangent series with no tail correction; slow,
// but shares no code with the library.
double tangent_series_naive(HardyKind kind, long h, long k, long terms) {
  const double pi = std::numbers::pi;
  long double s = 0;
  for (long n = 1; n <= terms; ++n) {
    switch (kind) {
      case HardyKind::S3:
        s += std::tan(pi * h * n / k) / n;
        break;
      case HardyKind::S2:
        if ((2 * n) % k != 0) s += std::tan(pi * h * n / k) / n;
        break;
      case HardyKind::S5:
        if ((2 * n - 1) % k != 0) s += std::tan(pi * h * (2 * n - 1) / (2.0 * k)) / (2 * n - 1);
        break;
      case HardyKind::S:
        s += std::tan(pi * h * (2 * n - 1) / (2.0 * k)) / (2 * n - 1);
        break;
    }
  }
  switch (kind) {
    case HardyKind::S3: return static_cast<double>(s) / pi;
    case HardyKind::S2: return -static_cast<double>(s) / (2 * pi);
    case HardyKind::S5: return 2 * static_cast<double>(s) / pi;
    case HardyKind::S: return 4 * static_cast<double>(s) / pi;
  }
  return 0;
}

}  // namespace

TEST_CASE("Dedekind sums") {
  CHECK(dedekind_sum(CoprimePair(1, 3)) == Rational(1, 18));
  CHECK(dedekind_sum(CoprimePair(1, 1)) == 0);
  CHECK(dedekind_sum(CoprimePair(2, 5)) == 0);
  for (long k = 2; k <= 40; ++k)
    for (long h = 1; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      CHECK(std::abs(dedekind_sum(CoprimePair(h, k)).get_d() - dedekind_cot(h, k)) < 1e-9);
    }
}

TEST_CASE("Dedekind reciprocity on random pairs") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<long> d(1, 500);
  int tested = 0;
  while (tested < 200) {
    const long h = d(rng), k = d(rng);
    if (std::gcd(h, k) != 1) continue;
    const Rational lhs = dedekind_sum(CoprimePair(h, k)) + dedekind_sum(CoprimePair(k, h));
    CHECK(lhs == Rational(-1, 4) + make_rational(h * h + k * k + 1, 12 * h * k));
    ++tested;
  }
}

TEST_CASE("Dedekind sum depends on h modulo k and is odd in h") {
  for (long k = 2; k <= 25; ++k)
    for (long h = 1; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      CHECK(dedekind_sum(CoprimePair(h + 3 * k, k)) == dedekind_sum(CoprimePair(h, k)));
      CHECK(dedekind_sum(CoprimePair(-h, k)) == -dedekind_sum(CoprimePair(h, k)));
    }
}

TEST_CASE("Apostol sums") {
  for (long k = 1; k <= 20; ++k)
    for (long h = 1; h <= k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      CHECK(apostol_sum(CoprimePair(h, k), 1) == dedekind_sum(CoprimePair(h, k)));
    }
  // s(1,k,n) = sum (a/k) B_n(a/k) by hand for k = 3, n = 2.
  const Rational expected = Rational(1, 3) * bernoulli_poly(2, Rational(1, 3)) +
                            Rational(2, 3) * bernoulli_poly(2, Rational(2, 3));
  CHECK(apostol_sum(CoprimePair(1, 3), 2) == expected);
  CHECK_THROWS_AS(apostol_sum(CoprimePair(1, 3), -1), PreconditionError);
}

TEST_CASE("coprimality precondition") {
  CHECK_THROWS_AS(CoprimePair(2, 4), PreconditionError);
  CHECK_THROWS_AS(CoprimePair(1, 0), PreconditionError);
  CHECK_THROWS_AS(CoprimePair(1, -3), PreconditionError);
}

TEST_CASE("Hardy sums: hand-computed values") {
  // S3(1,3) = -((1/3)) + ((2/3)) = 1/3.
  CHECK(hardy_sum(HardyKind::S3, CoprimePair(1, 3)) == Rational(1, 3));
  // S2(1,2) = -((1/2))((1/2)) = 0.
  CHECK(hardy_sum(HardyKind::S2, CoprimePair(1, 2)) == 0);
  // S(1,2) = (-1)^(1+1+0) = 1.
  CHECK(hardy_sum(HardyKind::S, CoprimePair(1, 2)) == 1);
  // S5(1,3) = (-1)^1 ((1/3)) + (-1)^2 ((2/3)) = 1/3.
  CHECK(hardy_sum(HardyKind::S5, CoprimePair(1, 3)) == Rational(1, 3));
}

TEST_CASE("Hardy sum hypotheses") {
  CHECK(hardy_admissible(HardyKind::S2, 1, 2));
  CHECK_FALSE(hardy_admissible(HardyKind::S2, 2, 3));
  CHECK_FALSE(hardy_admissible(HardyKind::S, 1, 3));
  CHECK(hardy_admissible(HardyKind::S5, 3, 5));
  try {
    (void)hardy_sum(HardyKind::S2, CoprimePair(2, 3));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("If h is odd and k is even") != std::string::npos);
  }
  CHECK(parse_hardy_kind("S5") == HardyKind::S5);
  CHECK_THROWS_AS(parse_hardy_kind("S4"), PreconditionError);
}

TEST_CASE("tangent series: naive oracle agrees to its own accuracy") {
  for (HardyKind kind : {HardyKind::S, HardyKind::S2, HardyKind::S3, HardyKind::S5})
    for (long k = 1; k <= 7; ++k)
      for (long h = 1; h < 2 * k; ++h) {
        if (std::gcd(h, k) != 1 || !hardy_admissible(kind, h, k)) continue;
        const CoprimePair pr(h, k);
        const long P = (kind == HardyKind::S2 || kind == HardyKind::S3) ? k : 2 * k;
        const double naive = tangent_series_naive(kind, h, k, 50000 * P);
        const double lib = trig_series_partial(kind, pr, 1000).value;
        CHECK_MESSAGE(std::abs(naive - lib) < 1e-3, to_string(kind) << "(" << h << "," << k << ")");
      }
}

TEST_CASE("tangent series converges to the finite forms") {
  for (HardyKind kind : {HardyKind::S, HardyKind::S2, HardyKind::S3, HardyKind::S5})
    for (long k = 1; k <= 15; ++k)
      for (long h = 1; h < 2 * k; ++h) {
        if (std::gcd(h, k) != 1 || !hardy_admissible(kind, h, k)) continue;
        const CoprimePair pr(h, k);
        const TrigSeriesPartial s = trig_series_partial(kind, pr, 10000);
        CHECK(std::abs(s.value - hardy_sum(kind, pr).get_d()) < 1e-6);
        CHECK(s.value == doctest::Approx(s.raw_partial + s.tail_correction).epsilon(1e-12));
        CHECK(s.last_block_magnitude < 1e-5);
      }
}
