#include "hbsums/classical_sums.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "hbsums/errors.hpp"
#include "hbsums/kernels.hpp"

namespace hbsums {

std::string to_string(HardyKind kind) {
  switch (kind) {
    case HardyKind::S: return "S";
    case HardyKind::S2: return "S2";
    case HardyKind::S3: return "S3";
    case HardyKind::S5: return "S5";
  }
  return "?";
}

HardyKind parse_hardy_kind(const std::string& name) {
  if (name == "S") return HardyKind::S;
  if (name == "S2") return HardyKind::S2;
  if (name == "S3") return HardyKind::S3;
  if (name == "S5") return HardyKind::S5;
  throw PreconditionError("unknown Hardy sum kind '" + name + "' (expected S, S2, S3 or S5)");
}

CoprimePair::CoprimePair(long h, long k) : h_(h), k_(k) {
  require(k > 0, "k must be positive (got k=" + std::to_string(k) + ")");
  require(std::gcd(h, k) == 1,
          "h and k must be coprime (gcd(" + std::to_string(h) + "," + std::to_string(k) + ") != 1)");
}

namespace {

Rational ratio(long a, long b) { return make_rational(a, b); }

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Rational dedekind_sum(const CoprimePair& pair) {
  const long h = pair.h(), k = pair.k();
  Rational acc(0);
  for (long a = 1; a < k; ++a) acc += sawtooth(ratio(a, k)) * sawtooth(ratio(h * a, k));
  return acc;
}

Rational apostol_sum(const CoprimePair& pair, long n) {
  require(n >= 0, "apostol_sum: n must be >= 0");
  const long h = pair.h(), k = pair.k();
  Rational acc(0);
  for (long a = 1; a < k; ++a) acc += ratio(a, k) * bernoulli_fn(n, ratio(h * a, k));
  return acc;
}

bool hardy_admissible(HardyKind kind, long h, long k) {
  const bool h_odd = (h % 2) != 0;
  const bool k_odd = (k % 2) != 0;
  switch (kind) {
    case HardyKind::S: return h_odd != k_odd;
    case HardyKind::S2: return h_odd && !k_odd;
    case HardyKind::S3: return k_odd;
    case HardyKind::S5: return h_odd && k_odd;
  }
  return false;
}

std::string hardy_hypothesis(HardyKind kind) {
  switch (kind) {
    case HardyKind::S: return "If h+k is odd";
    case HardyKind::S2: return "If h is odd and k is even";
    case HardyKind::S3: return "If k is odd";
    case HardyKind::S5: return "If h and k are odd";
  }
  return "";
}

namespace {

void require_hardy(HardyKind kind, const CoprimePair& pair) {
  if (!hardy_admissible(kind, pair.h(), pair.k()))
    throw PreconditionError(to_string(kind) + "(" + std::to_string(pair.h()) + "," + std::to_string(pair.k()) +
                            ") requires the hypothesis \"" + hardy_hypothesis(kind) + "\"");
}

}  // namespace

Rational hardy_sum(HardyKind kind, const CoprimePair& pair) {
  require_hardy(kind, pair);
  const long h = pair.h(), k = pair.k();
  Rational acc(0);
  for (long j = 1; j < k; ++j) {
    const long fl = floor_div(h * j, k);
    switch (kind) {
      case HardyKind::S: acc += parity_sign(j + 1 + fl); break;
      case HardyKind::S2: acc += sawtooth(ratio(j, k)) * sawtooth(ratio(h * j, k)) * parity_sign(j); break;
      case HardyKind::S3: acc += sawtooth(ratio(h * j, k)) * parity_sign(j); break;
      case HardyKind::S5: acc += sawtooth(ratio(j, k)) * parity_sign(j + fl); break;
    }
  }
  return acc;
}

namespace {

// Values f(m), m = 1..P, such that the series is prefactor * sum_m f(m)/m.
// Excluded and even-index terms are stored as 0.
std::vector<double> tangent_period(HardyKind kind, long h, long k) {
  const bool full_index = (kind == HardyKind::S2 || kind == HardyKind::S3);
  const long period = full_index ? k : 2 * k;
  std::vector<double> f(static_cast<std::size_t>(period), 0.0);
  for (long m = 1; m <= period; ++m) {
    double value = 0.0;
    if (full_index) {
      if (kind == HardyKind::S2 && (2 * m) % k == 0) continue;
      // Poles sit where 2hm is an odd multiple of k.
      if ((2 * h * m) % k == 0 && ((2 * h * m) / k) % 2 != 0)
        throw std::logic_error("tangent pole inside the admissible series range");
      value = std::tan(std::numbers::pi * static_cast<double>((h * m) % k) / static_cast<double>(k));
    } else {
      if (m % 2 == 0) continue;
      if (kind == HardyKind::S5 && m % k == 0) continue;
      if ((h * m) % k == 0 && ((h * m) / k) % 2 != 0)
        throw std::logic_error("tangent pole inside the admissible series range");
      value = std::tan(std::numbers::pi * static_cast<double>((h * m) % (2 * k)) / static_cast<double>(2 * k));
    }
    f[static_cast<std::size_t>(m - 1)] = value;
  }
  return f;
}

double series_prefactor(HardyKind kind) {
  switch (kind) {
    case HardyKind::S: return 4.0 / std::numbers::pi;
    case HardyKind::S2: return -1.0 / (2.0 * std::numbers::pi);
    case HardyKind::S3: return 1.0 / std::numbers::pi;
    case HardyKind::S5: return 2.0 / std::numbers::pi;
  }
  return 0.0;
}

// sum_{j >= N} sum_r f(r)/(jP + r) = -(1/P) sum_r f(r) psi(N + r/P)  when sum_r f(r) = 0.
// The ln N part of psi cancels against the zero block mean.
double block_tail(const std::vector<double>& f, long num_periods) {
  const double P = static_cast<double>(f.size());
  const double N = static_cast<double>(num_periods);
  double tail = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0.0) continue;
    const double a = static_cast<double>(i + 1) / P;
    const double x = N + a;
    const double x2 = x * x;
    const double psi_shift =
        std::log1p(a / N) - 1.0 / (2.0 * x) - 1.0 / (12.0 * x2) + 1.0 / (120.0 * x2 * x2) - 1.0 / (252.0 * x2 * x2 * x2);
    tail -= f[i] * psi_shift / P;
  }
  return tail;
}

}  // namespace

TrigSeriesPartial trig_series_partial(HardyKind kind, const CoprimePair& pair, long num_periods) {
  require_hardy(kind, pair);
  require(num_periods >= 1, "num_periods must be >= 1");
  const std::vector<double> f = tangent_period(kind, pair.h(), pair.k());
  const double pref = series_prefactor(kind);
  const double blocks = kernels::periodic_harmonic_omp(f, num_periods);
  const double last = kernels::periodic_harmonic_block(f, num_periods - 1);
  const double tail = block_tail(f, num_periods);
  return TrigSeriesPartial{pref * (blocks + tail), std::abs(pref * last), pref * blocks, pref * tail};
}

}  // namespace hbsums
