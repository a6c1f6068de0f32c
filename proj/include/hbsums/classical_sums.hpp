#pragma once

#include <string>

#include "hbsums/exactnum.hpp"

namespace hbsums {

// Hardy-Berndt sums. Tag names follow the capitals S, S_2, S_3, S_5;
// Berndt-Goldberg write these as S, s_2, s_3, s_5.
enum class HardyKind { S, S2, S3, S5 };

std::string to_string(HardyKind kind);
HardyKind parse_hardy_kind(const std::string& name);

class CoprimePair {
 public:
  // Throws PreconditionError unless gcd(h, k) = 1 and k > 0.
  CoprimePair(long h, long k);

  long h() const { return h_; }
  long k() const { return k_; }

 private:
  long h_;
  long k_;
};

/// s(h,k) = sum_{a=1}^{k-1} ((a/k)) ((ha/k)).
Rational dedekind_sum(const CoprimePair& pair);

/// s(h,k,n) = sum_{a=1}^{k-1} (a/k) Bbar_n(ha/k).
Rational apostol_sum(const CoprimePair& pair, long n);

/// Whether (h, k) satisfies the parity hypothesis attached to `kind`.
bool hardy_admissible(HardyKind kind, long h, long k);
/// Human-readable hypothesis, e.g. "If h is odd and k is even".
std::string hardy_hypothesis(HardyKind kind);

/// Exact value from the finite Berndt-Goldberg form:
///   S  = sum (-1)^(j+1+[hj/k])
///   S2 = sum (-1)^j ((j/k)) ((hj/k))
///   S3 = sum (-1)^j ((hj/k))
///   S5 = sum (-1)^(j+[hj/k]) ((j/k))
/// with j = 1..k-1.
Rational hardy_sum(HardyKind kind, const CoprimePair& pair);

struct TrigSeriesPartial {
  double value;                 // raw_partial + tail_correction
  double last_block_magnitude;  // |prefactor * (last full-period block)|
  double raw_partial;           // prefactor * (sum of the first num_periods blocks)
  double tail_correction;       // prefactor * (asymptotic sum of all remaining blocks)
};

/// Period-grouped summation of the tangent series
///   S2: -1/(2 pi) sum_{2n != 0 mod k} tan(pi h n / k) / n
///   S3:  1/pi     sum tan(pi h n / k) / n
///   S5:  2/pi     sum_{2n-1 != 0 mod k} tan(pi h (2n-1) / 2k) / (2n-1)
///   S:   4/pi     sum tan(pi h (2n-1) / 2k) / (2n-1)
/// Terms are grouped into whole periods of the tangent argument, so each block
/// has mean zero. The remainder after the last block is added in closed form
/// through the digamma asymptotic expansion.
TrigSeriesPartial trig_series_partial(HardyKind kind, const CoprimePair& pair, long num_periods);

}  // namespace hbsums
