#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "hbsums/classical_sums.hpp"
#include "hbsums/twisted_bernoulli.hpp"
#include "hbsums/volkenborn.hpp"

namespace hbsums {

enum class MatchKind { exact, within_tolerance, branch_dependent_mismatch, mismatch };

std::string to_string(MatchKind m);

/// One audited identity: both sides computed by disjoint code paths and a
/// classification of how they compare. Audits record; they never assert.
struct AuditReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;  // ordered
  std::string lhs;
  nlohmann::json rhs;
  MatchKind match;
  std::string details;
};

// Identity ids used in reports.
inline constexpr const char* kIdHardyS2 = "hardy_S2_fermionic";
inline constexpr const char* kIdHardyS3 = "hardy_S3_fermionic";
inline constexpr const char* kIdHardyS5 = "hardy_S5_fermionic";
inline constexpr const char* kIdHardyS = "hardy_S_fermionic";
inline constexpr const char* kIdSawtoothSeries = "sawtooth_tangent_series";
inline constexpr const char* kIdReduction = "twisted_dedekind_reduction";

struct TwistedDedekindParams {
  long h;
  long k;
  long m;
  TwistedBernoulliContext ctx;

  /// Checks gcd(h,k) = 1, p | k and m <= T.
  static TwistedDedekindParams make(long h, long k, long m, TwistedBernoulliContext ctx);
};

struct TwistedDedekindForms {
  CycloElement via_bar;       // sum_j (j/k) bbar*_m(jh/k) with bbar* from F(t) e^({jh/k} t)
  CycloElement via_binomial;  // sum_j (j/k) sum_i C(m,i) {jh/k}^(m-i) b*_i
};

TwistedDedekindForms twisted_dedekind_forms(const TwistedDedekindParams& params);
/// s_w(h,k,m,q); both displayed forms are evaluated and must agree.
CycloElement twisted_dedekind_sum(const TwistedDedekindParams& params);

/// Twisted sum with w = 1, q = 1 + p^M along `ladder`, against the two
/// classical candidates sum_j (j/k) B_m({jh/k}) and k^m s(h,k,m+1).
/// `extra_precision` raises the target above the default plan.
AuditReport reduction_audit(long h, long k, long m, long p, const std::vector<long>& ladder,
                            long extra_precision = 0);

/// Hardy sum against the scaled fermionic integral of ((hx/k)) or (-1)^[hx/2k].
AuditReport audit_hardy_identity(HardyKind kind, const CoprimePair& pair, long p);

/// Fermionic integral of ((hx/k)) against (1/pi) sum tan(pi h n/k)/n and S3.
AuditReport audit_sawtooth_series(const CoprimePair& pair, long p, long num_periods);

/// Scale applied to the fermionic integral for each Hardy identity.
Rational hardy_integral_scale(HardyKind kind);
/// The integrand table for each Hardy identity.
PeriodicFn hardy_integrand(HardyKind kind, long h, long k);

struct AuditGridOptions {
  long series_periods = 10'000;
  std::vector<long> reduction_ms{0, 1, 2};
  std::vector<long> reduction_ladder{2, 4, 6};
  long extra_precision = 0;
};

/// Every admissible (identity, h, k, p) with 1 <= k <= kmax, 1 <= h < 2k.
/// Rows are sorted by parameters, independent of execution order.
std::vector<AuditReport> run_audit_grid(long kmax, const std::vector<long>& primes,
                                        const AuditGridOptions& opts = {});

}  // namespace hbsums
