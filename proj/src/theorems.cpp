#include "hbsums/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include "hbsums/errors.hpp"
#include "hbsums/serialize.hpp"

namespace hbsums {

std::string to_string(MatchKind m) {
  switch (m) {
    case MatchKind::exact: return "exact";
    case MatchKind::within_tolerance: return "within_tolerance";
    case MatchKind::branch_dependent_mismatch: return "branch_dependent_mismatch";
    case MatchKind::mismatch: return "mismatch";
  }
  return "?";
}

TwistedDedekindParams TwistedDedekindParams::make(long h, long k, long m, TwistedBernoulliContext ctx) {
  const CoprimePair pair(h, k);
  require(k % ctx.prime() == 0, "the twisted Dedekind sum needs p | k (p = " + std::to_string(ctx.prime()) +
                                    ", k = " + std::to_string(k) + ")");
  require(m >= 0 && m <= ctx.order(), "m must lie in 0..T (T = " + std::to_string(ctx.order()) + ")");
  return TwistedDedekindParams{pair.h(), pair.k(), m, std::move(ctx)};
}

TwistedDedekindForms twisted_dedekind_forms(const TwistedDedekindParams& params) {
  const auto& ctx = params.ctx;
  const std::vector<CycloElement> b = twisted_bernoulli_numbers(ctx);
  CycloElement via_bar = ctx.constant(Rational(0));
  CycloElement via_binomial = ctx.constant(Rational(0));
  for (long j = 1; j < params.k; ++j) {  // j = 0 contributes 0
    const Rational weight = make_rational(j, params.k);
    const Rational y = frac(make_rational(j * params.h, params.k));
    via_bar += twisted_bernoulli_poly_series(ctx, params.m, y).scaled(weight);
    Rational yp(1);
    for (long i = params.m; i >= 0; --i) {
      via_binomial += b[static_cast<std::size_t>(i)].scaled(weight * Rational(binomial(params.m, i)) * yp);
      yp *= y;
    }
  }
  return TwistedDedekindForms{std::move(via_bar), std::move(via_binomial)};
}

CycloElement twisted_dedekind_sum(const TwistedDedekindParams& params) {
  TwistedDedekindForms forms = twisted_dedekind_forms(params);
  if (!agrees(forms.via_bar, forms.via_binomial))
    throw std::logic_error("twisted Dedekind sum: the two evaluation routes disagree");
  return std::move(forms.via_bar);
}

namespace {

std::vector<std::pair<std::string, std::string>> pair_params(long h, long k, long p) {
  return {{"h", std::to_string(h)}, {"k", std::to_string(k)}, {"p", std::to_string(p)}};
}

Rational direct_limit_candidate(long h, long k, long m) {
  Rational acc(0);
  for (long j = 1; j < k; ++j) acc += make_rational(j, k) * bernoulli_poly(m, frac(make_rational(j * h, k)));
  return acc;
}

bool approaches(const std::vector<long>& distances, const std::vector<long>& caps) {
  // Convergence along the ladder: the agreement grows at every step, or is
  // already complete at the precision carried.
  for (std::size_t i = 1; i < distances.size(); ++i)
    if (distances[i] <= distances[i - 1] && distances[i] < caps[i]) return false;
  return distances.size() > 1;
}

}  // namespace

AuditReport reduction_audit(long h, long k, long m, long p, const std::vector<long>& ladder,
                            long extra_precision) {
  require(ladder.size() >= 2, "reduction_audit: the ladder needs at least two levels");
  require(std::is_sorted(ladder.begin(), ladder.end()) && ladder.front() >= 1,
          "reduction_audit: ladder must be increasing and >= 1");
  const CoprimePair pair(h, k);
  require_odd_prime(p);
  require(k % p == 0, "reduction_audit needs p | k");
  require(m >= 0, "m must be >= 0");

  const Rational direct = direct_limit_candidate(h, k, m);
  Integer km;
  mpz_pow_ui(km.get_mpz_t(), Integer(k).get_mpz_t(), static_cast<unsigned long>(m));
  const Rational scaled_apostol = Rational(km) * apostol_sum(pair, m + 1);

  const long vk = valuation(p, Integer(k));
  require(extra_precision >= 0, "extra precision must be >= 0");
  const long target = ladder.back() + 8 + (m + 1) * vk + extra_precision;
  std::vector<long> d_direct, d_scaled, caps;
  nlohmann::json steps = nlohmann::json::array();
  std::string lhs_last;
  for (long M : ladder) {
    const Rational q = Rational(1) + Rational(p_power(p, M));
    auto ctx = TwistedBernoulliContext::create(p, q, 0, std::max(m, 1L), target);
    const CycloElement s = twisted_dedekind_sum(TwistedDedekindParams::make(h, k, m, ctx));
    const PadicNumber& sv = s.base();
    const long dd = distance_valuation(sv, PadicNumber::from_rational(p, direct, ctx.working_precision()));
    const long dr = distance_valuation(sv, PadicNumber::from_rational(p, scaled_apostol, ctx.working_precision()));
    caps.push_back(sv.absolute_precision());
    d_direct.push_back(std::min(dd, caps.back()));
    d_scaled.push_back(std::min(dr, caps.back()));
    steps.push_back({{"M", M},
                     {"twisted_sum", to_json_value(s)},
                     {"distance_to_direct", d_direct.back()},
                     {"distance_to_scaled_apostol", d_scaled.back()}});
    lhs_last = to_compact_string(s);
  }
  const bool to_direct = approaches(d_direct, caps);
  const bool to_scaled = approaches(d_scaled, caps);

  AuditReport report;
  report.identity = kIdReduction;
  report.params = pair_params(h, k, p);
  report.params.emplace_back("m", std::to_string(m));
  report.lhs = lhs_last;
  report.rhs = {{"direct_limit", to_string(direct)}, {"scaled_apostol_value", to_string(scaled_apostol)}, {"ladder", steps}};
  report.match = to_scaled ? MatchKind::within_tolerance : MatchKind::mismatch;
  std::ostringstream det;
  det << "q = 1+p^M, w = 1; approaches sum_j (j/k) B_m({jh/k}): " << (to_direct ? "yes" : "no")
      << "; approaches k^m s(h,k,m+1): " << (to_scaled ? "yes" : "no");
  report.details = det.str();
  return report;
}

Rational hardy_integral_scale(HardyKind kind) {
  switch (kind) {
    case HardyKind::S2: return Rational(-1, 2);
    case HardyKind::S3: return Rational(1);
    case HardyKind::S5: return Rational(-2);
    case HardyKind::S: return Rational(-1);
  }
  return Rational(0);
}

PeriodicFn hardy_integrand(HardyKind kind, long h, long k) {
  return (kind == HardyKind::S2 || kind == HardyKind::S3) ? sawtooth_table(h, k) : sign_table(h, k);
}

namespace {

const char* hardy_identity_id(HardyKind kind) {
  switch (kind) {
    case HardyKind::S2: return kIdHardyS2;
    case HardyKind::S3: return kIdHardyS3;
    case HardyKind::S5: return kIdHardyS5;
    case HardyKind::S: return kIdHardyS;
  }
  return "";
}

MatchKind classify_branches(const Rational& lhs, const std::map<long, Rational>& branches, bool independent) {
  const bool all_equal_lhs =
      std::all_of(branches.begin(), branches.end(), [&](const auto& kv) { return kv.second == lhs; });
  if (all_equal_lhs) return MatchKind::exact;
  return independent ? MatchKind::mismatch : MatchKind::branch_dependent_mismatch;
}

nlohmann::json scaled_report_json(const FermionicLimitReport& rep, const Rational& scale,
                                  std::map<long, Rational>& scaled) {
  for (const auto& [r, v] : rep.branch_values) scaled.emplace(r, Rational(v * scale));
  nlohmann::json branches = nlohmann::json::object();
  for (const auto& [r, v] : scaled) branches[std::to_string(r)] = to_string(v);
  return {{"modulus", rep.modulus},
          {"block_sum", to_string(rep.block_sum)},
          {"scale", to_string(scale)},
          {"branches", branches},
          {"branch_independent", rep.branch_independent}};
}

}  // namespace

AuditReport audit_hardy_identity(HardyKind kind, const CoprimePair& pair, long p) {
  require_odd_prime(p);
  const Rational lhs = hardy_sum(kind, pair);
  const PeriodicFn f = hardy_integrand(kind, pair.h(), pair.k());
  const FermionicLimitReport rep = fermionic_periodic_closed(f, p);
  const Rational scale = hardy_integral_scale(kind);
  std::map<long, Rational> scaled;
  AuditReport report;
  report.identity = hardy_identity_id(kind);
  report.params = pair_params(pair.h(), pair.k(), p);
  report.lhs = to_string(lhs);
  report.rhs = scaled_report_json(rep, scale, scaled);
  report.match = classify_branches(lhs, scaled, rep.branch_independent);
  std::ostringstream det;
  det << to_string(kind) << " finite form vs " << to_string(scale) << " * fermionic integral over "
      << scaled.size() << " branch(es)";
  const auto hit = std::find_if(scaled.begin(), scaled.end(), [&](const auto& kv) { return kv.second == lhs; });
  if (report.match == MatchKind::branch_dependent_mismatch && hit != scaled.end())
    det << "; lhs equals the branch r = " << hit->first;
  report.details = det.str();
  return report;
}

AuditReport audit_sawtooth_series(const CoprimePair& pair, long p, long num_periods) {
  require_odd_prime(p);
  require(pair.k() % 2 == 1, "the sawtooth tangent series needs k odd (tangent poles otherwise)");
  require(std::gcd(p, 2 * pair.k()) == 1, "need gcd(p, 2k) = 1");
  const FermionicLimitReport rep = fermionic_periodic_closed(sawtooth_table(pair.h(), pair.k()), p);
  const TrigSeriesPartial series = trig_series_partial(HardyKind::S3, pair, num_periods);
  const Rational exact = hardy_sum(HardyKind::S3, pair);
  const double float_error = std::abs(series.value - exact.get_d());
  constexpr double kSeriesTolerance = 1e-6;

  std::map<long, Rational> branches;
  AuditReport report;
  report.identity = kIdSawtoothSeries;
  report.params = pair_params(pair.h(), pair.k(), p);
  report.params.emplace_back("periods", std::to_string(num_periods));
  report.lhs = to_string(rep.branch_values.begin()->second);
  report.rhs = scaled_report_json(rep, Rational(1), branches);
  report.rhs["series_float"] = format_double(series.value);
  report.rhs["series_last_block"] = format_double(series.last_block_magnitude);
  report.rhs["series_exact"] = to_string(exact);
  report.rhs["series_matches_exact"] = float_error < kSeriesTolerance;
  report.match = classify_branches(exact, branches, rep.branch_independent);
  std::ostringstream det;
  det << "fermionic branches vs (1/pi) sum tan(pi h n/k)/n; series vs finite S3: |diff| = " << format_double(float_error)
      << (float_error < kSeriesTolerance ? " (within 1e-6)" : " (exceeds 1e-6)");
  report.details = det.str();
  return report;
}

namespace {

struct GridTask {
  int identity_rank;
  long h, k, p, m;
};

}  // namespace

std::vector<AuditReport> run_audit_grid(long kmax, const std::vector<long>& primes, const AuditGridOptions& opts) {
  require(kmax >= 1, "grid kmax must be >= 1");
  for (long p : primes) require_odd_prime(p);
  std::vector<long> ps = primes;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  const HardyKind kinds[] = {HardyKind::S, HardyKind::S2, HardyKind::S3, HardyKind::S5};
  std::vector<GridTask> tasks;
  for (long k = 1; k <= kmax; ++k)
    for (long h = 1; h < 2 * k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      for (long p : ps) {
        for (int i = 0; i < 4; ++i) {
          const HardyKind kind = kinds[i];
          if (!hardy_admissible(kind, h, k)) continue;
          const long period = (kind == HardyKind::S2 || kind == HardyKind::S3) ? k : 4 * k;
          if (std::gcd(p, std::lcm(2L, period)) != 1) continue;
          tasks.push_back({i, h, k, p, 0});
        }
        if (k % 2 == 1 && std::gcd(p, 2 * k) == 1) tasks.push_back({4, h, k, p, 0});
        if (k % p == 0 && h < k)
          for (long m : opts.reduction_ms) tasks.push_back({5, h, k, p, m});
      }
    }
  std::sort(tasks.begin(), tasks.end(), [](const GridTask& a, const GridTask& b) {
    return std::tie(a.identity_rank, a.k, a.h, a.p, a.m) < std::tie(b.identity_rank, b.k, b.h, b.p, b.m);
  });

  std::vector<std::optional<AuditReport>> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const GridTask& t = tasks[i];
    try {
      if (t.identity_rank < 4)
        rows[i] = audit_hardy_identity(kinds[t.identity_rank], CoprimePair(t.h, t.k), t.p);
      else if (t.identity_rank == 4)
        rows[i] = audit_sawtooth_series(CoprimePair(t.h, t.k), t.p, opts.series_periods);
      else
        rows[i] = reduction_audit(t.h, t.k, t.m, t.p, opts.reduction_ladder, opts.extra_precision);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<AuditReport> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

}  // namespace hbsums
