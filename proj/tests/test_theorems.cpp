#include <doctest.h>

#include <omp.h>

#include <numeric>
#include <set>
#include <tuple>

#include "hbsums/errors.hpp"
#include "hbsums/serialize.hpp"
#include "hbsums/theorems.hpp"

using namespace hbsums;

namespace {

Rational brute_fermionic(const PeriodicFn& f, long length) {
  Rational s(0);
  for (long x = 0; x < length; ++x) s += (x % 2 == 0 ? f(x) : -f(x));
  return s;
}

}  // namespace

TEST_CASE("Hardy audits: classification of two reference cases") {
  const AuditReport s2 = audit_hardy_identity(HardyKind::S2, CoprimePair(1, 2), 5);
  CHECK(s2.match == MatchKind::exact);
  CHECK(s2.lhs == "0/1");

  const AuditReport s3 = audit_hardy_identity(HardyKind::S3, CoprimePair(1, 3), 5);
  CHECK(s3.match == MatchKind::branch_dependent_mismatch);
  CHECK(s3.lhs == "1/3");
  // Branch values by brute force: p^N = 5, 25 (mod 6) -> residues 5, 1.
  const PeriodicFn f = sawtooth_table(1, 3);
  const Rational at5 = brute_fermionic(f, 5);     // r = 5
  const Rational at25 = brute_fermionic(f, 25);   // r = 1
  CHECK(at5 == Rational(1, 6));
  CHECK(at25 == 0);
  CHECK(s3.rhs["branches"]["5"] == to_string(at5));
  CHECK(s3.rhs["branches"]["1"] == to_string(at25));
  CHECK_THROWS_AS(audit_hardy_identity(HardyKind::S2, CoprimePair(2, 3), 5), PreconditionError);
}

TEST_CASE("sawtooth tangent-series audit") {
  const AuditReport r = audit_sawtooth_series(CoprimePair(2, 5), 3, 10000);
  CHECK(r.identity == kIdSawtoothSeries);
  CHECK(r.rhs["series_matches_exact"] == true);
  CHECK_THROWS_AS(audit_sawtooth_series(CoprimePair(1, 4), 3, 100), PreconditionError);
  CHECK_THROWS_AS(audit_sawtooth_series(CoprimePair(1, 3), 3, 100), PreconditionError);
}

TEST_CASE("twisted Dedekind sums: both forms agree") {
  for (long level : {0L, 1L}) {
    auto ctx = TwistedBernoulliContext::create(3, Rational(10), level, 3, 10);
    for (long h : {1L, 5L, 7L, 11L})
      for (long m = 0; m <= 3; ++m) {
        const auto forms = twisted_dedekind_forms(TwistedDedekindParams::make(h, 6, m, ctx));
        CHECK(agrees(forms.via_bar, forms.via_binomial));
      }
  }
  auto ctx = TwistedBernoulliContext::create(3, Rational(10), 0, 3, 10);
  CHECK_THROWS_AS(TwistedDedekindParams::make(1, 5, 1, ctx), PreconditionError);  // 3 does not divide 5
  CHECK_THROWS_AS(TwistedDedekindParams::make(1, 6, 4, ctx), PreconditionError);  // m > T
  CHECK_THROWS_AS(TwistedDedekindParams::make(2, 6, 1, ctx), PreconditionError);  // gcd
}

TEST_CASE("reduction audit converges to the direct classical sum") {
  for (long m = 0; m <= 2; ++m) {
    const AuditReport r = reduction_audit(1, 5, m, 5, {2, 4, 6});
    Rational direct(0);
    for (long j = 1; j < 5; ++j) direct += make_rational(j, 5) * bernoulli_poly(m, frac(make_rational(j, 5)));
    CHECK(r.rhs["direct_limit"] == to_string(direct));
    long last = -1000;
    for (const auto& step : r.rhs["ladder"]) {
      CHECK(step["distance_to_direct"].get<long>() > last);
      last = step["distance_to_direct"].get<long>();
    }
    CHECK(r.details.find("approaches sum_j (j/k) B_m({jh/k}): yes") != std::string::npos);
  }
}

TEST_CASE("audit grid covers every admissible tuple, in sorted order") {
  const long kmax = 6;
  const std::vector<long> primes{5, 3};
  const auto rows = run_audit_grid(kmax, primes);
  std::set<std::tuple<std::string, long, long, long, long>> seen;
  for (const auto& r : rows) {
    long h = 0, k = 0, p = 0, m = -1;
    for (const auto& [key, value] : r.params) {
      if (key == "h") h = std::stol(value);
      if (key == "k") k = std::stol(value);
      if (key == "p") p = std::stol(value);
      if (key == "m") m = std::stol(value);
    }
    CHECK(seen.insert({r.identity, h, k, p, m}).second);
  }
  long expected = 0;
  for (long k = 1; k <= kmax; ++k)
    for (long h = 1; h < 2 * k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      for (long p : {3L, 5L}) {
        // S: h+k odd; S2: h odd, k even; S3: k odd; S5: h, k odd. p must not divide 2k (or 4k).
        const bool coprime = k % p != 0;
        expected += coprime * (((h + k) % 2 == 1) + (h % 2 == 1 && k % 2 == 0) + (k % 2 == 1) +
                               (h % 2 == 1 && k % 2 == 1));
        expected += coprime && k % 2 == 1;    // sawtooth tangent series
        if (!coprime && h < k) expected += 3;  // reduction audits, m = 0, 1, 2
      }
    }
  CHECK(static_cast<long>(rows.size()) == expected);
}

TEST_CASE("audit grid is independent of thread count and precision") {
  AuditGridOptions opts;
  opts.series_periods = 2000;
  omp_set_num_threads(1);
  const auto a = run_audit_grid(5, {3, 5}, opts);
  omp_set_num_threads(4);
  const auto b = run_audit_grid(5, {3, 5}, opts);
  omp_set_num_threads(1);
  opts.extra_precision = 10;
  const auto c = run_audit_grid(5, {3, 5}, opts);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(to_json_value(a[i]).dump() == to_json_value(b[i]).dump());
    CHECK(a[i].match == c[i].match);
  }
}

TEST_CASE("audit serialization") {
  const AuditReport s3 = audit_hardy_identity(HardyKind::S3, CoprimePair(1, 3), 5);
  const nlohmann::json j = to_json_value(s3);
  CHECK(j["identity"] == "hardy_S3_fermionic");
  CHECK(j["params"]["k"] == "3");
  CHECK(j["match"] == "branch_dependent_mismatch");
  const std::string csv = audit_csv({s3});
  CHECK(csv ==
        "identity,params,lhs,match,branch,branch_value,details\n"
        "hardy_S3_fermionic,h=1;k=3;p=5,1/3,branch_dependent_mismatch,1,0/1,S3 finite form vs 1/1 * fermionic "
        "integral over 2 branch(es)\n"
        "hardy_S3_fermionic,h=1;k=3;p=5,1/3,branch_dependent_mismatch,5,1/6,S3 finite form vs 1/1 * fermionic "
        "integral over 2 branch(es)\n");
}
