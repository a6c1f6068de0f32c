#include "hbsums/verify.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "hbsums/classical_sums.hpp"
#include "hbsums/errors.hpp"
#include "hbsums/twisted_bernoulli.hpp"
#include "hbsums/volkenborn.hpp"

namespace hbsums {

namespace {

using Check = std::function<CheckResult()>;

CheckResult result(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok, std::move(detail)};
}

std::vector<Polynomial> test_polynomials() {
  std::vector<Polynomial> out;
  for (long n = 0; n <= 8; ++n) {
    Polynomial f{std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0))};
    f.coeffs.back() = 1;
    out.push_back(f);
  }
  out.push_back({{Rational(3, 2), Rational(-1), Rational(0), Rational(5, 7), Rational(2)}});
  out.push_back({{Rational(0), Rational(1, 3), Rational(-4, 9)}});
  return out;
}

// ---- exact-laws

CheckResult dedekind_reciprocity() {
  long count = 0;
  for (long h = 1; h <= 40; ++h)
    for (long k = 1; k <= 40; ++k) {
      if (std::gcd(h, k) != 1) continue;
      const Rational lhs = dedekind_sum(CoprimePair(h, k)) + dedekind_sum(CoprimePair(k, h));
      const Rational rhs = Rational(-1, 4) + make_rational(h * h + k * k + 1, 12 * h * k);
      if (lhs != rhs)
        return result("dedekind_reciprocity", false, "fails at (" + std::to_string(h) + "," + std::to_string(k) + ")");
      ++count;
    }
  return result("dedekind_reciprocity", true, std::to_string(count) + " coprime pairs with h,k <= 40");
}

CheckResult dedekind_value() {
  const Rational v = dedekind_sum(CoprimePair(1, 3));
  return result("dedekind_s_1_3", v == Rational(1, 18), "s(1,3) = " + to_string(v));
}

CheckResult apostol_first_order() {
  for (long k = 1; k <= 30; ++k)
    for (long h = 1; h < 2 * k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      const CoprimePair pr(h, k);
      if (apostol_sum(pr, 1) != dedekind_sum(pr))
        return result("apostol_n1_is_dedekind", false, "fails at (" + std::to_string(h) + "," + std::to_string(k) + ")");
    }
  return result("apostol_n1_is_dedekind", true, "s(h,k,1) = s(h,k) for k <= 30");
}

CheckResult bernoulli_difference() {
  const Rational xs[] = {Rational(0), Rational(1, 3), Rational(-5, 7), Rational(11, 4)};
  for (long n = 1; n <= 14; ++n)
    for (const auto& x : xs) {
      Rational xp(1);
      for (long i = 1; i < n; ++i) xp *= x;
      if (bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) != Rational(n) * xp)
        return result("bernoulli_difference", false, "fails at n = " + std::to_string(n));
    }
  return result("bernoulli_difference", true, "B_n(x+1) - B_n(x) = n x^(n-1), n <= 14");
}

CheckResult bernoulli_reflection() {
  const Rational xs[] = {Rational(1, 5), Rational(2, 3), Rational(-3, 8)};
  for (long n = 0; n <= 14; ++n)
    for (const auto& x : xs) {
      const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
      if (bernoulli_poly(n, Rational(1) - x) != sign * bernoulli_poly(n, x))
        return result("bernoulli_reflection", false, "fails at n = " + std::to_string(n));
    }
  return result("bernoulli_reflection", true, "B_n(1-x) = (-1)^n B_n(x), n <= 14");
}

// ---- functional-equations

CheckResult bosonic_shift() {
  for (const auto& f : test_polynomials())
    if (bosonic_shift_residual(f) != 0) return result("bosonic_shift", false, "nonzero residual");
  return result("bosonic_shift", true, "I_1(f(x+1)) = I_1(f) + f'(0) on 11 polynomials");
}

CheckResult fermionic_shift() {
  for (const auto& f : test_polynomials())
    if (fermionic_shift_residual(f) != 0) return result("fermionic_shift", false, "nonzero residual");
  return result("fermionic_shift", true, "I_-1(f(x+1)) + I_-1(f) = 2 f(0) on 11 polynomials");
}

CheckResult q_shift() {
  long worst = PadicNumber::kExactCap;
  for (long p : {3L, 5L})
    for (long N = 1; N <= 3; ++N) {
      const PadicNumber q = PadicNumber::from_rational(p, Rational(1) + Rational(p_power(p, 2)),
                                                       q_truncation_precision(12, N, 2));
      for (long n = 0; n <= 4; ++n) {
        Polynomial g{std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0))};
        g.coeffs.back() = 1;
        const long v = q_shift_residual(g, p, N, q).valuation();
        if (v < N - 2)
          return result("q_shift", false, "valuation " + std::to_string(v) + " < N - 2 at p = " + std::to_string(p));
        worst = std::min(worst, v - N);
      }
    }
  return result("q_shift", true, "v(residual) - N >= " + std::to_string(worst) + " for p in {3,5}, N <= 3");
}

CheckResult twisted_shift(long w_level) {
  const long p = 5, N = 3;
  auto ctx = TwistedBernoulliContext::create(p, Rational(26), w_level, 3, 10);
  const auto lhs = shift_identity_series(ctx, N);
  const PadicNumber qm1 = ctx.q() - PadicNumber::one(p, ctx.working_precision());
  const PadicNumber ratio = qm1 / ctx.logq();
  // log_p w = 0 for a p-power root of unity.
  const CycloElement c0 = ctx.embed(qm1 + ratio * ctx.logq());
  const CycloElement c1 = ctx.embed(ratio);
  long worst = PadicNumber::kExactCap;
  for (long n = 0; n <= ctx.order(); ++n) {
    const CycloElement expected = n == 0 ? c0 : (n == 1 ? c1 : ctx.constant(Rational(0)));
    worst = std::min(worst, distance_valuation(lhs[static_cast<std::size_t>(n)], expected));
  }
  const std::string name = "twisted_shift_w_level_" + std::to_string(w_level);
  return result(name, worst >= N - 2, "min valuation of the coefficient residuals " + std::to_string(worst));
}

// ---- series-identities

CheckResult sine_tangent() {
  const long T = 13;
  const auto lhs = sine_fermionic_formal(T);
  const auto tan = tan_series(T);
  for (long j = 0; j <= T; ++j)
    if (lhs[static_cast<std::size_t>(j)] != -tan[static_cast<std::size_t>(j)])
      return result("sine_fermionic_tangent", false, "coefficient " + std::to_string(j) + " differs");
  return result("sine_fermionic_tangent", true, "termwise integral of sin(bx) = -tan(b/2) through b^13");
}

CheckResult hardy_series() {
  double worst = 0;
  long count = 0;
  for (HardyKind kind : {HardyKind::S, HardyKind::S2, HardyKind::S3, HardyKind::S5})
    for (long k = 1; k <= 10; ++k)
      for (long h = 1; h < 2 * k; ++h) {
        if (std::gcd(h, k) != 1 || !hardy_admissible(kind, h, k)) continue;
        const CoprimePair pr(h, k);
        worst = std::max(worst, std::abs(trig_series_partial(kind, pr, 2000).value - hardy_sum(kind, pr).get_d()));
        ++count;
      }
  return result("hardy_tangent_series", worst < 1e-6,
                std::to_string(count) + " admissible cases, k <= 10, max error below 1e-6: " +
                    (worst < 1e-6 ? "yes" : "no"));
}

CheckResult defining_relation(long w_level) {
  auto ctx = TwistedBernoulliContext::create(5, Rational(26), w_level, 6, 10);
  const GeneratingSeries F = gen_function_series(ctx);
  const auto residual = defining_relation_residual(ctx, F);
  for (long n = 0; n <= ctx.order(); ++n)
    if (!residual[static_cast<std::size_t>(n)].is_zero())
      return result("defining_relation_w_level_" + std::to_string(w_level), false,
                    "coefficient " + std::to_string(n) + " is nonzero");
  return result("defining_relation_w_level_" + std::to_string(w_level), true,
                "vanishes to working precision through t^6, p = 5, q = 26");
}

// ---- oracle-agreement

CheckResult riemann_agreement() {
  long count = 0;
  for (long p : {3L, 5L})
    for (long level : {0L, 1L}) {
      const Rational q = Rational(1) + Rational(p_power(p, 2));
      auto ctx = TwistedBernoulliContext::create(p, q, level, 4, 8);
      const auto b = twisted_bernoulli_numbers(ctx);
      for (long n = 0; n <= 4; ++n)
        for (long N = 1; N <= 3; ++N) {
          const long d = distance_valuation(riemann_oracle(ctx, n, N), b[static_cast<std::size_t>(n)]);
          if (d < N - riemann_loss(ctx, n))
            return result("riemann_oracle", false,
                          "n = " + std::to_string(n) + ", N = " + std::to_string(N) + ", p = " + std::to_string(p));
          ++count;
        }
    }
  return result("riemann_oracle", true, std::to_string(count) + " (p, w, n, N) cases within the loss ledger");
}

CheckResult b0_closed_form() {
  for (long p : {3L, 5L, 7L}) {
    const Rational q = Rational(1) + Rational(p);
    auto ctx = TwistedBernoulliContext::create(p, q, 0, 0, 10);
    const CycloElement b0 = twisted_bernoulli_number(ctx, 0);
    if (!agrees(b0, ctx.constant(Rational(2) / (q + 1))))
      return result("b0_closed_form", false, "p = " + std::to_string(p));
  }
  return result("b0_closed_form", true, "b*_0 = 2/(q+1) for q = 1+p, p in {3,5,7}");
}

CheckResult classical_limit() {
  const long p = 5, M = 4;
  auto ctx = TwistedBernoulliContext::create(p, Rational(1) + Rational(p_power(p, M)), 0, 6, M + 4);
  const auto b = twisted_bernoulli_numbers(ctx);
  for (long n = 0; n <= 6; ++n) {
    const PadicNumber classical = PadicNumber::from_rational(p, bernoulli_number(n), ctx.working_precision());
    if (distance_valuation(b[static_cast<std::size_t>(n)].base(), classical) < M - classical_limit_loss(n))
      return result("classical_limit", false, "n = " + std::to_string(n));
  }
  return result("classical_limit", true, "v(b*_n(1+5^4) - B_n) >= 3 for n <= 6");
}

const std::vector<std::pair<std::string, std::vector<Check>>>& suites() {
  static const std::vector<std::pair<std::string, std::vector<Check>>> table = {
      {"exact-laws", {dedekind_value, dedekind_reciprocity, apostol_first_order, bernoulli_difference,
                      bernoulli_reflection}},
      {"functional-equations",
       {bosonic_shift, fermionic_shift, q_shift, [] { return twisted_shift(0); }, [] { return twisted_shift(1); }}},
      {"series-identities",
       {sine_tangent, hardy_series, [] { return defining_relation(0); }, [] { return defining_relation(1); }}},
      {"oracle-agreement", {riemann_agreement, b0_closed_form, classical_limit}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, checks] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  for (const auto& [suite, checks] : suites()) {
    if (suite != name) continue;
    std::vector<CheckResult> out;
    for (const auto& c : checks) out.push_back(c());
    return out;
  }
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw PreconditionError("unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace hbsums
