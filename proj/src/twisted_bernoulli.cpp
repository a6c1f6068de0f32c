#include "hbsums/twisted_bernoulli.hpp"

#include <algorithm>

#include "hbsums/errors.hpp"
#include "hbsums/kernels.hpp"

namespace hbsums {

TwistedBernoulliContext TwistedBernoulliContext::create(long p, const Rational& q, long w_level, long T,
                                                        long target_precision, const CycloOptions& opts) {
  require_odd_prime(p);
  require(T >= 0, "series order T must be >= 0");
  require(target_precision >= 1, "target precision must be >= 1");
  require(w_level >= 0 && w_level <= opts.max_level,
          "w level " + std::to_string(w_level) + " is outside the enabled range 0.." + std::to_string(opts.max_level));
  require(q != 1, "q = 1 is a pole of the generating function");
  const long vq = valuation(p, Rational(q - 1));
  require(vq >= 1, "q must satisfy v_p(q - 1) >= 1");
  const long loss = (w_level == 0) ? vq : 2;
  const long working = target_precision + (T + 1) * loss + vq + valuation(p, factorial(std::max(T, 1L))) + 4;
  PadicNumber qp = PadicNumber::from_rational(p, q, working);
  CycloElement w = (w_level == 0) ? CycloElement::constant(p, 0, Rational(1), working, opts)
                                  : CycloElement::zeta(p, w_level, working, opts);
  // w^(p^level) = 1
  long order = 1;
  for (long i = 0; i < w_level; ++i) order *= p;
  require(agrees(w.pow(order), unit_like(w)), "w is not a root of unity of the requested order");
  PadicNumber logq = padic_log(qp);
  return TwistedBernoulliContext(p, w_level, T, target_precision, working, loss, q, std::move(qp), std::move(w),
                                 std::move(logq), opts);
}

CycloElement TwistedBernoulliContext::constant(const Rational& x) const {
  if (x == 0) return embed(PadicNumber::exact_zero(p_));
  return embed(PadicNumber::from_rational(p_, x, working_));
}

namespace {

CycloElement twist_base(const TwistedBernoulliContext& ctx) { return ctx.w() * (ctx.q() * ctx.q()); }

PadicNumber q_minus_one(const TwistedBernoulliContext& ctx) {
  return ctx.q() - PadicNumber::one(ctx.prime(), ctx.working_precision());
}

// w q^2 e^t - 1 through order T.
std::vector<CycloElement> denominator_series(const TwistedBernoulliContext& ctx) {
  const CycloElement u = twist_base(ctx);
  std::vector<CycloElement> d{u - unit_like(u)};
  for (long j = 1; j <= ctx.order(); ++j) d.push_back(u.scaled(make_rational(Integer(1), factorial(j))));
  return d;
}

}  // namespace

GeneratingSeries gen_function_series(const TwistedBernoulliContext& ctx) {
  const std::vector<CycloElement> d = denominator_series(ctx);
  const CycloElement inv = d.front().inverse();
  const PadicNumber qm1 = q_minus_one(ctx);
  // Right side: ((q-1)/log q)(2 log q + t) = 2(q-1) + ((q-1)/log q) t.
  const CycloElement r0 = ctx.embed(qm1.scaled(Rational(2)));
  const CycloElement r1 = ctx.embed(qm1 / ctx.logq());

  std::vector<CycloElement> f{inv * r0};
  std::vector<long> ledger{f.front().absolute_precision()};
  for (long n = 1; n <= ctx.order(); ++n) {
    CycloElement acc = (n == 1) ? r1 : ctx.constant(Rational(0));
    for (long j = 1; j <= n; ++j) acc = acc - d[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(n - j)];
    f.push_back(inv * acc);
    ledger.push_back(f.back().absolute_precision());
  }
  for (long n = 0; n <= ctx.order(); ++n) {
    const long certified = ledger[static_cast<std::size_t>(n)] + valuation(ctx.prime(), factorial(std::max(n, 1L)));
    if (certified < ctx.target_precision()) {
      const long short_by = ctx.target_precision() - certified;
      throw PrecisionError("precision exhausted at coefficient " + std::to_string(n) + ": certified " +
                               std::to_string(certified) + " digits, target " +
                               std::to_string(ctx.target_precision()) + "; need working precision >= " +
                               std::to_string(ctx.working_precision() + short_by),
                           ctx.working_precision() + short_by);
    }
  }
  return GeneratingSeries{TruncatedSeries<CycloElement>(std::move(f)), std::move(ledger)};
}

std::vector<CycloElement> twisted_bernoulli_numbers(const TwistedBernoulliContext& ctx) {
  const GeneratingSeries F = gen_function_series(ctx);
  std::vector<CycloElement> out;
  for (long n = 0; n <= ctx.order(); ++n)
    out.push_back(F.coeffs[static_cast<std::size_t>(n)].scaled(Rational(factorial(n))));
  return out;
}

CycloElement twisted_bernoulli_number(const TwistedBernoulliContext& ctx, long n) {
  require(n >= 0 && n <= ctx.order(), "n must lie in 0..T (T = " + std::to_string(ctx.order()) + ")");
  return twisted_bernoulli_numbers(ctx)[static_cast<std::size_t>(n)];
}

CycloElement twisted_bernoulli_poly(const TwistedBernoulliContext& ctx, long n, const Rational& z) {
  require(n >= 0 && n <= ctx.order(), "n must lie in 0..T (T = " + std::to_string(ctx.order()) + ")");
  const std::vector<CycloElement> b = twisted_bernoulli_numbers(ctx);
  CycloElement acc = b[static_cast<std::size_t>(n)];
  Rational zp(1);
  for (long k = n - 1; k >= 0; --k) {
    zp *= z;
    if (zp == 0) break;
    acc += b[static_cast<std::size_t>(k)].scaled(Rational(binomial(n, k)) * zp);
  }
  return acc;
}

CycloElement twisted_bernoulli_poly_series(const TwistedBernoulliContext& ctx, long n, const Rational& z) {
  require(n >= 0 && n <= ctx.order(), "n must lie in 0..T (T = " + std::to_string(ctx.order()) + ")");
  const GeneratingSeries F = gen_function_series(ctx);
  std::vector<CycloElement> ez;
  Rational zj(1);
  for (long j = 0; j <= n; ++j) {
    ez.push_back(ctx.constant(zj / Rational(factorial(j))));
    zj *= z;
  }
  const TruncatedSeries<CycloElement> product = F.coeffs.truncated(static_cast<std::size_t>(n)) *
                                                TruncatedSeries<CycloElement>(std::move(ez));
  return product[static_cast<std::size_t>(n)].scaled(Rational(factorial(n)));
}

CycloElement twisted_bernoulli_bar(const TwistedBernoulliContext& ctx, long n, const Rational& y) {
  return twisted_bernoulli_poly(ctx, n, frac(y));
}

CycloElement riemann_oracle(const TwistedBernoulliContext& ctx, long n, long N, const TruncationLimits& limits) {
  require(n >= 0, "n must be >= 0");
  const TwistedMonomial integrand{n, ctx.q(), ctx.w()};
  return volkenborn_q_trunc(integrand, ctx.prime(), N, ctx.q(), limits);
}

long riemann_loss(const TwistedBernoulliContext& ctx, long n) {
  // Expand x -> w^x q^(2x) x^n in the Mahler basis C(x,k). The k-th Riemann
  // sum misses its limit by a term of valuation N - v_p(k+1), and the k-th
  // coefficient has valuation >= (k-n)^+ nu, where nu = v_p(q-1) for w = 1
  // and min(1/phi, v_p(q-1)) for a ramified w.
  const long p = ctx.prime();
  const long vq = valuation(p, Rational(ctx.q_exact() - 1));
  const long phi = cyclo_degree(p, ctx.w_level());
  // Work in units of 1/phi to keep the bound in integers.
  const long nu = (ctx.w_level() == 0) ? vq * phi : std::min(1L, vq * phi);
  long loss = 0;
  long v = 0;
  for (long pk = p; pk - 1 <= n + 2 * phi * (v + 1); pk *= p) {
    ++v;
    const long k = pk - 1;  // smallest k with v_p(k+1) = v
    const long scaled = v * phi - std::max(0L, k - n) * nu;
    loss = std::max(loss, (scaled + phi - 1) / phi);
  }
  return loss;
}

long classical_limit_loss(long) { return 1; }

TruncatedSeries<CycloElement> defining_relation_residual(const TwistedBernoulliContext& ctx,
                                                         const GeneratingSeries& F) {
  const long T = static_cast<long>(F.coeffs.order());
  std::vector<CycloElement> d = denominator_series(ctx);
  const PadicNumber ratio = q_minus_one(ctx) / ctx.logq();
  std::vector<CycloElement> r{ctx.embed(ratio * ctx.logq().scaled(Rational(2)))};
  if (T >= 1) r.push_back(ctx.embed(ratio));
  for (long n = 2; n <= T; ++n) r.push_back(ctx.constant(Rational(0)));
  return TruncatedSeries<CycloElement>(std::move(d)) * F.coeffs - TruncatedSeries<CycloElement>(std::move(r));
}

TruncatedSeries<CycloElement> shift_identity_series(const TwistedBernoulliContext& ctx, long N,
                                                    const TruncationLimits& limits) {
  std::vector<CycloElement> r;
  for (long n = 0; n <= ctx.order(); ++n)
    r.push_back(riemann_oracle(ctx, n, N, limits).scaled(make_rational(Integer(1), factorial(n))));
  return TruncatedSeries<CycloElement>(denominator_series(ctx)) * TruncatedSeries<CycloElement>(std::move(r));
}

}  // namespace hbsums
