#include "hbsums/volkenborn.hpp"

#include <numeric>

#include "hbsums/errors.hpp"
#include "hbsums/kernels.hpp"

namespace hbsums {

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted() const {
  // (x+1)^n = sum_k C(n,k) x^k
  std::vector<Rational> out(coeffs.size(), Rational(0));
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      out[k] += coeffs[n] * Rational(binomial(static_cast<long>(n), static_cast<long>(k)));
  return Polynomial{std::move(out)};
}

PeriodicFn PeriodicFn::from_values(std::vector<Rational> values) {
  require(!values.empty(), "periodic function needs at least one value");
  const long m = static_cast<long>(values.size());
  return PeriodicFn{m, std::move(values)};
}

Rational PeriodicFn::operator()(long x) const {
  const long r = ((x % period) + period) % period;
  return values[static_cast<std::size_t>(r)];
}

PeriodicFn sawtooth_table(long h, long k) {
  require(k >= 1, "sawtooth_table: k must be >= 1");
  std::vector<Rational> v;
  for (long x = 0; x < k; ++x) v.push_back(sawtooth(make_rational(h * x, k)));
  return PeriodicFn::from_values(std::move(v));
}

PeriodicFn sign_table(long h, long k) {
  require(k >= 1, "sign_table: k must be >= 1");
  std::vector<Rational> v;
  for (long x = 0; x < 4 * k; ++x) {
    const Integer fl = floor_g(make_rational(h * x, 2 * k));
    v.push_back(Rational(mpz_odd_p(fl.get_mpz_t()) ? -1 : 1));
  }
  return PeriodicFn::from_values(std::move(v));
}

namespace {

long checked_power(long p, long N, const TruncationLimits& limits) {
  require_odd_prime(p);
  require(N >= 1, "truncation level N must be >= 1");
  long L = 1;
  for (long i = 0; i < N; ++i) {
    require(L <= limits.max_summands / p, "p^N = " + std::to_string(p) + "^" + std::to_string(N) +
                                              " exceeds the truncation bound of " +
                                              std::to_string(limits.max_summands) + " summands");
    L *= p;
  }
  return L;
}

}  // namespace

Rational fermionic_trunc(const IntegrandSpec& f, long p, long N, const TruncationLimits& limits) {
  const long L = checked_power(p, N, limits);
  if (const auto* poly = std::get_if<Polynomial>(&f)) {
    if (poly->coeffs.empty()) return Rational(0);
    const auto sums = kernels::alternating_power_sums_omp(L, static_cast<int>(poly->degree()));
    Rational acc(0);
    for (std::size_t j = 0; j < sums.size(); ++j) acc += poly->coeffs[j] * Rational(sums[j]);
    return acc;
  }
  if (const auto* per = std::get_if<PeriodicFn>(&f)) {
    Integer den(1);
    for (const auto& v : per->values) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> table;
    for (const auto& v : per->values) table.push_back(Integer(v * Rational(den)));
    return make_rational(kernels::alternating_periodic_sum_omp(table, L), den);
  }
  throw PreconditionError("fermionic_trunc: integrand must be a polynomial or a periodic function");
}

FermionicLimitReport fermionic_periodic_closed(const PeriodicFn& f, long p) {
  require_odd_prime(p);
  const long M = std::lcm(2L, f.period);
  require(std::gcd(p, M) == 1, "fermionic_periodic_closed: gcd(p, lcm(2, period)) must be 1");
  std::vector<Rational> prefix(static_cast<std::size_t>(M + 1), Rational(0));
  for (long x = 0; x < M; ++x) {
    const Rational g = (x % 2 == 0) ? f(x) : Rational(-f(x));
    prefix[static_cast<std::size_t>(x + 1)] = prefix[static_cast<std::size_t>(x)] + g;
  }
  FermionicLimitReport report{M, prefix.back(), {}, true};
  const long d = mult_order(p, M);
  long r = 1;
  for (long a = 1; a <= d; ++a) {
    r = (r * p) % M;
    report.branch_values.emplace(
        r, Rational(prefix[static_cast<std::size_t>(r)] - Rational(r) * report.block_sum / Rational(M)));
  }
  const Rational& first = report.branch_values.begin()->second;
  for (const auto& [res, value] : report.branch_values)
    if (value != first) report.branch_independent = false;
  return report;
}

const Rational& branch_value(const FermionicLimitReport& report, long r) {
  const auto it = report.branch_values.find(((r % report.modulus) + report.modulus) % report.modulus);
  require(it != report.branch_values.end(), "residue " + std::to_string(r) + " is not on the orbit of p");
  return it->second;
}

Rational fermionic_poly(const Polynomial& f) {
  const auto e = euler_numbers(std::max(0L, f.degree()));
  Rational acc(0);
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) acc += f.coeffs[n] * e[n];
  return acc;
}

Rational volkenborn_poly(const Polynomial& f) {
  Rational acc(0);
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) acc += f.coeffs[n] * bernoulli_number(static_cast<long>(n));
  return acc;
}

long q_truncation_precision(long target, long N, long v_q_minus_1) { return target + N + 4 + v_q_minus_1; }

namespace {

void require_one_unit(const PadicNumber& q) {
  require(!q.is_zero() && q.valuation() == 0 &&
              (q - PadicNumber::one(q.prime(), q.absolute_precision())).valuation() >= 1,
          "q must satisfy v_p(q - 1) >= 1");
  require(!(q - PadicNumber::one(q.prime(), q.absolute_precision())).is_zero(),
          "q is indistinguishable from 1 at its precision");
}

}  // namespace

CycloElement volkenborn_q_trunc(const IntegrandSpec& f, long p, long N, const PadicNumber& q,
                                const TruncationLimits& limits) {
  const long L = checked_power(p, N, limits);
  require(q.prime() == p, "q has the wrong prime");
  require_one_unit(q);
  const PadicNumber denom = qnum(L, q);
  if (const auto* poly = std::get_if<Polynomial>(&f)) {
    const CycloElement qe = CycloElement::embed(q, 0);
    CycloElement acc = qe.scaled(Rational(0));
    for (std::size_t n = 0; n < poly->coeffs.size(); ++n) {
      if (poly->coeffs[n] == 0) continue;
      acc += kernels::twisted_moment_omp(qe, static_cast<long>(n), L).scaled(poly->coeffs[n]);
    }
    return CycloElement::embed(acc.base() / denom, 0);
  }
  if (const auto* per = std::get_if<PeriodicFn>(&f)) {
    PadicNumber acc = PadicNumber::exact_zero(p);
    PadicNumber qx = PadicNumber::one(p, q.precision());
    for (long x = 0; x < L; ++x) {
      acc += qx.scaled((*per)(x));
      qx *= q;
    }
    return CycloElement::embed(acc / denom, 0);
  }
  if (const auto* tw = std::get_if<TwistedMonomial>(&f)) {
    require(agrees(tw->q, q), "q does not match the twisted integrand's q");
    const CycloElement u = tw->w * (tw->q * tw->q);
    const CycloElement sum = kernels::twisted_moment_omp(u, tw->n, L);
    return sum * (PadicNumber::one(p, denom.precision()) / denom);
  }
  throw PreconditionError("volkenborn_q_trunc: sine integrands have no q-truncation");
}

TruncatedSeries<Rational> sine_fermionic_formal(long T) {
  require(T >= 1, "sine_fermionic_formal: T must be >= 1");
  const auto e = euler_numbers(T);
  std::vector<Rational> c(static_cast<std::size_t>(T + 1), Rational(0));
  for (long j = 1; j <= T; j += 2) {
    const int sign = ((j - 1) / 2 % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)] * sign / Rational(factorial(j));
  }
  return TruncatedSeries<Rational>(std::move(c));
}

Rational bosonic_shift_residual(const Polynomial& f) {
  return volkenborn_poly(f.shifted()) - volkenborn_poly(f) - f.derivative_at_zero();
}

Rational fermionic_shift_residual(const Polynomial& f) {
  return fermionic_poly(f.shifted()) + fermionic_poly(f) - 2 * f.value_at_zero();
}

PadicNumber q_shift_residual(const Polynomial& g, long p, long N, const PadicNumber& q,
                             const TruncationLimits& limits) {
  const PadicNumber i_shift = volkenborn_q_trunc(g.shifted(), p, N, q, limits).base();
  const PadicNumber i_plain = volkenborn_q_trunc(g, p, N, q, limits).base();
  const long A = q.absolute_precision();
  const PadicNumber q_minus_1 = q - PadicNumber::one(p, A);
  PadicNumber residual = q * i_shift - i_plain;
  if (g.value_at_zero() != 0) residual -= q_minus_1.scaled(g.value_at_zero());
  if (g.derivative_at_zero() != 0) residual -= (q_minus_1 / padic_log(q)).scaled(g.derivative_at_zero());
  return residual;
}

}  // namespace hbsums
