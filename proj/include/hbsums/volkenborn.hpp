#pragma once

#include <map>
#include <variant>
#include <vector>

#include "hbsums/cyclo.hpp"
#include "hbsums/exactnum.hpp"
#include "hbsums/padic.hpp"
#include "hbsums/series.hpp"

namespace hbsums {

/// c_0 + c_1 x + ... + c_d x^d with rational coefficients.
struct Polynomial {
  std::vector<Rational> coeffs;

  Rational operator()(const Rational& x) const;
  /// x -> f(x + 1).
  Polynomial shifted() const;
  Rational derivative_at_zero() const { return coeffs.size() > 1 ? coeffs[1] : Rational(0); }
  Rational value_at_zero() const { return coeffs.empty() ? Rational(0) : coeffs[0]; }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

/// f : Z -> Q with f(x) = values[x mod period].
struct PeriodicFn {
  long period;
  std::vector<Rational> values;

  static PeriodicFn from_values(std::vector<Rational> values);
  Rational operator()(long x) const;
};

/// x -> ((h x / k)); period k.
PeriodicFn sawtooth_table(long h, long k);
/// x -> (-1)^[h x / 2k]_G; period 4k.
PeriodicFn sign_table(long h, long k);

/// x -> w^x q^x x^n, integrated against mu_q (so the summand is w^x q^(2x) x^n).
struct TwistedMonomial {
  long n;
  PadicNumber q;
  CycloElement w;
};

/// x -> sin(b x) as a formal series in b through order T.
struct SineFormal {
  long order;
};

using IntegrandSpec = std::variant<Polynomial, PeriodicFn, TwistedMonomial, SineFormal>;

struct FermionicLimitReport {
  long modulus;                          // M = lcm(2, period)
  Rational block_sum;                    // B = sum_{x<M} (-1)^x f(x)
  std::map<long, Rational> branch_values;  // r = p^a mod M -> P(r) - r B / M
  bool branch_independent;
};

struct TruncationLimits {
  long max_summands = 100'000'000;
};

/// sum_{x=0}^{p^N - 1} (-1)^x f(x) for Polynomial or Periodic f.
Rational fermionic_trunc(const IntegrandSpec& f, long p, long N, const TruncationLimits& limits = {});

/// Limits of fermionic_trunc(f, p, N) along each residue class of N modulo
/// the multiplicative order of p mod M.
FermionicLimitReport fermionic_periodic_closed(const PeriodicFn& f, long p);

/// Branch value reached along the N with p^N = r (mod M).
const Rational& branch_value(const FermionicLimitReport& report, long r);

/// Fermionic integral of a polynomial: sum c_n e_n (Euler-type numbers).
Rational fermionic_poly(const Polynomial& f);
/// Volkenborn (bosonic) integral of a polynomial: sum c_n B_n.
Rational volkenborn_poly(const Polynomial& f);

/// (1/[p^N:q]) sum_{x<p^N} f(x) q^x. Result is level 0 unless f is a
/// TwistedMonomial. For TwistedMonomial, q must agree with the integrand's q.
CycloElement volkenborn_q_trunc(const IntegrandSpec& f, long p, long N, const PadicNumber& q,
                                const TruncationLimits& limits = {});

/// Precision at which to build q so that a q-truncation at level N is
/// certified to `target` digits: target + N + 4 on top of v_p(q - 1).
long q_truncation_precision(long target, long N, long v_q_minus_1);

/// Termwise fermionic integral of sin(b x): sum_{j odd} (-1)^((j-1)/2) e_j b^j / j!.
TruncatedSeries<Rational> sine_fermionic_formal(long T);

// Residuals of the functional equations; each is zero when the identity holds.
/// I_1(f(x+1)) - I_1(f) - f'(0).
Rational bosonic_shift_residual(const Polynomial& f);
/// I_{-1}(f(x+1)) + I_{-1}(f) - 2 f(0).
Rational fermionic_shift_residual(const Polynomial& f);
/// q I_q(g_1) - I_q(g) - (q-1) g(0) - ((q-1)/log q) g'(0), with I_q truncated at N.
PadicNumber q_shift_residual(const Polynomial& g, long p, long N, const PadicNumber& q,
                             const TruncationLimits& limits = {});

}  // namespace hbsums
