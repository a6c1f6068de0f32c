#pragma once

#include <vector>

#include "hbsums/cyclo.hpp"
#include "hbsums/padic.hpp"
#include "hbsums/series.hpp"
#include "hbsums/volkenborn.hpp"

namespace hbsums {

/// Parameters of the twisted q-Bernoulli generating function
///   F(t) = (q-1)/log q * (log q^2 + t) / (w q^2 e^t - 1).
///
/// Precision plan: F's coefficients come from the triangular system
/// F * (w q^2 e^t - 1) = R(t), dividing by (w q^2 - 1) once per coefficient.
/// Each division costs `division_loss` digits (v_p(q - 1) for w = 1, and
/// 2 coefficient digits for a ramified w: one for the pi-adic valuation of
/// w q^2 - 1, one for the norm used to invert it). The 1/j! factors of e^t
/// cost at most v_p(T!) in total, recovered again when b*_n = n! c_n is
/// extracted. The working precision is
///   target + (T+1) * division_loss + v_p(q-1) + v_p(T!) + 4.
class TwistedBernoulliContext {
 public:
  /// q must satisfy v_p(q - 1) >= 1 and q != 1. w = zeta_{p^level} (w = 1 at level 0).
  static TwistedBernoulliContext create(long p, const Rational& q, long w_level, long T, long target_precision,
                                        const CycloOptions& opts = {});

  long prime() const { return p_; }
  long w_level() const { return w_level_; }
  long order() const { return T_; }
  long target_precision() const { return target_; }
  long working_precision() const { return working_; }
  long division_loss() const { return division_loss_; }
  const Rational& q_exact() const { return q_exact_; }
  const PadicNumber& q() const { return q_; }
  const CycloElement& w() const { return w_; }
  const PadicNumber& logq() const { return logq_; }
  const CycloOptions& options() const { return opts_; }

  CycloElement embed(const PadicNumber& x) const { return CycloElement::embed(x, w_level_, opts_); }
  CycloElement constant(const Rational& x) const;

 private:
  TwistedBernoulliContext(long p, long w_level, long T, long target, long working, long division_loss,
                          Rational q_exact, PadicNumber q, CycloElement w, PadicNumber logq, CycloOptions opts)
      : p_(p), w_level_(w_level), T_(T), target_(target), working_(working), division_loss_(division_loss),
        q_exact_(std::move(q_exact)), q_(std::move(q)), w_(std::move(w)), logq_(std::move(logq)), opts_(opts) {}

  long p_;
  long w_level_;
  long T_;
  long target_;
  long working_;
  long division_loss_;
  Rational q_exact_;
  PadicNumber q_;
  CycloElement w_;
  PadicNumber logq_;
  CycloOptions opts_;
};

struct GeneratingSeries {
  TruncatedSeries<CycloElement> coeffs;  // c_n of F(t) = sum c_n t^n
  std::vector<long> precision_ledger;    // certified absolute precision of c_n
};

/// Coefficients of F(t) through t^T. Throws PrecisionError if any coefficient
/// of b*_n = n! c_n ends up below the target precision.
GeneratingSeries gen_function_series(const TwistedBernoulliContext& ctx);

/// b*_{n,w}(q) = n! c_n.
CycloElement twisted_bernoulli_number(const TwistedBernoulliContext& ctx, long n);
/// All of b*_0..b*_T from one series solve.
std::vector<CycloElement> twisted_bernoulli_numbers(const TwistedBernoulliContext& ctx);

/// b*_{n,w}(z,q) = sum_k C(n,k) z^(n-k) b*_{k,w}(q).
CycloElement twisted_bernoulli_poly(const TwistedBernoulliContext& ctx, long n, const Rational& z);
/// Same value read off as n! [t^n] of F(t) e^(z t).
CycloElement twisted_bernoulli_poly_series(const TwistedBernoulliContext& ctx, long n, const Rational& z);
/// The polynomial at the fractional part {y}.
CycloElement twisted_bernoulli_bar(const TwistedBernoulliContext& ctx, long n, const Rational& y);

/// (1/[p^N:q]) sum_{x<p^N} w^x q^(2x) x^n.
CycloElement riemann_oracle(const TwistedBernoulliContext& ctx, long n, long N, const TruncationLimits& limits = {});

/// Valuation margin for riemann_oracle(n, N) vs b*_n: agreement holds to
/// valuation >= N - riemann_loss(ctx, n), with
///   riemann_loss = max_k ceil(v_p(k+1) - (k-n)^+ nu),
/// nu = v_p(q-1) for w = 1 and min(1/phi, v_p(q-1)) otherwise.
long riemann_loss(const TwistedBernoulliContext& ctx, long n);

/// Valuation margin for the classical limit: v_p(b*_{n,1}(1+p^M) - B_n) >= M - 1.
long classical_limit_loss(long n);

/// (w q^2 e^t - 1) F(t) - ((q-1)/log q)(2 log q + t), coefficientwise.
TruncatedSeries<CycloElement> defining_relation_residual(const TwistedBernoulliContext& ctx,
                                                         const GeneratingSeries& F);

/// Left side of the shift identity with the truncated q-integral at level N:
/// q I_q(g_1) - I_q(g) for g = w^x q^x e^(tx), as a series in t.
/// Equals (q-1) + ((q-1)/log q)(log w + log q + t) in the limit.
TruncatedSeries<CycloElement> shift_identity_series(const TwistedBernoulliContext& ctx, long N,
                                                    const TruncationLimits& limits = {});

}  // namespace hbsums
