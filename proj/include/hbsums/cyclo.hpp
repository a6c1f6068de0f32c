#pragma once

#include <vector>

#include "hbsums/padic.hpp"

namespace hbsums {

struct CycloOptions {
  // Levels n >= 2 are accepted only when explicitly raised; coefficient
  // count and ramified precision loss grow with phi(p^n).
  long max_level = 1;
};

/// Element of Q_p(zeta_{p^n}) in the power basis 1, zeta, ..., zeta^(phi-1),
/// reduced modulo the p^n-th cyclotomic polynomial. Level 0 is Q_p itself.
///
/// Precision is tracked per coefficient. min_valuation() is a lower bound for
/// the p-adic valuation of the element (the pi-adic valuation is at least
/// phi(p^n) times that bound).
class CycloElement {
 public:
  static CycloElement embed(const PadicNumber& x, long level, const CycloOptions& opts = {});
  static CycloElement constant(long p, long level, const Rational& x, long precision,
                               const CycloOptions& opts = {});
  /// The primitive p^level-th root of unity zeta (level >= 1).
  static CycloElement zeta(long p, long level, long precision, const CycloOptions& opts = {});
  static CycloElement from_coeffs(long p, long level, std::vector<PadicNumber> coeffs,
                                  const CycloOptions& opts = {});

  long prime() const { return p_; }
  long level() const { return level_; }
  long degree() const { return static_cast<long>(coeffs_.size()); }
  const std::vector<PadicNumber>& coeffs() const { return coeffs_; }
  /// The Q_p component (coefficient of 1).
  const PadicNumber& base() const { return coeffs_.front(); }

  long min_valuation() const;
  long absolute_precision() const;
  bool is_zero() const;

  CycloElement operator-() const;
  friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator/(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const PadicNumber& s);
  friend CycloElement operator*(const PadicNumber& s, const CycloElement& a) { return a * s; }
  CycloElement& operator+=(const CycloElement& b) { return *this = *this + b; }
  CycloElement& operator*=(const CycloElement& b) { return *this = *this * b; }

  CycloElement scaled(const Rational& r) const;
  /// Galois conjugate zeta -> zeta^i, gcd(i, p) = 1.
  CycloElement conjugate(long i) const;
  /// Product of all conjugates, as an element of Q_p.
  PadicNumber norm() const;
  CycloElement inverse() const;
  CycloElement pow(long e) const;

 private:
  CycloElement(long p, long level, std::vector<PadicNumber> coeffs)
      : p_(p), level_(level), coeffs_(std::move(coeffs)) {}

  // Folds a coefficient buffer of any length into the power basis.
  static std::vector<PadicNumber> reduce(long p, long level, std::vector<PadicNumber> buffer);

  long p_;
  long level_;
  std::vector<PadicNumber> coeffs_;
};

long cyclo_degree(long p, long level);

/// 1 in the ring of `a`, carrying enough relative precision to be neutral.
CycloElement unit_like(const CycloElement& a);  // phi(p^level), 1 at level 0

bool agrees(const CycloElement& a, const CycloElement& b);
/// Lower bound for the valuation of a - b (coefficientwise minimum).
long distance_valuation(const CycloElement& a, const CycloElement& b);

/// Logarithm of a principal unit u (u - 1 in the maximal ideal of Z_p[zeta]).
CycloElement cyclo_log(const CycloElement& u);

}  // namespace hbsums
