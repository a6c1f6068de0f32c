#include "hbsums/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hbsums/errors.hpp"

namespace hbsums {

long cyclo_degree(long p, long level) {
  if (level == 0) return 1;
  long s = 1;
  for (long i = 1; i < level; ++i) s *= p;
  return (p - 1) * s;
}

namespace {

void check_level(long p, long level, const CycloOptions& opts) {
  require_odd_prime(p);
  require(level >= 0, "cyclotomic level must be >= 0");
  require(level <= opts.max_level, "cyclotomic level " + std::to_string(level) +
                                       " exceeds the enabled maximum " + std::to_string(opts.max_level));
}

void require_compatible(const CycloElement& a, const CycloElement& b) {
  require(a.prime() == b.prime() && a.level() == b.level(), "cyclotomic element prime/level mismatch");
}

long root_order(long p, long level) {
  long m = 1;
  for (long i = 0; i < level; ++i) m *= p;
  return m;
}

}  // namespace

CycloElement unit_like(const CycloElement& a) {
  long rel = 1;
  for (const auto& c : a.coeffs()) rel = std::max(rel, c.precision());
  return CycloElement::embed(PadicNumber::one(a.prime(), rel), a.level(), CycloOptions{a.level()});
}

std::vector<PadicNumber> CycloElement::reduce(long p, long level, std::vector<PadicNumber> buf) {
  const long phi = cyclo_degree(p, level);
  if (level == 0) {
    PadicNumber acc = buf.front();
    for (std::size_t i = 1; i < buf.size(); ++i) acc += buf[i];
    return {acc};
  }
  // zeta^phi = -sum_{i=0}^{p-2} zeta^(i*s), s = p^(level-1).
  const long s = phi / (p - 1);
  for (long d = static_cast<long>(buf.size()) - 1; d >= phi; --d) {
    const PadicNumber c = buf[static_cast<std::size_t>(d)];
    if (c.is_zero() && c.valuation() >= PadicNumber::kExactCap) continue;
    for (long i = 0; i <= p - 2; ++i) {
      auto& target = buf[static_cast<std::size_t>(d - phi + i * s)];
      target = target - c;
    }
  }
  buf.resize(static_cast<std::size_t>(phi), PadicNumber::exact_zero(p));
  return buf;
}

CycloElement CycloElement::from_coeffs(long p, long level, std::vector<PadicNumber> coeffs,
                                       const CycloOptions& opts) {
  check_level(p, level, opts);
  require(!coeffs.empty(), "cyclotomic element needs coefficients");
  for (const auto& c : coeffs) require(c.prime() == p, "cyclotomic coefficient prime mismatch");
  const auto phi = static_cast<std::size_t>(cyclo_degree(p, level));
  if (coeffs.size() < phi) coeffs.resize(phi, PadicNumber::exact_zero(p));
  return CycloElement(p, level, reduce(p, level, std::move(coeffs)));
}

CycloElement CycloElement::embed(const PadicNumber& x, long level, const CycloOptions& opts) {
  return from_coeffs(x.prime(), level, {x}, opts);
}

CycloElement CycloElement::constant(long p, long level, const Rational& x, long precision,
                                    const CycloOptions& opts) {
  return embed(PadicNumber::from_rational(p, x, precision), level, opts);
}

CycloElement CycloElement::zeta(long p, long level, long precision, const CycloOptions& opts) {
  check_level(p, level, opts);
  require(level >= 1, "zeta requested at level 0 (use level >= 1)");
  std::vector<PadicNumber> c(static_cast<std::size_t>(cyclo_degree(p, level)), PadicNumber::exact_zero(p));
  c[1] = PadicNumber::one(p, precision);
  // p = 3, level 1: phi = 2 and zeta is already in the basis.
  return CycloElement(p, level, std::move(c));
}

long CycloElement::min_valuation() const {
  long v = PadicNumber::kExactCap;
  for (const auto& c : coeffs_) v = std::min(v, c.valuation());
  return v;
}

long CycloElement::absolute_precision() const {
  long a = PadicNumber::kExactCap;
  for (const auto& c : coeffs_) a = std::min(a, c.absolute_precision());
  return a;
}

bool CycloElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PadicNumber& c) { return c.is_zero(); });
}

CycloElement CycloElement::operator-() const {
  std::vector<PadicNumber> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return CycloElement(p_, level_, std::move(c));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
  require_compatible(a, b);
  std::vector<PadicNumber> c;
  c.reserve(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
  return CycloElement(a.p_, a.level_, std::move(c));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
  require_compatible(a, b);
  std::vector<PadicNumber> c;
  c.reserve(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] - b.coeffs_[i]);
  return CycloElement(a.p_, a.level_, std::move(c));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  require_compatible(a, b);
  const std::size_t n = a.coeffs_.size();
  if (n == 1) return CycloElement(a.p_, a.level_, {a.coeffs_[0] * b.coeffs_[0]});
  std::vector<PadicNumber> buf(2 * n - 1, PadicNumber::exact_zero(a.p_));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero() && a.coeffs_[i].valuation() >= PadicNumber::kExactCap) continue;
    for (std::size_t j = 0; j < n; ++j) buf[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycloElement(a.p_, a.level_, CycloElement::reduce(a.p_, a.level_, std::move(buf)));
}

CycloElement operator*(const CycloElement& a, const PadicNumber& s) {
  std::vector<PadicNumber> c;
  c.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) c.push_back(x * s);
  return CycloElement(a.p_, a.level_, std::move(c));
}

CycloElement operator/(const CycloElement& a, const CycloElement& b) { return a * b.inverse(); }

CycloElement CycloElement::scaled(const Rational& r) const {
  std::vector<PadicNumber> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.scaled(r));
  return CycloElement(p_, level_, std::move(c));
}

CycloElement CycloElement::conjugate(long i) const {
  require(std::gcd(i, p_) == 1, "conjugate: exponent must be prime to p");
  if (level_ == 0) return *this;
  const long m = root_order(p_, level_);
  const long step = ((i % m) + m) % m;
  std::vector<PadicNumber> buf(static_cast<std::size_t>(m), PadicNumber::exact_zero(p_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    buf[static_cast<std::size_t>((static_cast<long>(j) * step) % m)] += coeffs_[j];
  return CycloElement(p_, level_, reduce(p_, level_, std::move(buf)));
}

namespace {

// Product of sigma_i(a) over i in (Z/p^n)^x, i != 1.
CycloElement conjugate_product(const CycloElement& a, long p, long level) {
  const long m = root_order(p, level);
  CycloElement acc = unit_like(a);
  for (long i = 2; i < m; ++i)
    if (i % p != 0) acc *= a.conjugate(i);
  return acc;
}

}  // namespace

PadicNumber CycloElement::norm() const {
  if (level_ == 0) return coeffs_.front();
  return (*this * conjugate_product(*this, p_, level_)).base();
}

CycloElement CycloElement::inverse() const {
  if (level_ == 0) {
    require(!coeffs_.front().is_zero(), "inverse of a cyclotomic element indistinguishable from 0");
    return CycloElement(p_, level_, {PadicNumber::one(p_, coeffs_.front().precision()) / coeffs_.front()});
  }
  // a^{-1} = (prod_{i != 1} sigma_i(a)) / N(a).
  const CycloElement others = conjugate_product(*this, p_, level_);
  const PadicNumber n = (*this * others).base();
  require(!n.is_zero(), "inverse of a cyclotomic element indistinguishable from 0");
  const PadicNumber inv_n = PadicNumber::one(p_, n.precision()) / n;
  return others * inv_n;
}

CycloElement CycloElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElement result = unit_like(*this);
  CycloElement base = *this;
  while (e != 0) {
    if (e & 1L) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool agrees(const CycloElement& a, const CycloElement& b) { return (a - b).is_zero(); }

long distance_valuation(const CycloElement& a, const CycloElement& b) { return (a - b).min_valuation(); }

CycloElement cyclo_log(const CycloElement& u) {
  const long p = u.prime();
  const long level = u.level();
  const long A = u.absolute_precision();
  require(A < PadicNumber::kExactCap, "cyclo_log: argument needs finite precision");
  const CycloElement one = CycloElement::embed(PadicNumber::one(p, A), level, CycloOptions{level});
  const CycloElement x = u - one;
  require(x.min_valuation() >= 0, "cyclo_log: argument must be integral");
  if (level == 0) return CycloElement::embed(padic_log(u.base()), 0);
  // x lies in (zeta - 1) iff the image of x under zeta -> 1 is divisible by p.
  PadicNumber image = x.coeffs().front();
  for (std::size_t i = 1; i < x.coeffs().size(); ++i) image += x.coeffs()[i];
  require(image.valuation() >= 1, "cyclo_log: argument must be a principal unit");
  if (x.is_zero()) return x;
  // x^j has pi-adic valuation >= j, so its coefficients have p-adic valuation
  // >= floor(j / phi); dividing by j costs v_p(j).
  const double phi = static_cast<double>(x.degree());
  const double log_p = std::log(static_cast<double>(p));
  long last = 1;
  for (long j = 2;; ++j) {
    // Lower bound j/phi - 1 - log_p(j) is increasing once j > phi.
    const double lower = static_cast<double>(j) / phi - 1.0 - std::log(static_cast<double>(j)) / log_p;
    if (static_cast<double>(j) > phi && lower >= static_cast<double>(A)) {
      last = j - 1;
      break;
    }
  }
  CycloElement sum = x;
  CycloElement power = x;
  for (long j = 2; j <= last; ++j) {
    power *= x;
    const CycloElement term = power.scaled(make_rational(1, j));
    sum = (j % 2 == 0) ? sum - term : sum + term;
  }
  std::vector<PadicNumber> c;
  for (const auto& coef : sum.coeffs()) c.push_back(coef.reduced_to(A));
  return CycloElement::from_coeffs(p, level, std::move(c), CycloOptions{level});
}

}  // namespace hbsums
