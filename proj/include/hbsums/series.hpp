#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hbsums {

/// Formal power series c_0 + c_1 t + ... + c_T t^T over a ring type.
///
/// Binary operations truncate to the smaller of the two orders. The ring
/// only needs +, -, * and copy construction; no zero element is required,
/// which lets p-adic coefficients carry their own prime and precision.
template <typename Ring>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Ring& operator[](std::size_t i) const { return coeffs_.at(i); }
  Ring& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Ring>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("TruncatedSeries: cannot extend order");
    return TruncatedSeries(std::vector<Ring>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Ring> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out.push_back(Ring(a.coeffs_[i] + b.coeffs_[i]));
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Ring> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out.push_back(Ring(a.coeffs_[i] - b.coeffs_[i]));
    return TruncatedSeries(std::move(out));
  }

  // Cauchy product.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Ring> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      Ring acc(a.coeffs_[0] * b.coeffs_[i]);
      for (std::size_t j = 1; j <= i; ++j) acc = Ring(acc + a.coeffs_[j] * b.coeffs_[i - j]);
      out.push_back(std::move(acc));
    }
    return TruncatedSeries(std::move(out));
  }

  template <typename Scalar>
  TruncatedSeries scaled(const Scalar& s) const {
    std::vector<Ring> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(Ring(c * s));
    return TruncatedSeries(std::move(out));
  }

 private:
  std::vector<Ring> coeffs_;
};

}  // namespace hbsums
