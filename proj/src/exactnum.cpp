#include "hbsums/exactnum.hpp"

#include <mutex>
#include <shared_mutex>

#include "hbsums/errors.hpp"

namespace hbsums {

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw PreconditionError("not a rational number: '" + s + "'");
  }
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor_g(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& x) { return Rational(x - Rational(floor_g(x))); }

Rational sawtooth(const Rational& x) {
  if (is_integer(x)) return Rational(0);
  return Rational(frac(x) - Rational(1, 2));
}

Integer binomial(long n, long k) {
  require(n >= 0, "binomial: negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  require(n >= 0, "factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

Rational bernoulli_number(long n) {
  require(n >= 0, "bernoulli_number: n must be >= 0");
  const auto idx = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(bernoulli_mutex);
    if (idx < bernoulli_cache.size()) return bernoulli_cache[idx];
  }
  std::unique_lock lock(bernoulli_mutex);
  // sum_{k=0}^{m} C(m+1,k) B_k = 0
  for (long m = static_cast<long>(bernoulli_cache.size()); m <= n; ++m) {
    Rational acc(0);
    for (long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * bernoulli_cache[static_cast<std::size_t>(k)];
    bernoulli_cache.push_back(Rational(-acc / Rational(m + 1)));
  }
  return bernoulli_cache[idx];
}

Rational bernoulli_poly(long n, const Rational& x) {
  require(n >= 0, "bernoulli_poly: n must be >= 0");
  // Horner over the coefficients C(n,k) B_k of x^(n-k).
  Rational acc(0);
  for (long k = 0; k <= n; ++k) acc = acc * x + Rational(binomial(n, k)) * bernoulli_number(k);
  return acc;
}

Rational bernoulli_fn(long n, const Rational& x) {
  require(n >= 0, "bernoulli_fn: n must be >= 0");
  if (is_integer(x)) return n == 1 ? Rational(0) : bernoulli_number(n);
  return bernoulli_poly(n, frac(x));
}

std::vector<Rational> euler_numbers(long T) {
  require(T >= 0, "euler_numbers: T must be >= 0");
  // (e^t + 1) * sum e_n t^n/n! = 2  =>  e_n = -1/2 sum_{k<n} C(n,k) e_k  for n >= 1.
  std::vector<Rational> e{Rational(1)};
  for (long n = 1; n <= T; ++n) {
    Rational acc(0);
    for (long k = 0; k < n; ++k) acc += Rational(binomial(n, k)) * e[static_cast<std::size_t>(k)];
    e.push_back(Rational(-acc / 2));
  }
  return e;
}

TruncatedSeries<Rational> tan_series(long T) {
  require(T >= 0, "tan_series: T must be >= 0");
  // tan(u) = sin(u)/cos(u) by series division, then u = b/2.
  std::vector<Rational> sin_c(static_cast<std::size_t>(T + 1), Rational(0));
  std::vector<Rational> cos_c(static_cast<std::size_t>(T + 1), Rational(0));
  for (long j = 0; j <= T; ++j) {
    const Rational inv_fact(Rational(1) / Rational(factorial(j)));
    const int sign = ((j / 2) % 2 == 0) ? 1 : -1;
    if (j % 2 == 1) sin_c[static_cast<std::size_t>(j)] = inv_fact * sign;
    else cos_c[static_cast<std::size_t>(j)] = inv_fact * sign;
  }
  std::vector<Rational> tan_c(static_cast<std::size_t>(T + 1), Rational(0));
  for (long n = 0; n <= T; ++n) {
    Rational acc = sin_c[static_cast<std::size_t>(n)];
    for (long j = 1; j <= n; ++j)
      acc -= cos_c[static_cast<std::size_t>(j)] * tan_c[static_cast<std::size_t>(n - j)];
    tan_c[static_cast<std::size_t>(n)] = acc;  // cos_c[0] == 1
  }
  Rational scale(1);
  for (auto& c : tan_c) {
    c *= scale;
    scale /= 2;
  }
  return TruncatedSeries<Rational>(std::move(tan_c));
}

}  // namespace hbsums
