#include "hbsums/kernels.hpp"

#include <algorithm>

#include "hbsums/errors.hpp"

namespace hbsums::kernels {

long chunk_length(long total, long min_chunk) {
  constexpr long kTargetChunks = 256;
  return std::max(min_chunk, (total + kTargetChunks - 1) / kTargetChunks);
}

double periodic_harmonic_block(std::span<const double> f, long j) {
  const double base = static_cast<double>(j) * static_cast<double>(f.size());
  double s = 0.0;
  for (std::size_t r = 0; r < f.size(); ++r)
    if (f[r] != 0.0) s += f[r] / (base + static_cast<double>(r + 1));
  return s;
}

double periodic_harmonic_serial(std::span<const double> f, long periods) {
  double total = 0.0;
  for (long j = 0; j < periods; ++j) total += periodic_harmonic_block(f, j);
  return total;
}

double periodic_harmonic_omp(std::span<const double> f, long periods) {
  const long len = chunk_length(periods, 16);
  const long chunks = (periods + len - 1) / len;
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < chunks; ++c) {
    const long end = std::min(periods, (c + 1) * len);
    double s = 0.0;
    for (long j = c * len; j < end; ++j) s += periodic_harmonic_block(f, j);
    partial[static_cast<std::size_t>(c)] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

namespace {

// Sums (-1)^x table[x mod m] for x in [begin, end) with 128-bit accumulation.
Integer alternating_table_range(std::span<const long> table, long begin, long end) {
  const long m = static_cast<long>(table.size());
  __int128 acc = 0;
  long idx = begin % m;
  for (long x = begin; x < end; ++x) {
    acc += (x & 1L) ? -static_cast<__int128>(table[static_cast<std::size_t>(idx)])
                    : static_cast<__int128>(table[static_cast<std::size_t>(idx)]);
    if (++idx == m) idx = 0;
  }
  // Split the 128-bit value into two 64-bit halves for GMP.
  const bool neg = acc < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-acc) : static_cast<unsigned __int128>(acc);
  Integer hi(static_cast<unsigned long>(mag >> 64));
  Integer lo(static_cast<unsigned long>(mag & ~0UL));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

std::vector<long> to_long_table(std::span<const Integer> table) {
  require(!table.empty(), "periodic table must be non-empty");
  std::vector<long> out;
  out.reserve(table.size());
  for (const auto& t : table) {
    require(t.fits_slong_p() && abs(t) < (Integer(1) << 60), "periodic table entry too large for the kernel");
    out.push_back(t.get_si());
  }
  return out;
}

}  // namespace

Integer alternating_periodic_sum_serial(std::span<const Integer> table, long length) {
  const std::vector<long> t = to_long_table(table);
  return alternating_table_range(t, 0, length);
}

Integer alternating_periodic_sum_omp(std::span<const Integer> table, long length) {
  const std::vector<long> t = to_long_table(table);
  const long len = chunk_length(length, 4096);
  const long chunks = (length + len - 1) / len;
  std::vector<Integer> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (long c = 0; c < chunks; ++c)
    partial[static_cast<std::size_t>(c)] = alternating_table_range(t, c * len, std::min(length, (c + 1) * len));
  Integer total(0);
  for (const auto& s : partial) total += s;
  return total;
}

namespace {

std::vector<Integer> power_sums_range(long begin, long end, int degree) {
  std::vector<Integer> acc(static_cast<std::size_t>(degree + 1), Integer(0));
  Integer xp;
  for (long x = begin; x < end; ++x) {
    xp = (x & 1L) ? -1 : 1;
    for (int j = 0; j <= degree; ++j) {
      acc[static_cast<std::size_t>(j)] += xp;
      xp *= x;
    }
  }
  return acc;
}

}  // namespace

std::vector<Integer> alternating_power_sums_serial(long length, int degree) {
  require(degree >= 0, "degree must be >= 0");
  return power_sums_range(0, length, degree);
}

std::vector<Integer> alternating_power_sums_omp(long length, int degree) {
  require(degree >= 0, "degree must be >= 0");
  const long len = chunk_length(length, 4096);
  const long chunks = (length + len - 1) / len;
  std::vector<std::vector<Integer>> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (long c = 0; c < chunks; ++c)
    partial[static_cast<std::size_t>(c)] = power_sums_range(c * len, std::min(length, (c + 1) * len), degree);
  std::vector<Integer> total(static_cast<std::size_t>(degree + 1), Integer(0));
  for (const auto& part : partial)
    for (std::size_t j = 0; j < total.size(); ++j) total[j] += part[j];
  return total;
}

namespace {

CycloElement twisted_moment_range(const CycloElement& u, long n, long begin, long end) {
  CycloElement power = u.pow(begin);
  CycloElement acc = power.scaled(Rational(0));
  for (long x = begin; x < end; ++x) {
    if (x != 0 || n == 0) {
      Integer xn;
      mpz_ui_pow_ui(xn.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(n));
      acc += power.scaled(Rational(xn));
    }
    power *= u;
  }
  return acc;
}

}  // namespace

CycloElement twisted_moment_serial(const CycloElement& u, long n, long length) {
  require(n >= 0 && length >= 1, "twisted_moment: need n >= 0 and length >= 1");
  return twisted_moment_range(u, n, 0, length);
}

CycloElement twisted_moment_omp(const CycloElement& u, long n, long length) {
  require(n >= 0 && length >= 1, "twisted_moment: need n >= 0 and length >= 1");
  const long len = chunk_length(length, 64);
  const long chunks = (length + len - 1) / len;
  std::vector<CycloElement> partial(static_cast<std::size_t>(chunks), u);
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < chunks; ++c)
    partial[static_cast<std::size_t>(c)] = twisted_moment_range(u, n, c * len, std::min(length, (c + 1) * len));
  CycloElement total = partial.front();
  for (std::size_t c = 1; c < partial.size(); ++c) total += partial[c];
  return total;
}

}  // namespace hbsums::kernels
