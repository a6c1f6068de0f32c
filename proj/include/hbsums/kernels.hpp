#pragma once

#include <span>
#include <vector>

#include "hbsums/cyclo.hpp"
#include "hbsums/exactnum.hpp"

// Data-parallel inner loops. Every kernel has a serial reference used by the
// tests and an OpenMP version used by the library. The OpenMP versions split
// the index range into chunks whose boundaries depend only on the problem
// size, never on the thread count, so results are reproducible bit for bit.
namespace hbsums::kernels {

/// sum_{j < periods} sum_{r=1}^{P} f[r-1] / (j P + r), with P = f.size().
double periodic_harmonic_serial(std::span<const double> f, long periods);
double periodic_harmonic_omp(std::span<const double> f, long periods);
/// The single block j: sum_{r=1}^{P} f[r-1] / (j P + r).
double periodic_harmonic_block(std::span<const double> f, long j);

/// sum_{x < length} (-1)^x table[x mod table.size()] over integers.
Integer alternating_periodic_sum_serial(std::span<const Integer> table, long length);
Integer alternating_periodic_sum_omp(std::span<const Integer> table, long length);

/// S_j = sum_{x < length} (-1)^x x^j for j = 0..degree.
std::vector<Integer> alternating_power_sums_serial(long length, int degree);
std::vector<Integer> alternating_power_sums_omp(long length, int degree);

/// sum_{x < length} x^n u^x in the ring of u.
CycloElement twisted_moment_serial(const CycloElement& u, long n, long length);
CycloElement twisted_moment_omp(const CycloElement& u, long n, long length);

/// Fixed chunk length for a range of `total` items.
long chunk_length(long total, long min_chunk);

}  // namespace hbsums::kernels
