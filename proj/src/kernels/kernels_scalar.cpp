#include <bit>
#include <cstddef>
#include <cstdint>

#include "perc/rng.hpp"
#include "kernel_table.hpp"

namespace perc::kernels::detail {
namespace {

void rng_fill_scalar(std::uint64_t seed, std::uint64_t first_index, std::uint64_t* out,
                     std::size_t count) {
  std::uint64_t z = seed + (first_index + 1) * kSplitMixGamma;
  for (std::size_t k = 0; k < count; ++k, z += kSplitMixGamma) out[k] = mix64(z);
}

std::uint64_t count_below_scalar(const std::uint64_t* draws, std::size_t count,
                                 std::uint64_t cut) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < count; ++k) acc += draws[k] < cut;
  return acc;
}

void threshold_bits_scalar(const std::uint64_t* draws, std::size_t count, std::uint64_t cut,
                           std::uint8_t* out) {
  for (std::size_t k = 0; k < count; ++k) out[k] = draws[k] < cut;
}

std::uint64_t popcount_words_scalar(const std::uint64_t* words, std::size_t count) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < count; ++k) acc += std::popcount(words[k]);
  return acc;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t count) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < count; ++k) acc += std::popcount(a[k] & b[k]);
  return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t count) {
  double acc = 0.0;
  for (std::size_t k = 0; k < count; ++k) acc += a[k] * b[k];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) y[k] += alpha * x[k];
}

void scale_scalar(double* x, std::size_t count, double alpha) {
  for (std::size_t k = 0; k < count; ++k) x[k] *= alpha;
}

void adjacency_matvec_scalar(const std::uint64_t* offsets, std::size_t n,
                             const std::uint32_t* adj, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::uint64_t k = offsets[i]; k < offsets[i + 1]; ++k) acc += x[adj[k]];
    y[i] = acc;
  }
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{
      rng_fill_scalar,       count_below_scalar, threshold_bits_scalar,
      popcount_words_scalar, and_popcount_scalar, dot_scalar,
      axpy_scalar,           scale_scalar,        adjacency_matvec_scalar,
  };
  return table;
}

}  // namespace perc::kernels::detail
