#pragma once

#include <cstddef>
#include <cstdint>

namespace perc::kernels::detail {

// One function pointer per kernel; each ISA fills a table.
struct KernelTable {
  void (*rng_fill)(std::uint64_t seed, std::uint64_t first_index, std::uint64_t* out,
                   std::size_t count);
  std::uint64_t (*count_below)(const std::uint64_t* draws, std::size_t count, std::uint64_t cut);
  void (*threshold_bits)(const std::uint64_t* draws, std::size_t count, std::uint64_t cut,
                         std::uint8_t* out);
  std::uint64_t (*popcount_words)(const std::uint64_t* words, std::size_t count);
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t count);
  double (*dot)(const double* a, const double* b, std::size_t count);
  void (*axpy)(double alpha, const double* x, double* y, std::size_t count);
  void (*scale)(double* x, std::size_t count, double alpha);
  void (*adjacency_matvec)(const std::uint64_t* offsets, std::size_t n, const std::uint32_t* adj,
                           const double* x, double* y);
};

const KernelTable& scalar_table() noexcept;

#if defined(PERC_HAVE_AVX2_TU)
const KernelTable& avx2_table() noexcept;
#endif

}  // namespace perc::kernels::detail
