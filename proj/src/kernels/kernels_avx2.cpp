// AVX2 kernel variants. This TU is the only one compiled with -mavx2 -mfma;
// dispatch.cpp selects it at runtime after a cpuid check.

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "perc/rng.hpp"
#include "kernel_table.hpp"

namespace perc::kernels::detail {
namespace {

// 64x64 -> low 64 multiply from 32-bit pieces (no _mm256_mullo_epi64 in AVX2).
inline __m256i mullo64(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross =
      _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix64_lanes(__m256i z) {
  const __m256i c1 = _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ULL));
  const __m256i c2 = _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBULL));
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)), c1);
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)), c2);
  return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

void rng_fill_avx2(std::uint64_t seed, std::uint64_t first_index, std::uint64_t* out,
                   std::size_t count) {
  const std::uint64_t base = seed + (first_index + 1) * kSplitMixGamma;
  __m256i ctr = _mm256_set_epi64x(
      static_cast<long long>(base + 3 * kSplitMixGamma),
      static_cast<long long>(base + 2 * kSplitMixGamma),
      static_cast<long long>(base + kSplitMixGamma), static_cast<long long>(base));
  const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * kSplitMixGamma));
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), mix64_lanes(ctr));
    ctr = _mm256_add_epi64(ctr, step);
  }
  std::uint64_t z = base + k * kSplitMixGamma;
  for (; k < count; ++k, z += kSplitMixGamma) out[k] = mix64(z);
}

// Unsigned u64 compare: flip sign bits, use the signed compare.
inline __m256i less_than_u64(__m256i v, __m256i cut_flipped, __m256i sign) {
  return _mm256_cmpgt_epi64(cut_flipped, _mm256_xor_si256(v, sign));
}

std::uint64_t count_below_avx2(const std::uint64_t* draws, std::size_t count,
                               std::uint64_t cut) {
  const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  const __m256i cutf =
      _mm256_xor_si256(_mm256_set1_epi64x(static_cast<long long>(cut)), sign);
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(draws + k));
    acc = _mm256_sub_epi64(acc, less_than_u64(v, cutf, sign));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < count; ++k) total += draws[k] < cut;
  return total;
}

void threshold_bits_avx2(const std::uint64_t* draws, std::size_t count, std::uint64_t cut,
                         std::uint8_t* out) {
  const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  const __m256i cutf =
      _mm256_xor_si256(_mm256_set1_epi64x(static_cast<long long>(cut)), sign);
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(draws + k));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(less_than_u64(v, cutf, sign)));
    out[k] = mask & 1;
    out[k + 1] = (mask >> 1) & 1;
    out[k + 2] = (mask >> 2) & 1;
    out[k + 3] = (mask >> 3) & 1;
  }
  for (; k < count; ++k) out[k] = draws[k] < cut;
}

// Nibble-LUT byte popcount (Mula), accumulated via SAD against zero.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1,
                                       1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

std::uint64_t popcount_words_avx2(const std::uint64_t* words, std::size_t count) {
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + k));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), zero));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < count; ++k) total += static_cast<std::uint64_t>(__builtin_popcountll(words[k]));
  return total;
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t count) {
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256i v =
        _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k)),
                         _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k)));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), zero));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < count; ++k)
    total += static_cast<std::uint64_t>(__builtin_popcountll(a[k] & b[k]));
  return total;
}

double dot_avx2(const double* a, const double* b, std::size_t count) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
  }
  __m256d acc = _mm256_add_pd(acc0, acc1);
  for (; k + 4 <= count; k += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < count; ++k) total += a[k] * b[k];
  return total;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t count) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4)
    _mm256_storeu_pd(y + k, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
  for (; k < count; ++k) y[k] += alpha * x[k];
}

void scale_avx2(double* x, std::size_t count, double alpha) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4)
    _mm256_storeu_pd(x + k, _mm256_mul_pd(av, _mm256_loadu_pd(x + k)));
  for (; k < count; ++k) x[k] *= alpha;
}

void adjacency_matvec_avx2(const std::uint64_t* offsets, std::size_t n,
                           const std::uint32_t* adj, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t k = offsets[i];
    const std::uint64_t end = offsets[i + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(adj + k));
      acc = _mm256_add_pd(acc, _mm256_i32gather_pd(x, idx, 8));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < end; ++k) total += x[adj[k]];
    y[i] = total;
  }
}

}  // namespace

const KernelTable& avx2_table() noexcept {
  static const KernelTable table{
      rng_fill_avx2,       count_below_avx2, threshold_bits_avx2,
      popcount_words_avx2, and_popcount_avx2, dot_avx2,
      axpy_avx2,           scale_avx2,        adjacency_matvec_avx2,
  };
  return table;
}

}  // namespace perc::kernels::detail
