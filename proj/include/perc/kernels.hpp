#pragma once

#include <cstdint>
#include <span>

namespace perc::kernels {

// Data-parallel inner loops, each with a scalar reference implementation and
// an AVX2 variant picked at runtime (dispatch.cpp checks the CPU once; the
// PERC_ISA env var or force_isa() overrides the choice). Integer kernels are
// bit-identical across variants; floating-point reductions may differ in the
// last ulps because of association order.

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa) noexcept;
Isa active_isa() noexcept;
bool isa_available(Isa isa) noexcept;
// Test hook. Not safe to call concurrently with running kernels.
void force_isa(Isa isa);
void reset_isa() noexcept;

// out[k] = draw_at(seed, first_index + k)
void rng_fill(std::uint64_t seed, std::uint64_t first_index, std::span<std::uint64_t> out);

// Number of draws strictly below cut (unsigned compare).
std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t cut);

// out[k] = draws[k] < cut ? 1 : 0
void threshold_bits(std::span<const std::uint64_t> draws, std::uint64_t cut,
                    std::span<std::uint8_t> out);

std::uint64_t popcount_words(std::span<const std::uint64_t> words);
std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

double dot(std::span<const double> a, std::span<const double> b);
// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(std::span<double> x, double alpha);

// y[i] = sum over k in [offsets[i], offsets[i+1]) of x[adj[k]]
// (adjacency operator of an unweighted graph in CSR form).
void adjacency_matvec(std::span<const std::uint64_t> offsets, std::span<const std::uint32_t> adj,
                      std::span<const double> x, std::span<double> y);

}  // namespace perc::kernels
