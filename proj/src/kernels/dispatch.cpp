#include "perc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "perc/errors.hpp"
#include "kernel_table.hpp"

namespace perc::kernels {
namespace {

using detail::KernelTable;

bool cpu_has_avx2() noexcept {
#if defined(PERC_HAVE_AVX2_TU)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) noexcept {
#if defined(PERC_HAVE_AVX2_TU)
  if (isa == Isa::avx2) return &detail::avx2_table();
#endif
  (void)isa;
  return &detail::scalar_table();
}

Isa detect_isa() noexcept {
  if (const char* env = std::getenv("PERC_ISA")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Isa::avx2;
    return Isa::scalar;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

struct Dispatch {
  std::atomic<Isa> isa;
  std::atomic<const KernelTable*> table;
  Dispatch() : isa(detect_isa()), table(table_for(isa.load())) {}
};

Dispatch& dispatch() noexcept {
  static Dispatch d;
  return d;
}

const KernelTable& active() noexcept { return *dispatch().table.load(std::memory_order_relaxed); }

}  // namespace

const char* isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa active_isa() noexcept { return dispatch().isa.load(std::memory_order_relaxed); }

bool isa_available(Isa isa) noexcept { return isa == Isa::scalar || cpu_has_avx2(); }

void force_isa(Isa isa) {
  if (!isa_available(isa))
    throw input_error(std::string("instruction set not available on this cpu: ") + isa_name(isa));
  dispatch().isa.store(isa, std::memory_order_relaxed);
  dispatch().table.store(table_for(isa), std::memory_order_relaxed);
}

void reset_isa() noexcept {
  const Isa isa = detect_isa();
  dispatch().isa.store(isa, std::memory_order_relaxed);
  dispatch().table.store(table_for(isa), std::memory_order_relaxed);
}

void rng_fill(std::uint64_t seed, std::uint64_t first_index, std::span<std::uint64_t> out) {
  active().rng_fill(seed, first_index, out.data(), out.size());
}

std::uint64_t count_below(std::span<const std::uint64_t> draws, std::uint64_t cut) {
  return active().count_below(draws.data(), draws.size(), cut);
}

void threshold_bits(std::span<const std::uint64_t> draws, std::uint64_t cut,
                    std::span<std::uint8_t> out) {
  if (out.size() != draws.size()) throw input_error("threshold_bits: size mismatch");
  active().threshold_bits(draws.data(), draws.size(), cut, out.data());
}

std::uint64_t popcount_words(std::span<const std::uint64_t> words) {
  return active().popcount_words(words.data(), words.size());
}

std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) throw input_error("and_popcount: size mismatch");
  return active().and_popcount(a.data(), b.data(), a.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw input_error("dot: size mismatch");
  return active().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw input_error("axpy: size mismatch");
  active().axpy(alpha, x.data(), y.data(), x.size());
}

void scale(std::span<double> x, double alpha) { active().scale(x.data(), x.size(), alpha); }

void adjacency_matvec(std::span<const std::uint64_t> offsets, std::span<const std::uint32_t> adj,
                      std::span<const double> x, std::span<double> y) {
  if (offsets.empty() || offsets.size() - 1 != y.size())
    throw input_error("adjacency_matvec: offsets/y size mismatch");
  active().adjacency_matvec(offsets.data(), y.size(), adj.data(), x.data(), y.data());
}

}  // namespace perc::kernels
