#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace perc {

// Dense bit-indexed subset of [0, universe). Cardinality is cached and kept
// in sync by every mutator; membership tests are the DFS inner loop.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::uint32_t universe);
  static VertexSet of(std::uint32_t universe, std::initializer_list<std::uint32_t> members);
  static VertexSet of(std::uint32_t universe, std::span<const std::uint32_t> members);

  std::uint32_t universe() const noexcept { return universe_; }
  std::uint64_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(std::uint32_t v) const noexcept {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  // Returns true if the set changed.
  bool insert(std::uint32_t v) noexcept {
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t(1) << (v & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  bool erase(std::uint32_t v) noexcept {
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t(1) << (v & 63);
    if (!(w & bit)) return false;
    w &= ~bit;
    --count_;
    return true;
  }

  void clear() noexcept {
    std::fill(words_.begin(), words_.end(), 0);
    count_ = 0;
  }

  std::uint64_t intersection_size(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  bool operator==(const VertexSet& other) const noexcept {
    return universe_ == other.universe_ && count_ == other.count_ && words_ == other.words_;
  }

  std::vector<std::uint32_t> to_vector() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int bit = std::countr_zero(w);
        fn(static_cast<std::uint32_t>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
  void recount();
  void check_same_universe(const VertexSet& other) const;

  std::uint32_t universe_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace perc
