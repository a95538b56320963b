#include "perc/vertex_set.hpp"

#include "perc/errors.hpp"
#include "perc/kernels.hpp"

namespace perc {

VertexSet VertexSet::full(std::uint32_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t(0));
  if (universe % 64) s.words_.back() = (std::uint64_t(1) << (universe % 64)) - 1;
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::of(std::uint32_t universe, std::initializer_list<std::uint32_t> members) {
  return of(universe, std::span<const std::uint32_t>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::uint32_t universe, std::span<const std::uint32_t> members) {
  VertexSet s(universe);
  for (const auto v : members) {
    if (v >= universe) throw input_error("VertexSet::of: member outside universe");
    s.insert(v);
  }
  return s;
}

std::uint64_t VertexSet::intersection_size(const VertexSet& other) const {
  check_same_universe(other);
  return kernels::and_popcount(words_, other.words_);
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (universe_ % 64) out.words_.back() &= (std::uint64_t(1) << (universe_ % 64)) - 1;
  out.count_ = universe_ - count_;
  return out;
}

std::vector<std::uint32_t> VertexSet::to_vector() const {
  std::vector<std::uint32_t> out;
  out.reserve(count_);
  for_each([&](std::uint32_t v) { out.push_back(v); });
  return out;
}

void VertexSet::recount() { count_ = kernels::popcount_words(words_); }

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw input_error("VertexSet: operands have different universes");
}

}  // namespace perc
