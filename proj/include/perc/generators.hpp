#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "perc/graph.hpp"

namespace perc {

enum class Family {
  random_regular,
  hypercube,
  cycle,
  complete,
  circulant,
  disjoint_cliques,
};

Family family_from_string(const std::string& name);
const char* family_to_string(Family family) noexcept;

// Serializes to/from JSON with fields {family, n, d, offsets, seed} (see json_io).
struct GeneratorSpec {
  Family family = Family::random_regular;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::vector<std::uint32_t> offsets;  // circulant only
  std::uint64_t seed = 0;
};

// Strategy for making the configuration-model pairing simple.
//   reject: discard the whole pairing on any loop/multi-edge and redraw
//           (exactly uniform over simple d-regular graphs; practical only
//           while e^{(d^2-1)/4} expected redraws stay small, i.e. d <= 4).
//   repair: double-edge swaps until simple (approximately uniform).
//   auto_select: reject for d <= 4, repair otherwise.
enum class RegularMode { auto_select, reject, repair };

Graph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed,
                     RegularMode mode = RegularMode::auto_select);
Graph hypercube(std::uint32_t dim);
Graph cycle(std::uint32_t n);
Graph complete(std::uint32_t n);
Graph circulant(std::uint32_t n, std::span<const std::uint32_t> offsets);
Graph disjoint_cliques(std::uint32_t n, std::uint32_t d);

Graph build_graph(const GeneratorSpec& spec);

}  // namespace perc
