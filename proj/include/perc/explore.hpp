#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perc/graph.hpp"
#include "perc/rng.hpp"

namespace perc {

// Sequential i.i.d. Bernoulli(p) view of the counter RNG: bit i of stream
// (p, seed) is draw_at(seed, i) < cut. Replaying (p, seed) reproduces the
// identical sequence; consumed counts every draw.
class CoinStream {
public:
  CoinStream(double p, std::uint64_t seed, bool retain_log = false);
  CoinStream(CoinThreshold threshold, std::uint64_t seed, bool retain_log = false);

  bool next();
  // Fills out with the next out.size() bits (bulk path through the kernels).
  void take(std::span<std::uint8_t> out);

  std::uint64_t consumed() const noexcept { return consumed_; }
  double p() const noexcept { return threshold_.probability(); }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<std::uint8_t>& log() const noexcept { return log_; }

private:
  CoinThreshold threshold_;
  std::uint64_t seed_;
  std::uint64_t consumed_ = 0;
  bool retain_;
  std::vector<std::uint8_t> log_;
};

enum class SigmaMode { identity, seeded_permutation };

const char* sigma_mode_to_string(SigmaMode mode) noexcept;
SigmaMode sigma_mode_from_string(const std::string& name);

// One connected component's discovery window.
struct EpochRecord {
  std::uint32_t component_id = 0;
  std::vector<Vertex> vertices;  // everything that passed through the stack, sorted
  std::uint64_t first_query = 0;
  std::uint64_t last_query = 0;
  std::uint32_t max_stack = 0;
  std::vector<Vertex> path_at_max;  // a path in G of exactly max_stack vertices
};

// Vertex classes during a run: untouched / live stack / explored / revealed
// outside R.
inline constexpr std::uint8_t kStatusT = 0;
inline constexpr std::uint8_t kStatusU = 1;
inline constexpr std::uint8_t kStatusS = 2;
inline constexpr std::uint8_t kStatusW = 3;

struct StepEvent {
  enum class Kind { root_heads, child_heads, tails, pop };
  Kind kind;
  Vertex vertex;
  std::uint64_t query_index;  // coin flips so far (1-based at flip events)
};

// Read-only snapshot handed to observers after every transition.
struct DfsSnapshot {
  std::span<const std::uint8_t> status;  // by vertex id
  std::span<const Vertex> stack;         // bottom to top; spans a path in G
  std::uint64_t query_index = 0;
  bool epoch_open = false;
  std::uint64_t epoch_first_query = 0;
  std::uint32_t epoch_heads = 0;  // vertices pushed during the open epoch
};

using StepObserver = std::function<void(const StepEvent&, const DfsSnapshot&)>;

struct RunOptions {
  SigmaMode sigma_mode = SigmaMode::identity;
  std::uint64_t sigma_seed = 0;
  bool trace = false;            // retain transitions; limited to n <= 10^4
  bool retain_coin_log = false;  // keep coin results in query order
  StepObserver observer;
};

struct RunReport {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  SigmaMode sigma_mode = SigmaMode::identity;
  std::uint64_t sigma_seed = 0;
  std::uint64_t total_queries = 0;
  VertexSet r;  // final S
  std::vector<EpochRecord> epochs;
  std::uint32_t largest_component = 0;
  std::uint32_t second_component = 0;
  std::uint32_t max_stack_global = 0;
  std::vector<std::uint8_t> coin_log;      // query order, when retained
  std::vector<StepEvent> transitions;      // when traced
  std::string source;                      // family tag or file hash (CSV only)
};

// The vertex-exposure DFS: explores G while revealing R through one coin flip
// per vertex at first query, maintaining the S/T/U/W partition and recording
// one epoch per connected component of G[R].
RunReport run_dfs_percolation(const Graph& g, double p, std::uint64_t seed,
                              const RunOptions& options = {});
RunReport run_dfs_percolation(const Graph& g, CoinThreshold threshold, std::uint64_t seed,
                              const RunOptions& options = {});

// Independent-coins reference: vertex v joins R iff draw_at(seed, v) is heads,
// exactly the draws the DFS consumes, so a same-seed DFS run must produce the
// same R and the same component partition.
struct OracleSample {
  VertexSet r;
  std::vector<std::vector<Vertex>> components;
};
OracleSample direct_sample_oracle(const Graph& g, double p, std::uint64_t seed);
OracleSample direct_sample_oracle(const Graph& g, CoinThreshold threshold, std::uint64_t seed);

// Certified lower bound on the longest path in G[R]: the deepest stack the run
// reached, with the witness path.
struct PathWitness {
  std::uint32_t length = 0;
  std::vector<Vertex> path;
};
PathWitness longest_path_lower_bound(const RunReport& report);

// B = first third of the path, C = last third; the first B-C edge (if any)
// closes a cycle with the path segment between its endpoints. Guaranteed to
// exist when |B|, |C| > lambda * n / d.
std::optional<std::vector<Vertex>> find_cycle_from_path(const Graph& g,
                                                        std::span<const Vertex> path,
                                                        double lambda);

}  // namespace perc
