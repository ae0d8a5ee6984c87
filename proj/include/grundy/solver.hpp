#pragma once

// Exact computation of the four Grundy domination invariants and of
// maximum-weight legal closed-neighborhood sequences, by memoized
// depth-first search over dominated-set states.
//
// Legality and accumulation per variant, for a step at vertex v given the
// union U accumulated by earlier steps:
//   Total:  legal iff N(v)  \ U != {},  U grows by N(v)
//   Closed: legal iff N[v]  \ U != {},  U grows by N[v]
//   Z:      legal iff N(v)  \ U != {},  U grows by N[v]
//   L:      legal iff N[v]  \ U != {},  U grows by N(v), vertices distinct
// For Total/Closed/Z a chosen vertex can never become legal again, so the
// memo key is the accumulated union alone; L additionally keys on the set
// of used vertices.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

enum class Variant { Total, Closed, Z, L };

std::string_view variant_name(Variant v);
Variant variant_from_name(std::string_view name);

inline constexpr int kDefaultSearchCap = 36;

struct SolverOptions {
  int cap = kDefaultSearchCap;
};

struct SearchCapExceeded : std::runtime_error {
  SearchCapExceeded(const std::string& what_refused, int size, int cap_value);
  int size;
  int cap;
};

struct SearchStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t memo_entries = 0;
  double wall_ms = 0.0;
};

struct VertexSequence {
  std::vector<int> vertices;
  std::vector<VertexSet> footprints;  // newly accumulated set per step
};

struct SolveResult {
  int value = 0;
  VertexSequence witness;
  SearchStats stats;
  bool isolated_vertices = false;
};

SolveResult solve(const Graph& g, Variant variant, const SolverOptions& opts = {});

struct LegalityReport {
  bool legal = false;
  int failed_step = -1;  // 0-based index of the first offending step
  std::string reason;
  VertexSequence sequence;  // footprint decomposition, filled when legal
};

LegalityReport is_legal_sequence(const Graph& g, const std::vector<int>& seq,
                                 Variant variant);

// Step categories of a closed-neighborhood sequence, per the state
// (closed union C, open union O) right before the step:
//   self_new: v not in C      nbr_new: N(v) not subset of C
//   isolated: v not in O  (v is adjacent to no earlier chosen vertex)
struct StepCategory {
  bool self_new = false;
  bool nbr_new = false;
  bool isolated = false;
};

// a = #isolated steps, b = #(!self_new && nbr_new), c = #(self_new && nbr_new)
struct SequenceStatsABC {
  int a = 0, b = 0, c = 0, length = 0;
};

// Nonnegative weight per category triple.
class ClosedStepWeights {
 public:
  static ClosedStepWeights uniform(int w);
  // isolated ? w : 1  -- the a(D)(w-1)+|D| objective
  static ClosedStepWeights layered(int w);
  // nbr_new ? (self_new ? gamma+1 : gamma) : gamma_t
  static ClosedStepWeights block_bc(int gamma, int gamma_t);
  // isolated ? gamma_t : gamma
  static ClosedStepWeights block_a(int gamma_t, int gamma);

  int weight(StepCategory c) const {
    return table_[(c.self_new ? 4 : 0) | (c.nbr_new ? 2 : 0) | (c.isolated ? 1 : 0)];
  }
  int max_weight() const;

 private:
  std::array<int, 8> table_{};
};

struct WeightedSolveResult {
  long long value = 0;
  VertexSequence witness;
  SequenceStatsABC stats;
  SearchStats search;
};

// Maximum of sum of step weights over all legal closed-neighborhood
// sequences; memo key is the pair (closed union, open union).
WeightedSolveResult max_weighted_closed_sequence(const Graph& g,
                                                 const ClosedStepWeights& w,
                                                 const SolverOptions& opts = {});

// Throws std::invalid_argument carrying the legality report when the
// sequence is not a legal closed-neighborhood sequence.
SequenceStatsABC sequence_stats(const Graph& g, const std::vector<int>& seq);

std::vector<StepCategory> closed_step_categories(const Graph& g,
                                                 const std::vector<int>& seq);

// A maximum-length legal closed sequence whose final step footprints some
// vertex other than itself, when one exists at the optimum; used by the
// strong-product block construction.
std::optional<VertexSequence> closed_witness_with_neighbor_final_footprint(
    const Graph& g, const SolverOptions& opts = {});

}  // namespace grundy
