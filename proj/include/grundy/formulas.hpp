#pragma once

// Closed-form values and bound formulas for path/cycle products, plus the
// independent combinatorial oracles (vertex cover, independence, biclique
// cover/partition, skew zero forcing) used to cross-validate the solver.

#include <optional>
#include <string>

#include "grundy/graph.hpp"
#include "grundy/products.hpp"

namespace grundy {

// Piecewise values of the longest open-neighborhood sequence on paths and
// cycles: even path l, odd path l-1; even cycle l-2, odd cycle l-1.
int gamma_t_path(int length);   // length >= 2
int gamma_t_cycle(int length);  // length >= 3

enum class Family { Path, Cycle };

std::string_view family_name(Family f);

struct FactorSpec {
  Family family = Family::Path;
  int size = 0;
};

Graph build_factor(const FactorSpec& spec);
int gamma_t_of(const FactorSpec& spec);

enum class BoundStatus { Tight, Gap, SolverUnavailable };

std::string_view bound_status_name(BoundStatus s);

struct BoundReport {
  ProductKind kind = ProductKind::Direct;
  FactorSpec g, h;
  int lower = 0, upper = 0;
  std::string lower_src, upper_src;
  std::optional<int> exact;  // solver value, attached separately

  bool formula_exact() const { return lower == upper; }
  BoundStatus status() const;
  void attach_exact(int value);  // throws std::logic_error if out of bounds
};

// Exact value (lower == upper) where a closed formula exists, otherwise the
// best known lower/upper bracketing. Parameters outside a statement's
// hypotheses are refused with the hypothesis named.
BoundReport predict(ProductKind kind, FactorSpec g, FactorSpec h);

int vertex_cover_number(const Graph& g);   // n <= 24
int independence_number(const Graph& g);   // n <= 24

int biclique_cover_number(const Graph& g);      // |E| <= 16
int biclique_partition_number(const Graph& g);  // |E| <= 16

// Rule: any vertex, filled or not, with exactly one unfilled neighbor
// forces that neighbor.
VertexSet skew_forcing_closure(const Graph& g, VertexSet filled);
int skew_zero_forcing_number(const Graph& g);  // n <= 20

}  // namespace grundy
