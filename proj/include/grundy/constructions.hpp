#pragma once

// Explicit witness sequences from the constructive lower-bound arguments:
// direct-product interleaving, lexicographic layer blocks, strong-product
// per-step blocks and Cartesian ordering prefixes. Every bundle is checked
// by the legality checker at construction time, so a returned bundle is a
// machine-verified lower-bound certificate independent of the exact solver.

#include <string_view>
#include <vector>

#include "grundy/products.hpp"
#include "grundy/solver.hpp"

namespace grundy {

enum class WitnessSource {
  DirectInterleave,
  LexLayerBlocks,
  StrongBlocksFromG,   // closed sequence over H, blocks from G
  StrongBlocksFromH,   // closed sequence over G, blocks from H
  StrongABlocksFromG,  // A-steps get total blocks from G
  StrongABlocksFromH,
  CartesianLexPrefix,
  CartesianAntilexPrefix,
};

std::string_view witness_source_name(WitnessSource s);

struct WitnessBundle {
  ProductGraph product;
  VertexSequence sequence;
  int claimed_length = 0;
  WitnessSource source = WitnessSource::DirectInterleave;
};

// Row-major interleaving of two total witnesses; length |sg| * |sh|.
WitnessBundle direct_product_witness(const Graph& g, const Graph& h,
                                     const std::vector<int>& sg,
                                     const std::vector<int>& sh);

// Layer blocks over a closed sequence d of g: isolated steps replay the
// whole h-witness inside their layer, the rest contribute one vertex.
// Length a(d)(|sh|-1)+|d|. variant selects Total or L legality; h (and g,
// for L) must have no isolated vertices.
WitnessBundle lexicographic_witness(const Graph& g, const Graph& h,
                                    const std::vector<int>& d,
                                    const std::vector<int>& sh,
                                    Variant variant = Variant::Total);

// Convenience: picks the objective-optimal closed sequence of g and an
// optimal witness of h, then builds the bundle above.
WitnessBundle best_lexicographic_witness(const Graph& g, const Graph& h,
                                         Variant variant = Variant::Total,
                                         const SolverOptions& opts = {});

// The four per-step block constructions (two objectives, two orientations);
// each uses the objective-optimal closed sequence of one factor.
std::vector<WitnessBundle> strong_witnesses(const Graph& g, const Graph& h,
                                            const SolverOptions& opts = {});

enum class GridKind { PathPath, PathCycle, CycleCycle };

// The longer of the lexicographic / antilexicographic ordering prefixes:
// PP k*l-min(k,l), PC k*l-min(2k,l), CC k*l-min(2k,2l). Requires k,l >= 3.
WitnessBundle cartesian_witness(GridKind kind, int k, int l);

}  // namespace grundy
