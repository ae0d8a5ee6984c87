#include "grundy/constructions.hpp"

#include <algorithm>

#include "grundy/formulas.hpp"

namespace grundy {

std::string_view witness_source_name(WitnessSource s) {
  switch (s) {
    case WitnessSource::DirectInterleave: return "direct-interleave";
    case WitnessSource::LexLayerBlocks: return "lex-layer-blocks";
    case WitnessSource::StrongBlocksFromG: return "strong-blocks-from-g";
    case WitnessSource::StrongBlocksFromH: return "strong-blocks-from-h";
    case WitnessSource::StrongABlocksFromG: return "strong-a-blocks-from-g";
    case WitnessSource::StrongABlocksFromH: return "strong-a-blocks-from-h";
    case WitnessSource::CartesianLexPrefix: return "cartesian-lex-prefix";
    case WitnessSource::CartesianAntilexPrefix: return "cartesian-antilex-prefix";
  }
  return "?";
}

namespace {

WitnessBundle seal(ProductGraph product, std::vector<int> seq, int claimed,
                   WitnessSource source, Variant variant) {
  LegalityReport rep = is_legal_sequence(product.graph, seq, variant);
  if (!rep.legal)
    throw std::logic_error("constructed witness is illegal: " + rep.reason);
  if (static_cast<int>(seq.size()) != claimed)
    throw std::logic_error("constructed witness length " +
                           std::to_string(seq.size()) + " != claimed " +
                           std::to_string(claimed));
  WitnessBundle b;
  b.product = std::move(product);
  b.sequence = std::move(rep.sequence);
  b.claimed_length = claimed;
  b.source = source;
  return b;
}

void require_legal_input(const Graph& g, const std::vector<int>& seq, Variant variant,
                         const char* role) {
  LegalityReport rep = is_legal_sequence(g, seq, variant);
  if (!rep.legal)
    throw std::invalid_argument(std::string(role) + " is not legal: " + rep.reason);
}

}  // namespace

WitnessBundle direct_product_witness(const Graph& g, const Graph& h,
                                     const std::vector<int>& sg,
                                     const std::vector<int>& sh) {
  require_legal_input(g, sg, Variant::Total, "g-witness");
  require_legal_input(h, sh, Variant::Total, "h-witness");
  ProductGraph p = direct_product(g, h);
  std::vector<int> seq;
  seq.reserve(sg.size() * sh.size());
  for (int x : sg)
    for (int y : sh) seq.push_back(p.index(x, y));
  int claimed = static_cast<int>(sg.size() * sh.size());
  return seal(std::move(p), std::move(seq), claimed, WitnessSource::DirectInterleave,
              Variant::Total);
}

WitnessBundle lexicographic_witness(const Graph& g, const Graph& h,
                                    const std::vector<int>& d,
                                    const std::vector<int>& sh, Variant variant) {
  if (variant != Variant::Total && variant != Variant::L)
    throw std::invalid_argument("lexicographic witness supports Total and L only");
  if (h.has_isolated_vertex())
    throw std::invalid_argument("hypothesis violated: h has an isolated vertex");
  if (variant == Variant::L && g.has_isolated_vertex())
    throw std::invalid_argument(
        "hypothesis violated: the L-variant needs g without isolated vertices");
  require_legal_input(g, d, Variant::Closed, "closed sequence d");
  require_legal_input(h, sh, variant, "h-witness");
  if (sh.empty()) throw std::invalid_argument("h-witness must be nonempty");

  std::vector<StepCategory> cats = closed_step_categories(g, d);
  ProductGraph p = lexicographic_product(g, h);
  std::vector<int> seq;
  int isolated_steps = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (cats[i].isolated) {
      ++isolated_steps;
      for (int y : sh) seq.push_back(p.index(d[i], y));
    } else {
      seq.push_back(p.index(d[i], sh[0]));
    }
  }
  int claimed = isolated_steps * (static_cast<int>(sh.size()) - 1) +
                static_cast<int>(d.size());
  return seal(std::move(p), std::move(seq), claimed, WitnessSource::LexLayerBlocks,
              variant);
}

WitnessBundle best_lexicographic_witness(const Graph& g, const Graph& h,
                                         Variant variant, const SolverOptions& opts) {
  SolveResult hr = solve(h, variant, opts);
  WeightedSolveResult d =
      max_weighted_closed_sequence(g, ClosedStepWeights::layered(hr.value), opts);
  return lexicographic_witness(g, h, d.witness.vertices, hr.witness.vertices, variant);
}

namespace {

// One orientation of the two strong-product block constructions. Blocks are
// sequences in the `blocks` factor played inside the layer of each step of
// a closed sequence in the `steps` factor. `transposed` says the steps
// factor is g (so block vertices are the second coordinate).
WitnessBundle strong_block_bundle(const Graph& blocks_factor, const Graph& steps_factor,
                                  ProductGraph p, bool transposed, bool use_bc_blocks,
                                  const SolverOptions& opts, WitnessSource source) {
  SolveResult total = solve(blocks_factor, Variant::Total, opts);
  SolveResult closed = solve(blocks_factor, Variant::Closed, opts);
  int gamma = closed.value;
  int gamma_t = total.value;

  ClosedStepWeights weights = use_bc_blocks
                                  ? ClosedStepWeights::block_bc(gamma, gamma_t)
                                  : ClosedStepWeights::block_a(gamma_t, gamma);
  WeightedSolveResult d = max_weighted_closed_sequence(steps_factor, weights, opts);
  std::vector<StepCategory> cats =
      closed_step_categories(steps_factor, d.witness.vertices);

  std::vector<int> closed_block;  // gamma-sequence, last step footprints a neighbor
  int extra_vertex = -1;
  if (use_bc_blocks) {
    if (blocks_factor.has_isolated_vertex())
      throw std::invalid_argument(
          "hypothesis violated: block factor has an isolated vertex");
    auto seq = closed_witness_with_neighbor_final_footprint(blocks_factor, opts);
    if (!seq)
      throw std::logic_error(
          "no optimal closed sequence with a neighbor-footprinting final step");
    closed_block = seq->vertices;
    VertexSet last_fp = seq->footprints.back();
    last_fp.reset(closed_block.back());
    extra_vertex = last_fp.first();
  } else {
    closed_block = closed.witness.vertices;
  }

  auto emit = [&](std::vector<int>& seq, int step_vertex, int block_vertex) {
    seq.push_back(transposed ? p.index(step_vertex, block_vertex)
                             : p.index(block_vertex, step_vertex));
  };

  std::vector<int> seq;
  long long claimed = 0;
  for (std::size_t i = 0; i < d.witness.vertices.size(); ++i) {
    int y = d.witness.vertices[i];
    StepCategory c = cats[i];
    if (use_bc_blocks) {
      if (c.nbr_new && c.self_new) {  // C(D): gamma-block with the extra vertex
        for (std::size_t j = 0; j + 1 < closed_block.size(); ++j)
          emit(seq, y, closed_block[j]);
        emit(seq, y, extra_vertex);
        emit(seq, y, closed_block.back());
        claimed += gamma + 1;
      } else if (c.nbr_new) {  // B(D): plain gamma-block
        for (int x : closed_block) emit(seq, y, x);
        claimed += gamma;
      } else {  // footprints only itself: total block
        for (int x : total.witness.vertices) emit(seq, y, x);
        claimed += gamma_t;
      }
    } else {
      if (c.isolated) {
        for (int x : total.witness.vertices) emit(seq, y, x);
        claimed += gamma_t;
      } else {
        for (int x : closed_block) emit(seq, y, x);
        claimed += gamma;
      }
    }
  }
  if (claimed != d.value)
    throw std::logic_error("strong block bundle length disagrees with objective");
  return seal(std::move(p), std::move(seq), static_cast<int>(claimed), source,
              Variant::Total);
}

}  // namespace

std::vector<WitnessBundle> strong_witnesses(const Graph& g, const Graph& h,
                                            const SolverOptions& opts) {
  std::vector<WitnessBundle> out;
  out.push_back(strong_block_bundle(g, h, strong_product(g, h), false, true, opts,
                                    WitnessSource::StrongBlocksFromG));
  out.push_back(strong_block_bundle(h, g, strong_product(g, h), true, true, opts,
                                    WitnessSource::StrongBlocksFromH));
  out.push_back(strong_block_bundle(g, h, strong_product(g, h), false, false, opts,
                                    WitnessSource::StrongABlocksFromG));
  out.push_back(strong_block_bundle(h, g, strong_product(g, h), true, false, opts,
                                    WitnessSource::StrongABlocksFromH));
  return out;
}

WitnessBundle cartesian_witness(GridKind kind, int k, int l) {
  if (k < 3 || l < 3) throw std::invalid_argument("cartesian witness requires k,l >= 3");
  Graph g = (kind == GridKind::CycleCycle) ? cycle(k) : path(k);
  Graph h = (kind == GridKind::PathPath) ? path(l) : cycle(l);
  ProductGraph p = cartesian_product(g, h);

  int lex_len = 0, alex_len = 0;
  switch (kind) {
    case GridKind::PathPath: lex_len = (k - 1) * l; alex_len = (l - 1) * k; break;
    case GridKind::PathCycle: lex_len = (k - 1) * l; alex_len = (l - 2) * k; break;
    case GridKind::CycleCycle: lex_len = (k - 2) * l; alex_len = (l - 2) * k; break;
  }

  std::vector<int> seq;
  WitnessSource source;
  if (lex_len >= alex_len) {
    source = WitnessSource::CartesianLexPrefix;
    for (int v = 0; v < lex_len; ++v) seq.push_back(v);  // row-major = lexicographic
  } else {
    source = WitnessSource::CartesianAntilexPrefix;
    for (int b = 0; b < p.n_h && static_cast<int>(seq.size()) < alex_len; ++b)
      for (int a = 0; a < p.n_g && static_cast<int>(seq.size()) < alex_len; ++a)
        seq.push_back(p.index(a, b));
  }
  int claimed = std::max(lex_len, alex_len);
  return seal(std::move(p), std::move(seq), claimed, source, Variant::Total);
}

}  // namespace grundy
