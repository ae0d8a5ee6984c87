#include "grundy/solver.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>

namespace grundy {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Total: return "total";
    case Variant::Closed: return "closed";
    case Variant::Z: return "z";
    case Variant::L: return "l";
  }
  return "?";
}

Variant variant_from_name(std::string_view name) {
  if (name == "total" || name == "t") return Variant::Total;
  if (name == "closed" || name == "grundy") return Variant::Closed;
  if (name == "z" || name == "Z") return Variant::Z;
  if (name == "l" || name == "L") return Variant::L;
  throw std::invalid_argument("unknown variant: " + std::string(name));
}

SearchCapExceeded::SearchCapExceeded(const std::string& what_refused, int size_value,
                                     int cap_value)
    : std::runtime_error(what_refused + ": size " + std::to_string(size_value) +
                         " exceeds cap " + std::to_string(cap_value)),
      size(size_value),
      cap(cap_value) {}

// ---------------------------------------------------------------------------
// Legality checking (public, VertexSet based; the search engines below keep
// their own fixed-width masks).

namespace {

struct VariantRules {
  bool legal_closed;  // legality set is N[v] instead of N(v)
  bool accum_closed;  // accumulated union grows by N[v] instead of N(v)
};

VariantRules rules_for(Variant v) {
  switch (v) {
    case Variant::Total: return {false, false};
    case Variant::Closed: return {true, true};
    case Variant::Z: return {false, true};
    case Variant::L: return {true, false};
  }
  return {false, false};
}

}  // namespace

LegalityReport is_legal_sequence(const Graph& g, const std::vector<int>& seq,
                                 Variant variant) {
  for (int v : seq)
    if (v < 0 || v >= g.n) throw std::invalid_argument("sequence vertex out of range");
  VariantRules rules = rules_for(variant);
  LegalityReport report;
  VertexSet used(g.n);
  VertexSet covered(g.n);
  VertexSequence out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int v = seq[i];
    if (used.test(v)) {
      report.failed_step = static_cast<int>(i);
      report.reason = "repeated vertex " + std::to_string(v) + " at step " +
                      std::to_string(i + 1);
      return report;
    }
    VertexSet legal_set = rules.legal_closed ? g.closed_neighborhood(v) : g.adj[v];
    if ((legal_set - covered).empty()) {
      report.failed_step = static_cast<int>(i);
      report.reason = "step " + std::to_string(i + 1) + " (vertex " + std::to_string(v) +
                      "): empty residual, nothing left to footprint";
      return report;
    }
    VertexSet accum_set = rules.accum_closed ? g.closed_neighborhood(v) : g.adj[v];
    out.vertices.push_back(v);
    out.footprints.push_back(accum_set - covered);
    covered |= accum_set;
    used.set(v);
  }
  report.legal = true;
  report.sequence = std::move(out);
  return report;
}

std::vector<StepCategory> closed_step_categories(const Graph& g,
                                                 const std::vector<int>& seq) {
  VertexSet cc(g.n), ou(g.n);
  std::vector<StepCategory> cats;
  cats.reserve(seq.size());
  for (int v : seq) {
    StepCategory c;
    c.self_new = !cc.test(v);
    c.nbr_new = !(g.adj[v] - cc).empty();
    c.isolated = !ou.test(v);
    cats.push_back(c);
    cc |= g.closed_neighborhood(v);
    ou |= g.adj[v];
  }
  return cats;
}

SequenceStatsABC sequence_stats(const Graph& g, const std::vector<int>& seq) {
  LegalityReport rep = is_legal_sequence(g, seq, Variant::Closed);
  if (!rep.legal)
    throw std::invalid_argument("illegal closed sequence: " + rep.reason);
  SequenceStatsABC s;
  s.length = static_cast<int>(seq.size());
  for (StepCategory c : closed_step_categories(g, seq)) {
    if (c.isolated) ++s.a;
    if (c.nbr_new && !c.self_new) ++s.b;
    if (c.nbr_new && c.self_new) ++s.c;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Fixed-width masks for the search engines.

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <int W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

  Mask operator|(const Mask& o) const {
    Mask r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Mask andnot(const Mask& o) const {
    Mask r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  Mask operator&(const Mask& o) const {
    Mask r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  bool none() const {
    for (int i = 0; i < W; ++i)
      if (w[i]) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (int i = 0; i < W; ++i) c += __builtin_popcountll(w[i]);
    return c;
  }
  bool operator==(const Mask&) const = default;
};

template <int W>
struct MaskHash {
  std::size_t operator()(const Mask<W>& m) const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (int i = 0; i < W; ++i) h = mix64(h ^ mix64(m.w[i]));
    return static_cast<std::size_t>(h);
  }
};

template <int W>
Mask<W> to_mask(const VertexSet& s) {
  Mask<W> m;
  const auto& words = s.words();
  for (std::size_t i = 0; i < words.size() && i < W; ++i) m.w[i] = words[i];
  return m;
}

template <int W>
Mask<2 * W> pack_pair(const Mask<W>& a, const Mask<W>& b) {
  Mask<2 * W> k;
  for (int i = 0; i < W; ++i) {
    k.w[i] = a.w[i];
    k.w[W + i] = b.w[i];
  }
  return k;
}

// ---------------------------------------------------------------------------
// Engine for Total/Closed/Z: memoized DFS keyed on the accumulated union.
// Candidates are restricted to a vertex subset (one component, or one side
// of a bipartite component for the Total variant). Branching tries small
// coverage gains first: long sequences spend coverage slowly, and the
// per-child bound 1 + |uncovered after child| then shrinks monotonically
// along the loop, so the first cut ends it.

template <int W>
class SeqEngine {
 public:
  SeqEngine(const std::vector<Mask<W>>& legal, const std::vector<Mask<W>>& accum,
            const std::vector<int>& candidates)
      : legal_(legal), accum_(accum), cands_(candidates) {
    for (int v : cands_) universe_ = universe_ | accum_[v];
    memo_.reserve(1 << 12);
  }

  int best_from(const Mask<W>& covered) {
    auto it = memo_.find(covered);
    if (it != memo_.end()) return it->second;
    ++expanded_;
    int uncovered = universe_.andnot(covered).count();
    scratch_.clear();
    for (int v : cands_) {
      if (legal_[v].andnot(covered).none()) continue;
      scratch_.emplace_back(accum_[v].andnot(covered).count(), v);
    }
    std::sort(scratch_.begin(), scratch_.end());
    auto moves = scratch_;  // recursion reuses scratch_
    int node_bound = std::min<int>(uncovered, static_cast<int>(moves.size()));
    int best = 0;
    for (auto [gain, v] : moves) {
      if (best >= 1 + (uncovered - gain)) break;
      int r = 1 + best_from(covered | accum_[v]);
      best = std::max(best, r);
      if (best == node_bound) break;
    }
    memo_.emplace(covered, static_cast<std::int16_t>(best));
    return best;
  }

  // Greedy re-descent along memoized optima, lowest vertex index first.
  std::vector<int> reconstruct(Mask<W> covered, int need) {
    std::vector<int> seq;
    while (need > 0) {
      bool advanced = false;
      for (int v = 0; v < static_cast<int>(legal_.size()) && !advanced; ++v) {
        if (!allowed(v)) continue;
        if (legal_[v].andnot(covered).none()) continue;
        if (1 + best_from(covered | accum_[v]) != need) continue;
        seq.push_back(v);
        covered = covered | accum_[v];
        --need;
        advanced = true;
      }
      if (!advanced) throw std::logic_error("witness reconstruction failed");
    }
    return seq;
  }

  std::uint64_t expanded() const { return expanded_; }
  std::uint64_t memo_size() const { return memo_.size(); }

 private:
  bool allowed(int v) const {
    return std::find(cands_.begin(), cands_.end(), v) != cands_.end();
  }

  const std::vector<Mask<W>>& legal_;
  const std::vector<Mask<W>>& accum_;
  std::vector<int> cands_;
  Mask<W> universe_;
  std::unordered_map<Mask<W>, std::int16_t, MaskHash<W>> memo_;
  std::vector<std::pair<int, int>> scratch_;
  std::uint64_t expanded_ = 0;
};

// L variant: distinct vertices, so the state is (covered, used). A step may
// cover nothing new when the chosen vertex itself is the fresh element, so
// the bound adds the count of unused not-yet-dominated candidates.

template <int W>
class SeqEngineL {
 public:
  SeqEngineL(const std::vector<Mask<W>>& closed, const std::vector<Mask<W>>& open,
             const std::vector<int>& candidates)
      : closed_(closed), open_(open), cands_(candidates) {
    for (int v : cands_) {
      universe_ = universe_ | open_[v];
      cand_mask_.set(v);
    }
    memo_.reserve(1 << 12);
  }

  int best_from(const Mask<W>& covered, const Mask<W>& used) {
    auto key = pack_pair(covered, used);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ++expanded_;
    int uncovered = universe_.andnot(covered).count();
    int spare = cand_mask_.andnot(used).andnot(covered).count();
    scratch_.clear();
    for (int v : cands_) {
      if (used.test(v)) continue;
      if (closed_[v].andnot(covered).none()) continue;
      scratch_.emplace_back(open_[v].andnot(covered).count(), v);
    }
    std::sort(scratch_.begin(), scratch_.end());
    auto moves = scratch_;
    int best = 0;
    for (auto [gain, v] : moves) {
      if (best >= 1 + (uncovered - gain) + spare) continue;
      Mask<W> used2 = used;
      used2.set(v);
      int r = 1 + best_from(covered | open_[v], used2);
      best = std::max(best, r);
      if (best == uncovered + spare) break;
    }
    memo_.emplace(key, static_cast<std::int16_t>(best));
    return best;
  }

  std::vector<int> reconstruct(Mask<W> covered, Mask<W> used, int need) {
    std::vector<int> seq;
    while (need > 0) {
      bool advanced = false;
      for (int v = 0; v < static_cast<int>(closed_.size()) && !advanced; ++v) {
        if (!cand_mask_.test(v) || used.test(v)) continue;
        if (closed_[v].andnot(covered).none()) continue;
        Mask<W> used2 = used;
        used2.set(v);
        if (1 + best_from(covered | open_[v], used2) != need) continue;
        seq.push_back(v);
        covered = covered | open_[v];
        used = used2;
        --need;
        advanced = true;
      }
      if (!advanced) throw std::logic_error("witness reconstruction failed");
    }
    return seq;
  }

  std::uint64_t expanded() const { return expanded_; }
  std::uint64_t memo_size() const { return memo_.size(); }

 private:
  const std::vector<Mask<W>>& closed_;
  const std::vector<Mask<W>>& open_;
  std::vector<int> cands_;
  Mask<W> universe_, cand_mask_;
  std::unordered_map<Mask<2 * W>, std::int16_t, MaskHash<2 * W>> memo_;
  std::vector<std::pair<int, int>> scratch_;
  std::uint64_t expanded_ = 0;
};

template <int W>
void build_masks(const Graph& g, std::vector<Mask<W>>& open,
                 std::vector<Mask<W>>& closed) {
  open.resize(g.n);
  closed.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    open[v] = to_mask<W>(g.adj[v]);
    closed[v] = open[v];
    closed[v].set(v);
  }
}

std::vector<std::vector<int>> component_vertex_lists(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u : g.adj[v].bits())
        if (!seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// 2-coloring of one connected component; false when an odd cycle exists.
bool split_component(const Graph& g, const std::vector<int>& comp,
                     std::vector<int>& side0, std::vector<int>& side1) {
  std::vector<int> color(g.n, -1);
  color[comp[0]] = 0;
  std::queue<int> q;
  q.push(comp[0]);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.adj[v].bits()) {
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        q.push(u);
      } else if (color[u] == color[v]) {
        return false;
      }
    }
  }
  for (int v : comp) (color[v] == 0 ? side0 : side1).push_back(v);
  return true;
}

template <int W>
SolveResult solve_impl(const Graph& g, Variant variant) {
  SolveResult result;
  std::vector<Mask<W>> open, closed;
  build_masks<W>(g, open, closed);
  const std::vector<Mask<W>>& legal =
      rules_for(variant).legal_closed ? closed : open;
  const std::vector<Mask<W>>& accum =
      rules_for(variant).accum_closed ? closed : open;

  std::vector<int> witness;
  for (const auto& comp : component_vertex_lists(g)) {
    std::vector<std::vector<int>> runs;
    if (variant == Variant::Total) {
      std::vector<int> side0, side1;
      if (split_component(g, comp, side0, side1)) {
        // Total steps on one side only dominate the other side, so the two
        // sides are independent subproblems.
        if (!side0.empty()) runs.push_back(std::move(side0));
        if (!side1.empty()) runs.push_back(std::move(side1));
      } else {
        runs.push_back(comp);
      }
    } else {
      runs.push_back(comp);
    }
    for (const auto& cands : runs) {
      if (variant == Variant::L) {
        SeqEngineL<W> engine(closed, open, cands);
        int value = engine.best_from(Mask<W>{}, Mask<W>{});
        auto part = engine.reconstruct(Mask<W>{}, Mask<W>{}, value);
        witness.insert(witness.end(), part.begin(), part.end());
        result.value += value;
        result.stats.states_expanded += engine.expanded();
        result.stats.memo_entries += engine.memo_size();
      } else {
        SeqEngine<W> engine(legal, accum, cands);
        int value = engine.best_from(Mask<W>{});
        auto part = engine.reconstruct(Mask<W>{}, value);
        witness.insert(witness.end(), part.begin(), part.end());
        result.value += value;
        result.stats.states_expanded += engine.expanded();
        result.stats.memo_entries += engine.memo_size();
      }
    }
  }

  LegalityReport rep = is_legal_sequence(g, witness, variant);
  if (!rep.legal || static_cast<int>(witness.size()) != result.value)
    throw std::logic_error("solver produced an invalid witness: " + rep.reason);
  result.witness = std::move(rep.sequence);
  return result;
}

template <class F>
auto dispatch_width(int n, F&& f) {
  int width = n <= 64 ? 1 : (n + 63) / 64;
  switch (width) {
    case 1: return f(std::integral_constant<int, 1>{});
    case 2: return f(std::integral_constant<int, 2>{});
    case 3: return f(std::integral_constant<int, 3>{});
    case 4: return f(std::integral_constant<int, 4>{});
    default:
      throw std::invalid_argument("exact search supports at most 256 vertices");
  }
}

}  // namespace

SolveResult solve(const Graph& g, Variant variant, const SolverOptions& opts) {
  if (g.n > opts.cap) throw SearchCapExceeded("exact search refused", g.n, opts.cap);
  auto t0 = std::chrono::steady_clock::now();
  SolveResult result = dispatch_width(g.n, [&](auto width) {
    return solve_impl<decltype(width)::value>(g, variant);
  });
  result.isolated_vertices = g.has_isolated_vertex();
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

// ---------------------------------------------------------------------------
// Weighted closed sequences.

ClosedStepWeights ClosedStepWeights::uniform(int w) {
  if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  ClosedStepWeights weights;
  weights.table_.fill(w);
  return weights;
}

ClosedStepWeights ClosedStepWeights::layered(int w) {
  if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  ClosedStepWeights weights;
  for (int bits = 0; bits < 8; ++bits) weights.table_[bits] = (bits & 1) ? w : 1;
  return weights;
}

ClosedStepWeights ClosedStepWeights::block_bc(int gamma, int gamma_t) {
  if (gamma < 0 || gamma_t < 0) throw std::invalid_argument("weights must be nonnegative");
  ClosedStepWeights weights;
  for (int bits = 0; bits < 8; ++bits) {
    bool self_new = bits & 4, nbr_new = bits & 2;
    weights.table_[bits] = nbr_new ? (self_new ? gamma + 1 : gamma) : gamma_t;
  }
  return weights;
}

ClosedStepWeights ClosedStepWeights::block_a(int gamma_t, int gamma) {
  if (gamma < 0 || gamma_t < 0) throw std::invalid_argument("weights must be nonnegative");
  ClosedStepWeights weights;
  for (int bits = 0; bits < 8; ++bits) weights.table_[bits] = (bits & 1) ? gamma_t : gamma;
  return weights;
}

int ClosedStepWeights::max_weight() const {
  return *std::max_element(table_.begin(), table_.end());
}

namespace {

template <int W>
class WeightedEngine {
 public:
  WeightedEngine(const Graph& g, const ClosedStepWeights& w) : n_(g.n), weights_(w) {
    build_masks<W>(g, open_, closed_);
    for (int v = 0; v < n_; ++v) full_ = full_ | closed_[v];
    maxw_ = weights_.max_weight();
  }

  StepCategory category(int v, const Mask<W>& cc, const Mask<W>& ou) const {
    StepCategory c;
    c.self_new = !cc.test(v);
    c.nbr_new = !open_[v].andnot(cc).none();
    c.isolated = !ou.test(v);
    return c;
  }

  long long best_from(const Mask<W>& cc, const Mask<W>& ou) {
    auto key = pack_pair(cc, ou);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ++expanded_;
    int uncovered = full_.andnot(cc).count();
    std::vector<std::pair<int, int>> moves;
    for (int v = 0; v < n_; ++v) {
      if (closed_[v].andnot(cc).none()) continue;
      moves.emplace_back(closed_[v].andnot(cc).count(), v);
    }
    std::sort(moves.begin(), moves.end());
    long long best = 0;
    for (auto [gain, v] : moves) {
      if (best >= static_cast<long long>(maxw_) * (1 + uncovered - gain)) break;
      long long r = weights_.weight(category(v, cc, ou)) +
                    best_from(cc | closed_[v], ou | open_[v]);
      best = std::max(best, r);
    }
    memo_.emplace(key, best);
    return best;
  }

  std::vector<int> reconstruct(Mask<W> cc, Mask<W> ou, long long need) {
    std::vector<int> seq;
    while (need > 0) {
      bool advanced = false;
      for (int v = 0; v < n_ && !advanced; ++v) {
        if (closed_[v].andnot(cc).none()) continue;
        long long r = weights_.weight(category(v, cc, ou)) +
                      best_from(cc | closed_[v], ou | open_[v]);
        if (r != need) continue;
        seq.push_back(v);
        need -= weights_.weight(category(v, cc, ou));
        cc = cc | closed_[v];
        ou = ou | open_[v];
        advanced = true;
      }
      if (!advanced) throw std::logic_error("weighted witness reconstruction failed");
    }
    return seq;
  }

  std::uint64_t expanded() const { return expanded_; }
  std::uint64_t memo_size() const { return memo_.size(); }

 private:
  int n_;
  ClosedStepWeights weights_;
  int maxw_ = 0;
  std::vector<Mask<W>> open_, closed_;
  Mask<W> full_;
  std::unordered_map<Mask<2 * W>, long long, MaskHash<2 * W>> memo_;
  std::uint64_t expanded_ = 0;
};

}  // namespace

WeightedSolveResult max_weighted_closed_sequence(const Graph& g,
                                                 const ClosedStepWeights& w,
                                                 const SolverOptions& opts) {
  if (g.n > opts.cap) throw SearchCapExceeded("exact search refused", g.n, opts.cap);
  auto t0 = std::chrono::steady_clock::now();
  WeightedSolveResult result = dispatch_width(g.n, [&](auto width) {
    constexpr int W = decltype(width)::value;
    WeightedEngine<W> engine(g, w);
    WeightedSolveResult r;
    r.value = engine.best_from(Mask<W>{}, Mask<W>{});
    r.witness.vertices = engine.reconstruct(Mask<W>{}, Mask<W>{}, r.value);
    r.search.states_expanded = engine.expanded();
    r.search.memo_entries = engine.memo_size();
    return r;
  });
  LegalityReport rep = is_legal_sequence(g, result.witness.vertices, Variant::Closed);
  if (!rep.legal) throw std::logic_error("weighted solver witness illegal");
  result.witness = rep.sequence;
  result.stats = sequence_stats(g, result.witness.vertices);
  result.search.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

// ---------------------------------------------------------------------------
// Longest closed sequence whose final step footprints a non-self vertex.

namespace {

template <int W>
class FinalFootprintEngine {
 public:
  explicit FinalFootprintEngine(const Graph& g) : n_(g.n) {
    build_masks<W>(g, open_, closed_);
    for (int v = 0; v < n_; ++v) full_ = full_ | closed_[v];
  }

  // -1 when no qualifying sequence exists from this state.
  int best_from(const Mask<W>& cc) {
    auto it = memo_.find(cc);
    if (it != memo_.end()) return it->second;
    int uncovered = full_.andnot(cc).count();
    std::vector<std::pair<int, int>> moves;
    for (int v = 0; v < n_; ++v) {
      if (closed_[v].andnot(cc).none()) continue;
      moves.emplace_back(closed_[v].andnot(cc).count(), v);
    }
    std::sort(moves.begin(), moves.end());
    int best = -1;
    for (auto [gain, v] : moves) {
      if (best >= 1 + (uncovered - gain)) break;
      Mask<W> fp = closed_[v].andnot(cc);
      if (fp.test(v)) {
        Mask<W> fp_others = fp;
        fp_others.w[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        if (!fp_others.none()) best = std::max(best, 1);
      } else {
        best = std::max(best, 1);  // footprint is nonempty and excludes v
      }
      int r = best_from(cc | closed_[v]);
      if (r >= 0) best = std::max(best, 1 + r);
    }
    memo_.emplace(cc, static_cast<std::int16_t>(best));
    return best;
  }

  std::vector<int> reconstruct(Mask<W> cc, int need) {
    std::vector<int> seq;
    while (need > 0) {
      bool advanced = false;
      for (int v = 0; v < n_ && !advanced; ++v) {
        Mask<W> fp = closed_[v].andnot(cc);
        if (fp.none()) continue;
        if (need == 1) {
          Mask<W> fp_others = fp;
          if (fp_others.test(v))
            fp_others.w[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
          if (fp_others.none()) continue;
        } else if (1 + best_from(cc | closed_[v]) != need) {
          continue;
        }
        seq.push_back(v);
        cc = cc | closed_[v];
        --need;
        advanced = true;
      }
      if (!advanced) throw std::logic_error("final-footprint reconstruction failed");
    }
    return seq;
  }

 private:
  int n_;
  std::vector<Mask<W>> open_, closed_;
  Mask<W> full_;
  std::unordered_map<Mask<W>, std::int16_t, MaskHash<W>> memo_;
};

}  // namespace

std::optional<VertexSequence> closed_witness_with_neighbor_final_footprint(
    const Graph& g, const SolverOptions& opts) {
  int gamma = solve(g, Variant::Closed, opts).value;
  return dispatch_width(g.n, [&](auto width) -> std::optional<VertexSequence> {
    constexpr int W = decltype(width)::value;
    FinalFootprintEngine<W> engine(g);
    if (engine.best_from(Mask<W>{}) != gamma) return std::nullopt;
    std::vector<int> seq = engine.reconstruct(Mask<W>{}, gamma);
    LegalityReport rep = is_legal_sequence(g, seq, Variant::Closed);
    if (!rep.legal) throw std::logic_error("final-footprint witness illegal");
    return rep.sequence;
  });
}

}  // namespace grundy
