#include "grundy/formulas.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "grundy/solver.hpp"

namespace grundy {

int gamma_t_path(int length) {
  if (length < 2) throw std::invalid_argument("gamma_t_path requires length >= 2");
  return length % 2 == 0 ? length : length - 1;
}

int gamma_t_cycle(int length) {
  if (length < 3) throw std::invalid_argument("gamma_t_cycle requires length >= 3");
  return length % 2 == 0 ? length - 2 : length - 1;
}

std::string_view family_name(Family f) {
  return f == Family::Path ? "path" : "cycle";
}

Graph build_factor(const FactorSpec& spec) {
  return spec.family == Family::Path ? path(spec.size) : cycle(spec.size);
}

int gamma_t_of(const FactorSpec& spec) {
  return spec.family == Family::Path ? gamma_t_path(spec.size)
                                     : gamma_t_cycle(spec.size);
}

std::string_view bound_status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::Tight: return "tight";
    case BoundStatus::Gap: return "gap";
    case BoundStatus::SolverUnavailable: return "solver-unavailable";
  }
  return "?";
}

BoundStatus BoundReport::status() const {
  if (!exact) return BoundStatus::SolverUnavailable;
  return lower == upper ? BoundStatus::Tight : BoundStatus::Gap;
}

void BoundReport::attach_exact(int value) {
  if (value < lower || value > upper)
    throw std::logic_error("exact value " + std::to_string(value) +
                           " escapes bounds [" + std::to_string(lower) + "," +
                           std::to_string(upper) + "]");
  exact = value;
}

namespace {

BoundReport exact_report(ProductKind kind, FactorSpec g, FactorSpec h, int value,
                         const std::string& src) {
  BoundReport r;
  r.kind = kind;
  r.g = g;
  r.h = h;
  r.lower = r.upper = value;
  r.lower_src = r.upper_src = src;
  return r;
}

BoundReport predict_direct(FactorSpec g, FactorSpec h) {
  // The product formula covers every path/cycle pairing: the piecewise
  // cases are exactly gamma_t(G) * gamma_t(H).
  int value = gamma_t_of(g) * gamma_t_of(h);
  return exact_report(ProductKind::Direct, g, h, value,
                      "direct product of path/cycle base values");
}

BoundReport predict_lexicographic(FactorSpec g, FactorSpec h) {
  int gamma_h = gamma_t_of(h);  // second factor must have no isolated vertex
  int k = g.size;
  int value;
  std::string src;
  if (g.family == Family::Path) {
    if (k == 2)
      throw std::invalid_argument(
          "lexicographic path formula requires k odd or k even with k != 2");
    if (k < 2) throw std::invalid_argument("lexicographic path formula requires k >= 2");
    if (k % 2 == 0) {
      value = (k / 2) * gamma_h + 1;
      src = "k/2 * gamma_t(H) + 1 (k even)";
    } else {
      value = ((k + 1) / 2) * gamma_h;
      src = "ceil(k/2) * gamma_t(H) (k odd)";
    }
  } else {
    // k = 3 is outside the formula: C_3 o H collapses every closed sequence
    // of the first factor to a single step, so the odd-case value overshoots.
    if (k < 4)
      throw std::invalid_argument("lexicographic cycle formula requires k >= 4");
    if (k % 2 == 0) {
      value = (k / 2) * gamma_h;
      src = "k/2 * gamma_t(H) (k even)";
    } else {
      value = (k / 2) * gamma_h + 1;
      src = "floor(k/2) * gamma_t(H) + 1 (k odd)";
    }
  }
  return exact_report(ProductKind::Lexicographic, g, h, value, src);
}

BoundReport predict_strong(FactorSpec g, FactorSpec h) {
  if (g.size < 3 || h.size < 3)
    throw std::invalid_argument("strong product bounds require both sizes >= 3");
  if (g.family == Family::Cycle && h.family == Family::Cycle && g.size == 3 &&
      h.size == 3)
    throw std::invalid_argument(
        "strong cycle-cycle lower bound requires max(k,l) >= 4: C_3 x C_3 "
        "collapses to K_9, whose value 2 falls below the formula");
  if (g.family == Family::Cycle && h.family == Family::Path) std::swap(g, h);
  int k = g.size, l = h.size;
  BoundReport r;
  r.kind = ProductKind::Strong;
  r.g = g;
  r.h = h;
  if (g.family == Family::Path && h.family == Family::Path) {
    bool both_odd = k % 2 == 1 && l % 2 == 1;
    r.lower = both_odd ? k * l - k - l + 2 : k * l - k - l + 3;
    r.lower_src = both_odd ? "kl-k-l+2 (k,l odd)" : "kl-k-l+3";
    r.upper = k * l - std::min(k, l);
    r.upper_src = "kl-min(k,l)";
  } else if (g.family == Family::Path && h.family == Family::Cycle) {
    bool odd_even = k % 2 == 1 && l % 2 == 0;
    r.lower = odd_even ? k * l - 2 * k - l + 3 : k * l - 2 * k - l + 4;
    r.lower_src = odd_even ? "kl-2k-l+3 (k odd, l even)" : "kl-2k-l+4";
    r.upper = k * l - std::min(2 * k, l);
    r.upper_src = "kl-min(2k,l)";
  } else {
    bool both_even = k % 2 == 0 && l % 2 == 0;
    r.lower = both_even ? k * l - 2 * k - 2 * l + 5 : k * l - 2 * k - 2 * l + 6;
    r.lower_src = both_even ? "kl-2k-2l+5 (k,l even)" : "kl-2k-2l+6";
    r.upper = k * l - std::min(2 * k, 2 * l);
    r.upper_src = "kl-min(2k,2l)";
  }
  return r;
}

BoundReport predict_cartesian(FactorSpec g, FactorSpec h) {
  if (g.family == Family::Path && h.family == Family::Path && g.size == h.size) {
    if (g.size < 1) throw std::invalid_argument("square grid requires k >= 1");
    return exact_report(ProductKind::Cartesian, g, h, g.size * g.size - g.size,
                        "square grid identity k^2-k");
  }
  if (g.size < 3 || h.size < 3)
    throw std::invalid_argument("cartesian product bounds require both sizes >= 3");
  if (g.family == Family::Cycle && h.family == Family::Path) std::swap(g, h);
  int k = g.size, l = h.size;
  BoundReport r;
  r.kind = ProductKind::Cartesian;
  r.g = g;
  r.h = h;
  if (g.family == Family::Path && h.family == Family::Path) {
    r.lower = k * l - std::min(k, l);
    r.lower_src = "kl-min(k,l) ordering prefix";
    r.upper = k * l - std::min(k / 2, l / 2);
    r.upper_src = "kl-min(floor(k/2),floor(l/2))";
  } else if (g.family == Family::Path && h.family == Family::Cycle) {
    r.lower = k * l - std::min(2 * k, l);
    r.lower_src = "kl-min(2k,l) ordering prefix";
    r.upper = k * l - std::min(k, (l + 1) / 2);
    r.upper_src = "kl-min(k,ceil(l/2))";
  } else {
    r.lower = k * l - std::min(2 * k, 2 * l);
    r.lower_src = "kl-min(2k,2l) ordering prefix";
    r.upper = k * l - std::min(k, l);
    r.upper_src = "kl-min(k,l)";
  }
  return r;
}

}  // namespace

BoundReport predict(ProductKind kind, FactorSpec g, FactorSpec h) {
  if (g.family == Family::Path && g.size < 2)
    throw std::invalid_argument("path factor requires size >= 2");
  if (h.family == Family::Path && h.size < 2)
    throw std::invalid_argument("path factor requires size >= 2");
  if (g.family == Family::Cycle && g.size < 3)
    throw std::invalid_argument("cycle factor requires size >= 3");
  if (h.family == Family::Cycle && h.size < 3)
    throw std::invalid_argument("cycle factor requires size >= 3");
  switch (kind) {
    case ProductKind::Direct: return predict_direct(g, h);
    case ProductKind::Lexicographic: return predict_lexicographic(g, h);
    case ProductKind::Strong: return predict_strong(g, h);
    case ProductKind::Cartesian: return predict_cartesian(g, h);
  }
  throw std::invalid_argument("unknown product kind");
}

// ---------------------------------------------------------------------------
// Vertex cover / independence.

namespace {

// Branch on the two endpoints of the first uncovered edge.
void vc_branch(const Graph& g, VertexSet chosen, int size, int& best) {
  if (size >= best) return;
  int pick_u = -1, pick_v = -1;
  for (int u = 0; u < g.n && pick_u < 0; ++u) {
    if (chosen.test(u)) continue;
    VertexSet open = g.adj[u] - chosen;
    int v = open.first();
    if (v >= 0) {
      pick_u = u;
      pick_v = v;
    }
  }
  if (pick_u < 0) {
    best = size;
    return;
  }
  VertexSet with_u = chosen;
  with_u.set(pick_u);
  vc_branch(g, with_u, size + 1, best);
  VertexSet with_v = chosen;
  with_v.set(pick_v);
  vc_branch(g, with_v, size + 1, best);
}

}  // namespace

int vertex_cover_number(const Graph& g) {
  if (g.n > 24) throw SearchCapExceeded("exact vertex cover refused", g.n, 24);
  int best = 0;
  {  // greedy start: take both endpoints of a maximal matching
    VertexSet chosen(g.n);
    for (auto [u, v] : g.edges())
      if (!chosen.test(u) && !chosen.test(v)) {
        chosen.set(u);
        chosen.set(v);
      }
    best = chosen.count();
  }
  vc_branch(g, VertexSet(g.n), 0, best);
  return best;
}

int independence_number(const Graph& g) {
  int beta = vertex_cover_number(g);
  return g.n - beta;
}

// ---------------------------------------------------------------------------
// Biclique cover / partition over the edge universe.

namespace {

struct EdgeIndex {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> id;  // id[u][v] = edge index or -1

  explicit EdgeIndex(const Graph& g) : edges(g.edges()), id(g.n, std::vector<int>(g.n, -1)) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      id[u][v] = id[v][u] = static_cast<int>(i);
    }
  }
};

std::uint32_t biclique_edges(const EdgeIndex& ix, const std::vector<int>& s,
                             const std::vector<int>& t) {
  std::uint32_t mask = 0;
  for (int a : s)
    for (int b : t) mask |= std::uint32_t{1} << ix.id[a][b];
  return mask;
}

// All maximal bicliques (as edge masks) via neighborhood closures.
std::vector<std::uint32_t> maximal_biclique_masks(const Graph& g, const EdgeIndex& ix) {
  std::set<std::uint32_t> masks;
  for (int t = 0; t < g.n; ++t) {
    std::vector<int> nbrs = g.adj[t].bits();
    int d = static_cast<int>(nbrs.size());
    for (int sub = 1; sub < (1 << d); ++sub) {
      VertexSet side_t = VertexSet::full(g.n);
      std::vector<int> side_s;
      for (int i = 0; i < d; ++i)
        if (sub & (1 << i)) {
          side_s.push_back(nbrs[i]);
          side_t &= g.adj[nbrs[i]];
        }
      if (side_t.empty()) continue;
      VertexSet closure = VertexSet::full(g.n);
      for (int b : side_t.bits()) closure &= g.adj[b];
      masks.insert(biclique_edges(ix, closure.bits(), side_t.bits()));
    }
  }
  return {masks.begin(), masks.end()};
}

int cover_search(std::uint32_t remaining, const std::vector<std::uint32_t>& bicliques,
                 std::unordered_map<std::uint32_t, int>& memo) {
  if (!remaining) return 0;
  auto it = memo.find(remaining);
  if (it != memo.end()) return it->second;
  int e = __builtin_ctz(remaining);
  int best = 1 << 20;
  for (std::uint32_t b : bicliques) {
    if (!(b & (std::uint32_t{1} << e))) continue;
    best = std::min(best, 1 + cover_search(remaining & ~b, bicliques, memo));
  }
  memo.emplace(remaining, best);
  return best;
}

int partition_search(std::uint32_t remaining, const Graph& g, const EdgeIndex& ix,
                     std::unordered_map<std::uint32_t, int>& memo) {
  if (!remaining) return 0;
  auto it = memo.find(remaining);
  if (it != memo.end()) return it->second;
  auto [u, v] = ix.edges[__builtin_ctz(remaining)];
  auto live = [&](int a, int b) {
    int e = ix.id[a][b];
    return e >= 0 && (remaining & (std::uint32_t{1} << e));
  };
  std::vector<int> s_cands, t_base;
  for (int w : g.adj[v].bits())
    if (w != u && live(w, v)) s_cands.push_back(w);
  int best = 1 << 20;
  int ds = static_cast<int>(s_cands.size());
  for (int smask = 0; smask < (1 << ds); ++smask) {
    std::vector<int> side_s = {u};
    for (int i = 0; i < ds; ++i)
      if (smask & (1 << i)) side_s.push_back(s_cands[i]);
    t_base.clear();
    for (int w : g.adj[u].bits()) {
      if (w == v) continue;
      bool ok = true;
      for (int a : side_s)
        if (!live(a, w)) {
          ok = false;
          break;
        }
      if (ok) t_base.push_back(w);
    }
    int dt = static_cast<int>(t_base.size());
    for (int tmask = 0; tmask < (1 << dt); ++tmask) {
      std::vector<int> side_t = {v};
      for (int i = 0; i < dt; ++i)
        if (tmask & (1 << i)) side_t.push_back(t_base[i]);
      std::uint32_t part = biclique_edges(ix, side_s, side_t);
      best = std::min(best, 1 + partition_search(remaining & ~part, g, ix, memo));
    }
  }
  memo.emplace(remaining, best);
  return best;
}

void check_biclique_cap(const Graph& g) {
  int m = g.edge_count();
  if (m > 16) throw SearchCapExceeded("exact biclique search refused", m, 16);
}

}  // namespace

int biclique_cover_number(const Graph& g) {
  check_biclique_cap(g);
  if (g.edge_count() == 0) return 0;
  EdgeIndex ix(g);
  auto bicliques = maximal_biclique_masks(g, ix);
  std::unordered_map<std::uint32_t, int> memo;
  std::uint32_t all = (g.edge_count() == 32) ? ~std::uint32_t{0}
                                             : ((std::uint32_t{1} << g.edge_count()) - 1);
  return cover_search(all, bicliques, memo);
}

int biclique_partition_number(const Graph& g) {
  check_biclique_cap(g);
  if (g.edge_count() == 0) return 0;
  EdgeIndex ix(g);
  std::unordered_map<std::uint32_t, int> memo;
  std::uint32_t all = (std::uint32_t{1} << g.edge_count()) - 1;
  return partition_search(all, g, ix, memo);
}

// ---------------------------------------------------------------------------
// Skew zero forcing.

VertexSet skew_forcing_closure(const Graph& g, VertexSet filled) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < g.n; ++u) {
      VertexSet unfilled_nbrs = g.adj[u] - filled;
      if (unfilled_nbrs.count() == 1) {
        filled.set(unfilled_nbrs.first());
        changed = true;
      }
    }
  }
  return filled;
}

int skew_zero_forcing_number(const Graph& g) {
  if (g.n > 20) throw SearchCapExceeded("exact skew forcing search refused", g.n, 20);
  if (g.n == 0) return 0;
  int full_count = g.n;
  for (int k = 0; k <= g.n; ++k) {
    // Gosper's hack over k-subsets of [0, n)
    std::uint32_t limit = std::uint32_t{1} << g.n;
    std::uint32_t sub = (k == 0) ? 0 : (std::uint32_t{1} << k) - 1;
    for (;;) {
      VertexSet filled(g.n);
      for (int v = 0; v < g.n; ++v)
        if (sub & (std::uint32_t{1} << v)) filled.set(v);
      if (skew_forcing_closure(g, std::move(filled)).count() == full_count) return k;
      if (k == 0) break;
      std::uint32_t c = sub & -sub;
      std::uint32_t r = sub + c;
      if (r >= limit) break;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }
  return g.n;  // unreachable: the full set always forces itself
}

}  // namespace grundy
