#include "grundy/hypergraph.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_map>

namespace grundy {

namespace {

class RhoEngine {
 public:
  RhoEngine(std::vector<std::uint64_t> edges, int ground)
      : edges_(std::move(edges)) {
    for (auto e : edges_) universe_ |= e;
    (void)ground;
  }

  int best_from(std::uint64_t covered) {
    auto it = memo_.find(covered);
    if (it != memo_.end()) return it->second;
    ++expanded_;
    int uncovered = __builtin_popcountll(universe_ & ~covered);
    std::vector<std::pair<int, int>> moves;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      std::uint64_t fresh = edges_[i] & ~covered;
      if (fresh) moves.emplace_back(__builtin_popcountll(fresh), static_cast<int>(i));
    }
    std::sort(moves.begin(), moves.end());
    int node_bound = std::min<int>(uncovered, static_cast<int>(moves.size()));
    int best = 0;
    for (auto [gain, i] : moves) {
      if (best >= 1 + (uncovered - gain)) break;
      best = std::max(best, 1 + best_from(covered | edges_[i]));
      if (best == node_bound) break;
    }
    memo_.emplace(covered, static_cast<std::int16_t>(best));
    return best;
  }

  std::vector<int> reconstruct(std::uint64_t covered, int need) {
    std::vector<int> seq;
    while (need > 0) {
      bool advanced = false;
      for (std::size_t i = 0; i < edges_.size() && !advanced; ++i) {
        if (!(edges_[i] & ~covered)) continue;
        if (1 + best_from(covered | edges_[i]) != need) continue;
        seq.push_back(static_cast<int>(i));
        covered |= edges_[i];
        --need;
        advanced = true;
      }
      if (!advanced) throw std::logic_error("rho witness reconstruction failed");
    }
    return seq;
  }

  std::uint64_t expanded() const { return expanded_; }
  std::uint64_t memo_size() const { return memo_.size(); }

 private:
  std::vector<std::uint64_t> edges_;
  std::uint64_t universe_ = 0;
  std::unordered_map<std::uint64_t, std::int16_t> memo_;
  std::uint64_t expanded_ = 0;
};

}  // namespace

RhoResult rho_gr(const Hypergraph& h) {
  if (h.ground > 64)
    throw std::invalid_argument("rho_gr supports ground sets up to 64 elements");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> masks;
  masks.reserve(h.edges.size());
  for (const VertexSet& e : h.edges) {
    if (e.universe() != h.ground)
      throw std::invalid_argument("hyperedge universe mismatch");
    masks.push_back(e.words().empty() ? 0 : e.words()[0]);
  }
  RhoEngine engine(std::move(masks), h.ground);
  RhoResult r;
  r.value = engine.best_from(0);
  r.witness_edges = engine.reconstruct(0, r.value);
  r.stats.states_expanded = engine.expanded();
  r.stats.memo_entries = engine.memo_size();
  r.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

Hypergraph neighborhood_hypergraph(const Graph& g, bool closed) {
  Hypergraph h;
  h.ground = g.n;
  h.edges.reserve(g.n);
  for (int v = 0; v < g.n; ++v)
    h.edges.push_back(closed ? g.closed_neighborhood(v) : g.adj[v]);
  return h;
}

Hypergraph hypergraph_product(const Hypergraph& a, const Hypergraph& b) {
  Hypergraph p;
  p.ground = a.ground * b.ground;
  p.edges.reserve(a.edges.size() * b.edges.size());
  for (const VertexSet& ea : a.edges) {
    for (const VertexSet& eb : b.edges) {
      VertexSet e(p.ground);
      for (int x : ea.bits())
        for (int y : eb.bits()) e.set(x * b.ground + y);
      p.edges.push_back(std::move(e));
    }
  }
  return p;
}

Graph incidence_bipartite(const Hypergraph& h) {
  int k = static_cast<int>(h.edges.size());
  Graph g(h.ground + k);
  for (int e = 0; e < k; ++e)
    for (int v : h.edges[e].bits()) g.add_edge(v, h.ground + e);
  return g;
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw std::invalid_argument("hypergraph text: missing header line");
  std::istringstream hs(header);
  int m = -1, k = -1;
  if (!(hs >> m >> k) || m < 0 || k < 0)
    throw std::invalid_argument("hypergraph text: header must be \"m k\"");
  Hypergraph h;
  h.ground = m;
  for (int e = 0; e < k; ++e) {
    std::string line;
    if (!std::getline(in, line))
      throw std::invalid_argument("hypergraph text: missing edge line " +
                                  std::to_string(e + 1));
    VertexSet edge(m);
    std::istringstream ls(line);
    int v;
    while (ls >> v) {
      if (v < 0 || v >= m)
        throw std::invalid_argument("hypergraph text: ground index " +
                                    std::to_string(v) + " out of range on edge line " +
                                    std::to_string(e + 1));
      edge.set(v);
    }
    h.edges.push_back(std::move(edge));
  }
  return h;
}

Hypergraph parse_hypergraph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.ground) + " " + std::to_string(h.edges.size()) + "\n";
  for (const VertexSet& e : h.edges) {
    bool first = true;
    for (int v : e.bits()) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace grundy
