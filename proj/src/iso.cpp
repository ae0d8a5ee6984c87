#include "grundy/iso.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace grundy {

namespace {

// Iterated degree refinement. Final color ids are assigned by sorted
// signature, so they line up across isomorphic graphs.
std::vector<int> refined_colors(const Graph& g) {
  std::vector<int> color(g.n, 0);
  for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u : g.adj[v].bits()) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> dict(sig.begin(), sig.end());
    std::sort(dict.begin(), dict.end());
    dict.erase(std::unique(dict.begin(), dict.end()), dict.end());
    for (int v = 0; v < g.n; ++v)
      color[v] = static_cast<int>(
          std::lower_bound(dict.begin(), dict.end(), sig[v]) - dict.begin());
    int now = static_cast<int>(dict.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

struct CanonSearch {
  const Graph& g;
  std::vector<int> class_of_pos;           // color id required at each position
  std::vector<std::vector<int>> members;   // vertices per color id
  std::vector<int> perm;                   // position -> vertex
  std::vector<char> used;
  std::vector<std::uint64_t> cur, best;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph) {}

  void dfs(int pos, bool already_less) {
    int n = g.n;
    if (pos == n) {
      best = cur;
      have_best = true;
      return;
    }
    for (int v : members[class_of_pos[pos]]) {
      if (used[v]) continue;
      std::uint64_t row = 0;
      for (int q = 0; q < pos; ++q)
        if (g.has_edge(v, perm[q])) row |= std::uint64_t{1} << q;
      bool less = already_less;
      if (!less && have_best) {
        if (row > best[pos]) continue;
        less = row < best[pos];
      }
      used[v] = 1;
      perm[pos] = v;
      cur[pos] = row;
      dfs(pos + 1, less);
      used[v] = 0;
    }
  }
};

}  // namespace

std::vector<std::uint64_t> canonical_key(const Graph& g) {
  if (g.n > 64) throw std::invalid_argument("canonical_key supports n <= 64");
  std::vector<int> color = refined_colors(g);
  int classes = g.n ? *std::max_element(color.begin(), color.end()) + 1 : 0;

  CanonSearch s(g);
  s.members.resize(classes);
  for (int v = 0; v < g.n; ++v) s.members[color[v]].push_back(v);
  for (int c = 0; c < classes; ++c)
    for (std::size_t i = 0; i < s.members[c].size(); ++i) s.class_of_pos.push_back(c);
  s.perm.assign(g.n, -1);
  s.used.assign(g.n, 0);
  s.cur.assign(g.n, 0);
  s.dfs(0, false);

  std::vector<std::uint64_t> key;
  key.push_back(static_cast<std::uint64_t>(g.n));
  key.insert(key.end(), s.best.begin(), s.best.end());
  return key;
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, const std::vector<int>& order,
                   const std::vector<int>& ca, const std::vector<int>& cb,
                   std::vector<int>& map_ab, std::vector<char>& used_b, std::size_t k) {
  if (k == order.size()) return true;
  int v = order[k];
  for (int w = 0; w < b.n; ++w) {
    if (used_b[w] || ca[v] != cb[w]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      int u = order[j];
      if (a.has_edge(v, u) != b.has_edge(w, map_ab[u])) ok = false;
    }
    if (!ok) continue;
    map_ab[v] = w;
    used_b[w] = 1;
    if (iso_backtrack(a, b, order, ca, cb, map_ab, used_b, k + 1)) return true;
    used_b[w] = 0;
    map_ab[v] = -1;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  if (a.edge_count() != b.edge_count()) return false;
  auto degs = [](const Graph& g) {
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;

  std::vector<int> ca = refined_colors(a), cb = refined_colors(b);
  {
    std::vector<int> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Map vertices of `a` in BFS order so each step is anchored to mapped neighbors.
  std::vector<int> order;
  std::vector<char> seen(a.n, 0);
  for (int s = 0; s < a.n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int u : a.adj[v].bits())
        if (!seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
    }
  }
  std::vector<int> map_ab(a.n, -1);
  std::vector<char> used_b(b.n, 0);
  return iso_backtrack(a, b, order, ca, cb, map_ab, used_b, 0);
}

std::vector<Graph> enumerate_all_graphs(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumerate_all_graphs supports 1 <= n <= 7");
  std::vector<Graph> level = {Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Graph> next;
    for (const Graph& base : level) {
      for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < k - 1; ++u)
          if (mask & (1 << u)) g.add_edge(u, k - 1);
        auto key = canonical_key(g);
        if (seen.insert(std::move(key)).second) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> enumerate_connected_bipartite(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_connected_bipartite requires n >= 1");
  if (n > 7)
    throw std::invalid_argument(
        "enumerate_connected_bipartite refuses n > 7; ingest a graph6 file instead");
  std::vector<Graph> out;
  for (Graph& g : enumerate_all_graphs(n))
    if (is_connected(g) && bipartition(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace grundy
