#include "grundy/graph.hpp"

#include <algorithm>
#include <queue>

namespace grundy {

Graph::Graph(int vertices) : n(vertices) {
  if (vertices < 0 || vertices > kGraphCapacity)
    throw std::invalid_argument("vertex count out of range: " + std::to_string(vertices));
  adj.assign(vertices, VertexSet(vertices));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are unsupported");
  adj[u].set(v);
  adj[v].set(u);
}

bool Graph::has_edge(int u, int v) const { return adj[u].test(v); }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += adj[v].count();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u].bits())
      if (u < v) es.emplace_back(u, v);
  return es;
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = adj[v];
  s.set(v);
  return s;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n; ++v)
    if (adj[v].empty()) return true;
  return false;
}

void Graph::check_invariants() const {
  if (static_cast<int>(adj.size()) != n) throw std::logic_error("adjacency size mismatch");
  for (int v = 0; v < n; ++v) {
    if (adj[v].universe() != n) throw std::logic_error("neighborhood universe mismatch");
    if (adj[v].test(v)) throw std::logic_error("loop at vertex " + std::to_string(v));
    for (int u : adj[v].bits())
      if (!adj[u].test(v)) throw std::logic_error("asymmetric adjacency");
  }
}

Graph6ParseError::Graph6ParseError(const std::string& msg, std::size_t byte_offset)
    : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
      offset(byte_offset) {}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int g6_byte(std::string_view line, std::size_t pos) {
  if (pos >= line.size()) throw Graph6ParseError("truncated graph6 line", pos);
  unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < kG6Lo || c > kG6Hi)
    throw Graph6ParseError("byte outside graph6 range", pos);
  return c - kG6Lo;
}

}  // namespace

Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= line.size()) throw Graph6ParseError("empty graph6 line", pos);

  long long n;
  if (static_cast<unsigned char>(line[pos]) == kG6Hi) {
    ++pos;
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == kG6Hi) {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | g6_byte(line, pos++);
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | g6_byte(line, pos++);
    }
  } else {
    n = g6_byte(line, pos++);
  }
  if (n > kGraphCapacity)
    throw Graph6ParseError("graph order " + std::to_string(n) + " exceeds capacity " +
                               std::to_string(kGraphCapacity),
                           pos - 1);

  Graph g(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  int cur = 0, avail = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        cur = g6_byte(line, pos++);
        avail = 6;
      }
      if (cur & (1 << (avail - 1))) g.add_edge(i, j);
      --avail;
    }
  }
  (void)nbits;
  if (pos != line.size()) throw Graph6ParseError("trailing bytes after graph6 body", pos);
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  int n = g.n;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else {
    out.push_back(static_cast<char>(kG6Hi));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
    out.push_back(static_cast<char>((n & 63) + kG6Lo));
  }
  int cur = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(cur + kG6Lo));
        cur = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((cur << (6 - used)) + kG6Lo));
  return out;
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite requires a,b >= 1");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star requires n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph tree_t8() {
  Graph g(8);
  g.add_edge(0, 1);  // u - v
  g.add_edge(1, 2);  // v - x
  g.add_edge(1, 3);  // v - y
  g.add_edge(2, 4);
  g.add_edge(2, 5);
  g.add_edge(3, 6);
  g.add_edge(3, 7);
  g.labels = {"u", "v", "x", "y", "x1", "x2", "y1", "y2"};
  return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> kept = keep.bits();
  std::vector<int> index(g.n, -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<int>(i);
  Graph sub(static_cast<int>(kept.size()));
  for (int u : kept)
    for (int v : g.adj[u].bits())
      if (index[v] >= 0 && u < v) sub.add_edge(index[u], index[v]);
  if (!g.labels.empty()) {
    sub.labels.resize(sub.n);
    for (std::size_t i = 0; i < kept.size(); ++i) sub.labels[i] = g.labels[kept[i]];
  }
  return sub;
}

Graph subgraph_spanned_by_edges(const Graph& g,
                                const std::vector<std::pair<int, int>>& es) {
  VertexSet touched(g.n);
  for (auto [u, v] : es) {
    touched.set(u);
    touched.set(v);
  }
  std::vector<int> kept = touched.bits();
  std::vector<int> index(g.n, -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<int>(i);
  Graph sub(static_cast<int>(kept.size()));
  for (auto [u, v] : es) sub.add_edge(index[u], index[v]);
  return sub;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n + b.n);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n + u, a.n + v);
  return g;
}

Graph remove_open_twins(const Graph& g) {
  Graph cur = g;
  for (;;) {
    int doomed = -1;
    for (int u = 0; u < cur.n && doomed < 0; ++u)
      for (int v = u + 1; v < cur.n && doomed < 0; ++v)
        if (cur.adj[u] == cur.adj[v]) doomed = v;
    if (doomed < 0) return cur;
    VertexSet keep = VertexSet::full(cur.n);
    keep.reset(doomed);
    cur = induced_subgraph(cur, keep);
  }
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  VertexSet seen(g.n);
  seen.set(0);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.adj[v].bits())
      if (!seen.test(u)) {
        seen.set(u);
        q.push(u);
      }
  }
  return seen.count() == g.n;
}

std::optional<VertexSet> bipartition(const Graph& g) {
  std::vector<int> color(g.n, -1);
  VertexSet side(g.n);
  for (int start = 0; start < g.n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    side.set(start);
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.adj[v].bits()) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          if (color[u] == 0) side.set(u);
          q.push(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace grundy
