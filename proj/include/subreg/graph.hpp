// Small undirected multigraphs and affine Dynkin recognition.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace subreg::graph {

// Symmetric adjacency; entries count parallel edges, diagonal counts loops.
struct Graph {
  std::vector<std::vector<int>> adj;

  explicit Graph(int n = 0) : adj(n, std::vector<int>(n, 0)) {}
  int size() const { return static_cast<int>(adj.size()); }
  void add_edge(int a, int b, int mult = 1) {
    adj[a][b] += mult;
    if (a != b) adj[b][a] += mult;
  }
  int degree(int v) const {
    int d = 0;
    for (int x : adj[v]) d += x;
    return d;
  }
  int edge_count() const {
    int e = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i; j < size(); ++j) e += adj[i][j];
    return e;
  }
  bool connected() const {
    if (size() == 0) return true;
    std::vector<bool> seen(size(), false);
    std::vector<int> st{0};
    seen[0] = true;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int u = 0; u < size(); ++u)
        if (adj[v][u] && !seen[u]) seen[u] = true, st.push_back(u);
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
  bool simple() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (adj[i][j] > 1 || (i == j && adj[i][j])) return false;
    return true;
  }
  bool is_tree() const { return simple() && connected() && edge_count() == size() - 1; }

  Graph induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
      for (size_t j = 0; j < keep.size(); ++j) g.adj[i][j] = adj[keep[i]][keep[j]];
    return g;
  }
};

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Star-shaped tree: a center with arms of the given lengths.
inline Graph star(const std::vector<int>& arms) {
  int n = 1;
  for (int a : arms) n += a;
  Graph g(n);
  int next = 1;
  for (int a : arms) {
    int prev = 0;
    for (int k = 0; k < a; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

inline Graph affine_A(int n) {
  if (n == 0) {
    Graph g(1);
    g.adj[0][0] = 2;
    return g;
  }
  Graph g(n + 1);
  if (n == 1) {
    g.add_edge(0, 1, 2);
    return g;
  }
  for (int i = 0; i <= n; ++i) g.add_edge(i, (i + 1) % (n + 1));
  return g;
}

inline Graph affine_D(int n) {
  if (n == 4) return star({1, 1, 1, 1});
  Graph g(n + 1);
  // spine 1..n-1 with leaves 0 at 2 and n at n-2
  for (int i = 1; i + 1 <= n - 1; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, 2);
  g.add_edge(n, n - 2);
  return g;
}

inline Graph affine_E(int n) {
  if (n == 6) return star({2, 2, 2});
  if (n == 7) return star({1, 3, 3});
  return star({1, 2, 5});
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.size();
  if (n != b.size()) return false;
  auto da = std::vector<int>(n), db = std::vector<int>(n);
  for (int i = 0; i < n; ++i) da[i] = a.degree(i), db[i] = b.degree(i);
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == n) return true;
    for (int u = 0; u < n; ++u) {
      if (used[u] || da[v] != db[u] || a.adj[v][v] != b.adj[u][u]) continue;
      bool ok = true;
      for (int w = 0; w < v && ok; ++w) ok = a.adj[v][w] == b.adj[u][map[w]];
      if (!ok) continue;
      map[v] = u;
      used[u] = true;
      if (go(v + 1)) return true;
      used[u] = false;
    }
    return false;
  };
  return go(0);
}

// Name such as "E~7" or "D~6" when the graph is a simply-laced affine Dynkin diagram.
inline std::optional<std::string> affine_type(const Graph& g) {
  int n = g.size() - 1;
  if (n < 0) return std::nullopt;
  if (isomorphic(g, affine_A(n))) return "A~" + std::to_string(n);
  if (n >= 4 && isomorphic(g, affine_D(n))) return "D~" + std::to_string(n);
  if (n >= 6 && n <= 8 && isomorphic(g, affine_E(n))) return "E~" + std::to_string(n);
  return std::nullopt;
}

inline Graph affine_by_name(const std::string& s) {
  char c = s.at(0);
  int n = std::stoi(s.substr(2));
  if (c == 'A') return affine_A(n);
  if (c == 'D') return affine_D(n);
  return affine_E(n);
}

}  // namespace subreg::graph
