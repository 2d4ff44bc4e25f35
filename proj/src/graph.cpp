#include "gnorm/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "gnorm/errors.hpp"

namespace gnorm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void BipartiteGraph::canonicalize() { std::sort(edges.begin(), edges.end()); }

void BipartiteGraph::validate() const {
  require(x_size >= 1 && y_size >= 1, "bipartite graph: each side must be nonempty");
  for (const auto& [u, v] : edges) {
    require(u >= 0 && u < x_size, "bipartite graph: X index out of range");
    require(v >= 0 && v < y_size, "bipartite graph: Y index out of range");
  }
  require(x_labels.empty() || static_cast<int>(x_labels.size()) == x_size,
          "bipartite graph: x_labels length mismatch");
  require(y_labels.empty() || static_cast<int>(y_labels.size()) == y_size,
          "bipartite graph: y_labels length mismatch");
}

void GeneralGraph::canonicalize() {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
}

void GeneralGraph::validate() const {
  require(v_size >= 1, "graph: vertex set must be nonempty");
  for (const auto& [u, v] : edges) {
    require(u >= 0 && u < v_size && v >= 0 && v < v_size, "graph: vertex index out of range");
    require(u != v, "graph: loops are not allowed");
  }
}

BipartiteGraph make_complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "make_complete_bipartite: sides must be >= 1");
  BipartiteGraph g;
  g.x_size = m;
  g.y_size = n;
  g.edges.reserve(static_cast<size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.edges.emplace_back(i, j);
  g.canonicalize();
  return g;
}

BipartiteGraph make_even_cycle(int k) {
  require(k >= 1, "make_even_cycle: k must be >= 1");
  BipartiteGraph g;
  g.x_size = k;
  g.y_size = k;
  for (int i = 0; i < k; ++i) {
    g.edges.emplace_back(i, i);
    g.edges.emplace_back(i, (i + 1) % k);
  }
  g.canonicalize();
  return g;
}

BipartiteGraph make_hypercube(int n) {
  require(n >= 1 && n <= 24, "make_hypercube: n must be in [1, 24]");
  BipartiteGraph g;
  std::vector<int> xi(std::size_t(1) << n, -1), yi(std::size_t(1) << n, -1);
  auto label = [n](std::uint32_t v) {
    std::string s(n, '0');
    for (int j = 0; j < n; ++j)
      if (v >> (n - 1 - j) & 1u) s[j] = '1';
    return s;
  };
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    if (std::popcount(v) % 2 == 0) {
      xi[v] = g.x_size++;
      g.x_labels.push_back(label(v));
    } else {
      yi[v] = g.y_size++;
      g.y_labels.push_back(label(v));
    }
  }
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    if (xi[v] < 0) continue;
    for (int b = 0; b < n; ++b) g.edges.emplace_back(xi[v], yi[v ^ (1u << b)]);
  }
  g.canonicalize();
  return g;
}

BipartiteGraph make_path(int k) {
  require(k >= 1, "make_path: k must be >= 1");
  BipartiteGraph g;
  g.x_size = (k + 2) / 2;  // vertices 0,2,4,...
  g.y_size = (k + 1) / 2;  // vertices 1,3,5,...
  for (int i = 0; i < k; ++i) {
    if (i % 2 == 0)
      g.edges.emplace_back(i / 2, i / 2);
    else
      g.edges.emplace_back((i + 1) / 2, (i - 1) / 2);
  }
  g.canonicalize();
  return g;
}

BipartiteGraph biproduct(const BipartiteGraph& a, const BipartiteGraph& b) {
  a.validate();
  b.validate();
  BipartiteGraph g;
  g.x_size = a.x_size * b.x_size;
  g.y_size = a.y_size * b.y_size;
  g.edges.reserve(a.edges.size() * b.edges.size());
  for (const auto& [au, av] : a.edges)
    for (const auto& [bu, bv] : b.edges)
      g.edges.emplace_back(au * b.x_size + bu, av * b.y_size + bv);
  g.canonicalize();
  return g;
}

BipartiteGraph edge_power(const BipartiteGraph& g, int k) {
  require(k >= 1, "edge_power: k must be >= 1");
  g.validate();
  BipartiteGraph r;
  r.x_size = g.x_size;
  r.y_size = g.y_size;
  r.x_labels = g.x_labels;
  r.y_labels = g.y_labels;
  r.edges.reserve(g.edges.size() * k);
  for (const auto& e : g.edges)
    for (int i = 0; i < k; ++i) r.edges.push_back(e);
  r.canonicalize();
  return r;
}

std::vector<int> x_degrees(const BipartiteGraph& g) {
  std::vector<int> d(g.x_size, 0);
  for (const auto& [u, v] : g.edges) d[u]++;
  return d;
}

std::vector<int> y_degrees(const BipartiteGraph& g) {
  std::vector<int> d(g.y_size, 0);
  for (const auto& [u, v] : g.edges) d[v]++;
  return d;
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::vector<int>& xs,
                                const std::vector<int>& ys) {
  std::vector<int> xmap(g.x_size, -1), ymap(g.y_size, -1);
  BipartiteGraph r;
  for (int x : xs) {
    require(x >= 0 && x < g.x_size && xmap[x] < 0, "induced_subgraph: bad X selection");
    xmap[x] = r.x_size++;
  }
  for (int y : ys) {
    require(y >= 0 && y < g.y_size && ymap[y] < 0, "induced_subgraph: bad Y selection");
    ymap[y] = r.y_size++;
  }
  for (const auto& [u, v] : g.edges)
    if (xmap[u] >= 0 && ymap[v] >= 0) r.edges.emplace_back(xmap[u], ymap[v]);
  r.canonicalize();
  return r;
}

void for_each_induced_subgraph(
    const BipartiteGraph& g,
    const std::function<void(const BipartiteGraph&, const std::vector<int>&,
                             const std::vector<int>&)>& visit) {
  g.validate();
  const int n = g.n();
  if (n > 24) throw guard_error("for_each_induced_subgraph: n > 24");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> xs, ys;
    for (int i = 0; i < g.x_size; ++i)
      if (mask >> i & 1u) xs.push_back(i);
    for (int j = 0; j < g.y_size; ++j)
      if (mask >> (g.x_size + j) & 1u) ys.push_back(j);
    visit(induced_subgraph(g, xs, ys), xs, ys);
  }
}

std::vector<BipartiteGraph> induced_subgraphs(const BipartiteGraph& g) {
  std::vector<BipartiteGraph> out;
  for_each_induced_subgraph(
      g, [&](const BipartiteGraph& s, const std::vector<int>&, const std::vector<int>&) {
        out.push_back(s);
      });
  return out;
}

namespace {

// Exact maximum independent set by branch and bound on adjacency bitmasks.
// Branches on a maximum-degree vertex (include / exclude); deterministic.
struct MisSolver {
  std::vector<std::uint32_t> adj;
  int best = -1;
  std::uint32_t best_set = 0;

  void run(std::uint32_t cand, std::uint32_t cur, int size) {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      if (size > best) {
        best = size;
        best_set = cur;
      }
      return;
    }
    int pick = -1, pickdeg = -1;
    for (std::uint32_t m = cand; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int deg = std::popcount(adj[v] & cand);
      if (deg > pickdeg) {
        pickdeg = deg;
        pick = v;
      }
    }
    run(cand & ~(adj[pick] | (1u << pick)), cur | (1u << pick), size + 1);
    run(cand & ~(1u << pick), cur, size);
  }
};

}  // namespace

IndependentSet max_independent_set(const BipartiteGraph& g) {
  g.validate();
  const int n = g.n();
  if (n > 24) throw guard_error("max_independent_set: n > 24");
  MisSolver s;
  s.adj.assign(n, 0);
  for (const auto& [u, v] : g.edges) {
    s.adj[u] |= 1u << (g.x_size + v);
    s.adj[g.x_size + v] |= 1u << u;
  }
  s.run((n == 32 ? ~0u : (1u << n) - 1), 0, 0);
  IndependentSet out;
  out.size = s.best;
  for (int i = 0; i < n; ++i)
    if (s.best_set >> i & 1u) out.vertices.push_back(i);
  return out;
}

}  // namespace gnorm
