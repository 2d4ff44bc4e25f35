#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gnorm {

// Bipartite multigraph with ordered sides X (left) and Y (right).
// Edges are (x_index, y_index) pairs; repeated pairs encode multiplicity.
// Canonical form keeps edges sorted lexicographically; decoration files and
// per-edge weights align with that order.
struct BipartiteGraph {
  int x_size = 0;
  int y_size = 0;
  std::vector<std::pair<int, int>> edges;
  // Optional vertex labels (e.g. bit strings for hypercubes); empty or one per vertex.
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;

  int n() const { return x_size + y_size; }
  int m() const { return static_cast<int>(edges.size()); }

  void canonicalize();
  // Checks index ranges, label lengths and nonempty sides; throws std::invalid_argument.
  void validate() const;

  // Structural equality: sizes and edge multisets, labels ignored.
  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.x_size == b.x_size && a.y_size == b.y_size && a.edges == b.edges;
  }
};

// Loopless multigraph on one vertex set; edges stored with u < v.
struct GeneralGraph {
  int v_size = 0;
  std::vector<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
  void canonicalize();
  void validate() const;
};

// K_{m,n}: X of size m, Y of size n, all m*n edges. Ordered: K_{m,n} != K_{n,m} unless m == n.
BipartiteGraph make_complete_bipartite(int m, int n);

// C_{2k}: even cycle with k vertices per side; k = 1 gives the doubled edge K_2^{(2)}.
BipartiteGraph make_even_cycle(int k);

// Q_n: X = even-parity n-bit strings, Y = odd-parity, edges between strings at
// Hamming distance one. Sides enumerated in increasing binary value; labels carry
// the bit strings. n*2^(n-1) edges.
BipartiteGraph make_hypercube(int n);

// P_k: path with k edges and k+1 vertices, alternating sides starting in X.
// P_1 = K_2; P_2 = the star K_{1,2} with its center in Y.
BipartiteGraph make_path(int k);

// Bipartite product: vertex sets are cartesian products of the sides, one edge
// per pair of edge instances, so multiplicities multiply. Pair (i,j) of A x B
// flattens to i*|side(B)| + j.
BipartiteGraph biproduct(const BipartiteGraph& a, const BipartiteGraph& b);

// Each edge instance repeated k times.
BipartiteGraph edge_power(const BipartiteGraph& g, int k);

std::vector<int> x_degrees(const BipartiteGraph& g);
std::vector<int> y_degrees(const BipartiteGraph& g);

// Induced subgraph on side-local selections: xs from [0, x_size), ys from [0, y_size).
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::vector<int>& xs,
                                const std::vector<int>& ys);

// Streams the induced subgraph of every nonempty vertex subset, together with
// the chosen side indices. Guard: n <= 24.
void for_each_induced_subgraph(
    const BipartiteGraph& g,
    const std::function<void(const BipartiteGraph&, const std::vector<int>&,
                             const std::vector<int>&)>& visit);

// Materialized convenience wrapper around the stream; same guard.
std::vector<BipartiteGraph> induced_subgraphs(const BipartiteGraph& g);

struct IndependentSet {
  int size = 0;
  // Mixed-side ids, ascending: X vertex i is i, Y vertex j is x_size + j.
  std::vector<int> vertices;
};

// Exact maximum independent set of the underlying simple graph. Guard: n <= 24.
IndependentSet max_independent_set(const BipartiteGraph& g);

}  // namespace gnorm
