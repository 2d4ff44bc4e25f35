#pragma once

#include "gnorm/engine.hpp"

namespace gnorm {

// t_H(w) - t_{K_2}(w)^m for nonnegative w: nonnegative when the density of H
// is bounded below by the edge-density power.
double sidorenko_gap(const BipartiteGraph& h, const Matrix& w, const HomOptions& opt = {});

// normalized_rnorm(h, w) - normalized_rnorm(g, w) for an edge-sub-multiset g of h
// (same sides). Nonnegative when the normalized norm is monotone under padding
// missing edges with the constant-one matrix.
double subgraph_norm_monotonicity_gap(const BipartiteGraph& h, const BipartiteGraph& g,
                                      const Matrix& w, const HomOptions& opt = {});

// normalized_rnorm(Q_n, w) for n = 1..n_max. Guard: n_max <= 4.
std::vector<double> hypercube_chain(const Matrix& w, int n_max, const HomOptions& opt = {});

// normalized_rnorm(P_{2n}, w) for n = 1..n_max; w must be square and symmetric
// within 1e-12.
std::vector<double> even_path_chain(const Matrix& w, int n_max, const HomOptions& opt = {});

// Collapse inequality behind the hypercube induction. For Q_n with vertex
// weights f_u, g_v and edge weights w_e:
//   lhs = sum over assignments of |prod_u f_u(x_u) prod_v g_v(y_v) prod_e w_e|
//   rhs = prod over edges e=(a,b) of (same sum with every X weight replaced by
//         f_a, every Y weight by g_b, every edge weight by w_e)^(1/|E|).
// gap = lhs - rhs, nonpositive. n in {2, 3}; dims must satisfy the naive guard.
double cube_claim_gap(int n, const VertexDecoration& vd, const std::vector<Matrix>& edge_weights,
                      const HomOptions& opt = {});

}  // namespace gnorm
