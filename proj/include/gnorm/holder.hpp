#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gnorm/norms.hpp"

namespace gnorm {

// Structural necessary conditions for the decorated inequality to hold on a
// connected graph: (i) no subgraph denser than the whole (|E'|/(|V'|-1) ratios),
// (ii) equal degrees within each side. Comparisons are exact integer arithmetic.

struct DegreeCheck {
  bool pass = true;
  // Witness pair when pass is false:
  char side = 'x';
  int u = -1, v = -1;
  int deg_u = 0, deg_v = 0;
};

DegreeCheck check_same_side_degrees(const BipartiteGraph& g);

struct DensityCheck {
  bool pass = true;
  // Max-ratio witness when pass is false: side-local selections, directly
  // consumable by induced_subgraph and density_witness.
  std::vector<int> xs, ys;
  long long sub_edges = 0, sub_vertices = 0;
  double sub_ratio = 0.0;    // |E'|/(|V'|-1)
  double graph_ratio = 0.0;  // |E|/(|V|-1)
};

// Enumerates induced subgraphs (the maximum ratio is attained on one). Guard: n <= 24.
DensityCheck check_subgraph_density(const BipartiteGraph& g);

struct CriterionReport {
  DegreeCheck degrees;
  DensityCheck density;
  IndependentSet independent_set;
};

CriterionReport criterion_report(const BipartiteGraph& g);

// Decorated sum minus the product of per-edge norms of the given kind.
// Positive gap = counterexample to the decorated inequality for that kind.
double holder_gap(const EdgeDecoration& d, NormKind kind, const HomOptions& opt = {});

struct WitnessReport {
  EdgeDecoration decoration;
  double lhs = 0.0;  // decorated sum
  double rhs = 0.0;  // product of rectified norms
  bool violation = false;
  // Closed forms from the diagonal construction; they match the engine values
  // when the graph (and chosen subgraph) are connected.
  std::optional<double> closed_lhs, closed_rhs;
};

// Unequal-degree witness: on I = J = [k], edges incident to Y vertex v carry
// w1(x,y) = [x=0][y=0], all others w(x,y) = [x=0 or y=0]. On P_3 with v the
// degree-2 Y vertex, lhs = k and rhs = (k(3k-2))^(1/3): equality at k = 2, a
// violation for every k >= 3, growing without bound.
WitnessReport degree_witness(const BipartiteGraph& g, int v, int k);

// Dense-subgraph witness: edges of the induced subgraph on (xs, ys) carry the
// diagonal matrix diag(lambda), all others the all-ones matrix; I = J = [dim lambda].
WitnessReport density_witness(const BipartiteGraph& g, const std::vector<int>& xs,
                              const std::vector<int>& ys, const Vector& lambda);

struct SearchResult {
  std::int64_t trial = -1;
  double lhs = 0.0, rhs = 0.0, gap = 0.0;
  bool refined = false;
  EdgeDecoration decoration;
};

struct SearchOptions {
  std::int64_t trials = 1000;
  int dim = 2;
  NormKind kind = NormKind::Rectified;  // Rectified samples U[0,1); Plain samples U[-1,1)
  std::uint64_t seed = 1;
  int threads = 1;
  // When raw sampling finds nothing, hill-climb this many best candidates
  // (coordinate passes: 100, step 0.1, geometric decay 0.95; heuristic).
  int refine_top = 0;
  HomOptions hom;
};

// Random search for decorations with gap > 1e-6 * rhs. Reports the violation
// with the smallest trial index; per-trial substreams make the result
// independent of thread count.
std::optional<SearchResult> search_violation(const BipartiteGraph& g, const SearchOptions& opt);

// Tensor-power amplification of a rectified-inequality violation into a
// triangle-inequality failure witness:
//   after normalizing each edge matrix to unit rectified norm, the decorated
//   sum is c > 1; for the smallest n with c^(2n/m) > m, the m^m-term expansion
//   sum_{f: E->E} S_f^(2n) equals ||sum_e w_e^(x2n)||^m exactly, so
//   rhs = (sum_f S_f^(2n))^(1/m) > m = sum_e ||w_e^(x2n)|| = lhs.
// Guard: m^m <= 1e7. Requires a genuine violation (c > 1) and nonzero norms.
struct ViolationCertificate {
  EdgeDecoration normalized;   // unit rectified norm per edge
  double c = 0.0;              // normalized decorated sum
  std::int64_t n = 0;          // tensor half-power
  double lhs = 0.0;            // = m
  double rhs = 0.0;
  double margin = 0.0;         // rhs - lhs > 0
};

ViolationCertificate amplification_certificate(const EdgeDecoration& d, const HomOptions& opt = {});

// Recomputes the expansion with compensated summation and checks margin > 0.
bool verify_certificate(const ViolationCertificate& cert, const HomOptions& opt = {});

// Plain norm of [[1,-1],[-1,1]]: exactly zero iff some vertex has odd degree,
// exhibiting nullity of the plain seminorm on a nonzero input.
double odd_degree_nullity(const BipartiteGraph& g, const HomOptions& opt = {});

}  // namespace gnorm
