#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "gnorm/graph.hpp"

namespace gnorm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// One matrix per edge instance, aligned with the canonical edge order.
// All matrices share dimensions |I| x |J|.
struct EdgeDecoration {
  BipartiteGraph graph;
  std::vector<Matrix> weights;

  // Same matrix on every edge.
  EdgeDecoration() = default;
  EdgeDecoration(BipartiteGraph g, const Matrix& w);
  EdgeDecoration(BipartiteGraph g, std::vector<Matrix> ws);

  int rows() const { return weights.empty() ? 0 : static_cast<int>(weights.front().rows()); }
  int cols() const { return weights.empty() ? 0 : static_cast<int>(weights.front().cols()); }
  void validate() const;
};

// Unary weights: one vector per X vertex (length |I|) and per Y vertex (length |J|).
struct VertexDecoration {
  std::vector<Vector> x_weights;
  std::vector<Vector> y_weights;
};

enum class Engine { Naive, Eliminated };

struct HomOptions {
  Engine engine = Engine::Eliminated;
  bool kahan = false;  // compensated accumulation (naive and final reductions)
};

struct EliminationStep {
  int vertex = 0;               // mixed-side id (X: 0..x-1, Y: x..x+y-1)
  std::vector<int> scope;       // neighbors alive at elimination, ascending
};

// Greedy min-fill order over the interaction graph; ties broken by lowest
// vertex id. Width = max scope size = arity of the largest intermediate factor.
struct EliminationPlan {
  std::vector<EliminationStep> steps;
  int width = 0;
};

EliminationPlan plan_elimination(const BipartiteGraph& g);

// Weighted homomorphism sum: sum over all assignments X -> rows(w), Y -> cols(w)
// of the product of w over edge instances. Isolated vertices contribute their
// domain size as a factor.
//
// Naive engine: guarded at |I|^|X| * |J|^|Y| <= 1e9 states.
// Eliminated engine: guarded at 2^27 entries per intermediate table.
double hom_sum(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt = {});

// Decorated variant: edge instance e carries its own matrix.
double hom_sum_decorated(const EdgeDecoration& d, const HomOptions& opt = {});

// Decorated variant with additional unary vertex weights.
double hom_sum_decorated(const EdgeDecoration& d, const VertexDecoration& v,
                         const HomOptions& opt = {});

// Symmetric variant over a loopless multigraph; w must be square and symmetric
// within 1e-12 (max entry deviation).
double hom_sum_symmetric(const GeneralGraph& g, const Matrix& w, const HomOptions& opt = {});

// hom_sum normalized by |I|^|X| * |J|^|Y| (uniform measure).
double hom_density(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt = {});

// hom_sum_symmetric normalized by |I|^|V|.
double hom_density_symmetric(const GeneralGraph& g, const Matrix& w, const HomOptions& opt = {});

// Tensor (Kronecker) product: result((x,x'),(y,y')) = a(x,y) * b(x',y') with
// row-major pair flattening; dimensions multiply.
Matrix tensor_product(const Matrix& a, const Matrix& b);

// k-fold tensor power; guarded at 1e8 result entries.
Matrix tensor_power(const Matrix& w, int k);

// Entrywise power with nonnegative integer exponent.
Matrix pointwise_power(const Matrix& w, int k);

}  // namespace gnorm
