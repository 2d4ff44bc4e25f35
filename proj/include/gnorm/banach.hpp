#pragma once

#include <cstdint>
#include <string>

#include "gnorm/norms.hpp"

namespace gnorm {

// Parallelogram-type inequality for the graph norm of a graph satisfying the
// decorated inequality:
//   ||w1+w2||^m + ||w1-w2||^m <= (||w1||+||w2||)^m + | ||w1||-||w2|| |^m.
// Returns lhs - rhs (nonpositive). Plain norms throughout; on nonnegative
// inputs these agree with rectified norms except on w1-w2, where the plain
// norm is the one the expansion proof controls.
double key_inequality_gap(const BipartiteGraph& h, const Matrix& w1, const Matrix& w2,
                          const HomOptions& opt = {});

// K_p = sup over y in (0,1] of ((1+y)^p + (1-y)^p - 2) / y^2, p >= 2.
// Dense grid plus local refinement; for 2 < p < 3 the supremum p(p-1) is
// approached as y -> 0 and the grid reaches down to 1e-5.
double derive_Kp(double p);

struct ModuliReport {
  std::string graph;
  int m = 0;
  double epsilon = 0.0;
  std::int64_t samples = 0;    // admissible samples
  std::int64_t violations = 0;
  // Convexity: observed infimum of 1 - ||(x+y)/2|| vs. the derived lower bound.
  double observed = 0.0;
  double bound = 0.0;
  double K = 0.0;  // K_m (smoothness only)
};

struct ProbeOptions {
  std::int64_t trials = 500;
  int dim = 3;
  std::uint64_t seed = 1;
  bool signed_inputs = false;  // sample entries from [-1,1) instead of [0,1)
  int threads = 1;
  HomOptions hom;
};

// Samples unit-norm pairs, keeps those with ||x-y|| >= eps, and checks the
// convexity bound 1 - ||(x+y)/2|| >= 1 - (1 - (eps/2)^m)^(1/m) per sample
// (tolerance 1e-9). eps in (0,2]; near 2 the admissible set may be empty.
ModuliReport convexity_probe(const BipartiteGraph& h, double eps, const ProbeOptions& opt = {});

// Samples ||x|| = 1, ||y|| = eps and checks ||x+y|| + ||x-y|| - 2 <= K_m/m * eps^2
// per sample (tolerance 1e-9). eps in (0,1].
ModuliReport smoothness_probe(const BipartiteGraph& h, double eps, const ProbeOptions& opt = {});

// Scalar two-point inequality behind the moduli bounds:
// (x+y)^p + (x-y)^p <= 2^(p-1) (x^p + y^p) for 0 <= y <= x, p >= 2.
// (The inequality reverses for p < 2.)
double two_point_gap(double x, double y, double p);

}  // namespace gnorm
