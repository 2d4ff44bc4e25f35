#pragma once

#include <string>

#include "gnorm/engine.hpp"

namespace gnorm {

enum class NormKind { Plain, Rectified, NormalizedRectified };

// |hom_sum(g, w)|^(1/m). Requires m >= 1. A seminorm in general: it can vanish
// on nonzero inputs (see odd_degree_nullity).
double graph_norm(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt = {});

// hom_sum(g, |w|)^(1/m): the rectified norm, finite and monotone in |w|.
double graph_rnorm(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt = {});

// hom_density(g, |w|)^(1/m): rectified norm under the uniform probability measure.
// Scale-free across graphs, which makes values comparable along graph chains.
double normalized_rnorm(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt = {});

double graph_norm_of_kind(const BipartiteGraph& g, const Matrix& w, NormKind kind,
                          const HomOptions& opt = {});

// Schatten p-norm: lp norm of the singular value vector, p >= 1.
// Factorization residual is checked against 1e-10 * ||w||_F; failure throws.
double schatten_norm(const Matrix& w, double p);

struct NormReport {
  std::string graph;  // content digest or family name
  NormKind kind = NormKind::Plain;
  int m = 0;
  double hom = 0.0;
  double value = 0.0;
};

NormReport make_norm_report(const BipartiteGraph& g, const Matrix& w, NormKind kind,
                            std::string graph_id, const HomOptions& opt = {});

struct GapReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // lhs - rhs
};

// ||w||_{C_{2n}} (hom engine on the even cycle) minus ||w||_{S_{2n}} (singular
// values). The two routes agree analytically; the gap measures numerical drift.
GapReport cycle_schatten_gap(int n, const Matrix& w, const HomOptions& opt = {});

// ||v*w||_{S_r} minus ||v||_{S_p} * ||w||_{S_q} with 1/r = 1/p + 1/q.
// Nonpositive up to rounding. Requires p, q >= 1 and r >= 1; inner dimensions
// must match.
GapReport trace_holder_gap(const Matrix& v, const Matrix& w, double p, double q);

}  // namespace gnorm
