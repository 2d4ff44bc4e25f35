#include "gnorm/norms.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace gnorm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_edges(const BipartiteGraph& g) {
  require(g.m() >= 1, "graph norm: graph must have at least one edge");
}

Eigen::VectorXd singular_values(const Matrix& w) {
  Eigen::JacobiSVD<Matrix> svd(w, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double wnorm = w.norm();
  if (wnorm > 0.0) {
    double residual =
        (svd.matrixU() * svd.singularValues().asDiagonal() * svd.matrixV().transpose() - w)
            .norm();
    if (residual > 1e-10 * wnorm)
      throw std::runtime_error("schatten_norm: factorization residual exceeds 1e-10");
  }
  return svd.singularValues();
}

}  // namespace

double graph_norm(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt) {
  require_edges(g);
  return std::pow(std::abs(hom_sum(g, w, opt)), 1.0 / g.m());
}

double graph_rnorm(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt) {
  require_edges(g);
  return std::pow(hom_sum(g, w.cwiseAbs(), opt), 1.0 / g.m());
}

double normalized_rnorm(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt) {
  require_edges(g);
  return std::pow(hom_density(g, w.cwiseAbs(), opt), 1.0 / g.m());
}

double graph_norm_of_kind(const BipartiteGraph& g, const Matrix& w, NormKind kind,
                          const HomOptions& opt) {
  switch (kind) {
    case NormKind::Plain:
      return graph_norm(g, w, opt);
    case NormKind::Rectified:
      return graph_rnorm(g, w, opt);
    case NormKind::NormalizedRectified:
      return normalized_rnorm(g, w, opt);
  }
  throw std::invalid_argument("graph_norm_of_kind: unknown kind");
}

double schatten_norm(const Matrix& w, double p) {
  require(p >= 1.0, "schatten_norm: p must be >= 1");
  require(w.rows() >= 1 && w.cols() >= 1, "schatten_norm: matrix must be nonempty");
  Eigen::VectorXd sv = singular_values(w);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) sum += std::pow(sv[i], p);
  return std::pow(sum, 1.0 / p);
}

NormReport make_norm_report(const BipartiteGraph& g, const Matrix& w, NormKind kind,
                            std::string graph_id, const HomOptions& opt) {
  require_edges(g);
  NormReport r;
  r.graph = std::move(graph_id);
  r.kind = kind;
  r.m = g.m();
  switch (kind) {
    case NormKind::Plain:
      r.hom = hom_sum(g, w, opt);
      break;
    case NormKind::Rectified:
      r.hom = hom_sum(g, w.cwiseAbs(), opt);
      break;
    case NormKind::NormalizedRectified:
      r.hom = hom_density(g, w.cwiseAbs(), opt);
      break;
  }
  r.value = std::pow(std::abs(r.hom), 1.0 / r.m);
  return r;
}

GapReport cycle_schatten_gap(int n, const Matrix& w, const HomOptions& opt) {
  require(n >= 1, "cycle_schatten_gap: n must be >= 1");
  GapReport r;
  r.lhs = graph_norm(make_even_cycle(n), w, opt);
  r.rhs = schatten_norm(w, 2.0 * n);
  r.gap = r.lhs - r.rhs;
  return r;
}

GapReport trace_holder_gap(const Matrix& v, const Matrix& w, double p, double q) {
  require(p >= 1.0 && q >= 1.0, "trace_holder_gap: p and q must be >= 1");
  require(v.cols() == w.rows(), "trace_holder_gap: inner dimensions must match");
  const double inv_r = 1.0 / p + 1.0 / q;
  require(inv_r <= 1.0 + 1e-15, "trace_holder_gap: 1/p + 1/q must be <= 1 (r >= 1)");
  const double r_exp = 1.0 / inv_r;
  GapReport r;
  r.lhs = schatten_norm(v * w, r_exp);
  r.rhs = schatten_norm(v, p) * schatten_norm(w, q);
  r.gap = r.lhs - r.rhs;
  return r;
}

}  // namespace gnorm
