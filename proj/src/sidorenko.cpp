#include "gnorm/sidorenko.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "gnorm/errors.hpp"
#include "gnorm/norms.hpp"

namespace gnorm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

double sidorenko_gap(const BipartiteGraph& h, const Matrix& w, const HomOptions& opt) {
  h.validate();
  require(w.size() > 0, "sidorenko_gap: weight matrix must be nonempty");
  require(w.minCoeff() >= 0.0, "sidorenko_gap: weight matrix must be nonnegative");
  const double edge_density = w.sum() / w.size();
  return hom_density(h, w, opt) - std::pow(edge_density, h.m());
}

double subgraph_norm_monotonicity_gap(const BipartiteGraph& h, const BipartiteGraph& g,
                                      const Matrix& w, const HomOptions& opt) {
  h.validate();
  g.validate();
  require(g.x_size == h.x_size && g.y_size == h.y_size,
          "subgraph_norm_monotonicity_gap: graphs must share vertex sides");
  require(g.m() >= 1, "subgraph_norm_monotonicity_gap: subgraph must have edges");
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : h.edges) ++count[e];
  for (const auto& e : g.edges)
    require(count[e]-- > 0, "subgraph_norm_monotonicity_gap: edges not a sub-multiset");
  return normalized_rnorm(h, w, opt) - normalized_rnorm(g, w, opt);
}

std::vector<double> hypercube_chain(const Matrix& w, int n_max, const HomOptions& opt) {
  require(n_max >= 1, "hypercube_chain: n_max must be >= 1");
  if (n_max > 4) throw guard_error("hypercube_chain: n_max > 4");
  std::vector<double> values;
  values.reserve(n_max);
  for (int n = 1; n <= n_max; ++n)
    values.push_back(normalized_rnorm(make_hypercube(n), w, opt));
  return values;
}

std::vector<double> even_path_chain(const Matrix& w, int n_max, const HomOptions& opt) {
  require(n_max >= 1, "even_path_chain: n_max must be >= 1");
  require(w.rows() == w.cols(), "even_path_chain: matrix must be square");
  require((w - w.transpose()).cwiseAbs().maxCoeff() <= 1e-12,
          "even_path_chain: matrix must be symmetric");
  std::vector<double> values;
  values.reserve(n_max);
  for (int n = 1; n <= n_max; ++n)
    values.push_back(normalized_rnorm(make_path(2 * n), w, opt));
  return values;
}

double cube_claim_gap(int n, const VertexDecoration& vd, const std::vector<Matrix>& edge_weights,
                      const HomOptions& opt) {
  require(n == 2 || n == 3, "cube_claim_gap: n must be 2 or 3");
  BipartiteGraph q = make_hypercube(n);
  require(static_cast<int>(vd.x_weights.size()) == q.x_size &&
              static_cast<int>(vd.y_weights.size()) == q.y_size,
          "cube_claim_gap: vertex weight count mismatch");
  require(edge_weights.size() == q.edges.size(), "cube_claim_gap: edge weight count mismatch");

  VertexDecoration avd;
  for (const auto& f : vd.x_weights) avd.x_weights.push_back(f.cwiseAbs());
  for (const auto& g : vd.y_weights) avd.y_weights.push_back(g.cwiseAbs());
  std::vector<Matrix> aw;
  aw.reserve(edge_weights.size());
  for (const auto& w : edge_weights) aw.push_back(w.cwiseAbs());

  EdgeDecoration mixed(q, aw);
  const double lhs = hom_sum_decorated(mixed, avd, opt);

  const int m = q.m();
  double rhs = 1.0;
  for (size_t e = 0; e < q.edges.size(); ++e) {
    const auto& [a, b] = q.edges[e];
    VertexDecoration collapse;
    collapse.x_weights.assign(q.x_size, avd.x_weights[a]);
    collapse.y_weights.assign(q.y_size, avd.y_weights[b]);
    EdgeDecoration uniform(q, aw[e]);
    rhs *= std::pow(hom_sum_decorated(uniform, collapse, opt), 1.0 / m);
  }
  return lhs - rhs;
}

}  // namespace gnorm
