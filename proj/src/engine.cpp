#include "gnorm/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "gnorm/errors.hpp"

namespace gnorm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// Dense factor over a sorted variable scope; values row-major, last scope
// variable fastest.
struct Factor {
  std::vector<int> scope;
  std::vector<double> values;
};

struct FactorProblem {
  std::vector<int> domain;  // per variable
  std::vector<Factor> factors;
};

constexpr double kNaiveStateGuard = 1e9;
constexpr std::int64_t kElimTableGuard = std::int64_t(1) << 27;

// Groups parallel edge instances into one factor per distinct pair; values are
// multiplied pointwise in canonical edge order.
FactorProblem build_problem(const BipartiteGraph& g, const std::vector<const Matrix*>& per_edge,
                            const VertexDecoration* vd, int rows, int cols) {
  FactorProblem p;
  p.domain.resize(g.n());
  for (int i = 0; i < g.x_size; ++i) p.domain[i] = rows;
  for (int j = 0; j < g.y_size; ++j) p.domain[g.x_size + j] = cols;

  std::map<std::pair<int, int>, Matrix> grouped;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& [u, v] = g.edges[e];
    const Matrix& w = *per_edge[e];
    auto it = grouped.find({u, v});
    if (it == grouped.end())
      grouped.emplace(std::pair<int, int>{u, v}, w);
    else
      it->second = it->second.cwiseProduct(w).eval();
  }
  for (const auto& [uv, w] : grouped) {
    Factor f;
    f.scope = {uv.first, g.x_size + uv.second};
    f.values.resize(static_cast<size_t>(rows) * cols);
    for (int a = 0; a < rows; ++a)
      for (int b = 0; b < cols; ++b) f.values[static_cast<size_t>(a) * cols + b] = w(a, b);
    p.factors.push_back(std::move(f));
  }
  if (vd) {
    require(static_cast<int>(vd->x_weights.size()) == g.x_size &&
                static_cast<int>(vd->y_weights.size()) == g.y_size,
            "vertex decoration: one weight vector per vertex required");
    for (int i = 0; i < g.x_size; ++i) {
      require(static_cast<int>(vd->x_weights[i].size()) == rows,
              "vertex decoration: X weight length mismatch");
      Factor f;
      f.scope = {i};
      f.values.assign(vd->x_weights[i].data(), vd->x_weights[i].data() + rows);
      p.factors.push_back(std::move(f));
    }
    for (int j = 0; j < g.y_size; ++j) {
      require(static_cast<int>(vd->y_weights[j].size()) == cols,
              "vertex decoration: Y weight length mismatch");
      Factor f;
      f.scope = {g.x_size + j};
      f.values.assign(vd->y_weights[j].data(), vd->y_weights[j].data() + cols);
      p.factors.push_back(std::move(f));
    }
  }
  return p;
}

double naive_sum(const FactorProblem& p, bool kahan) {
  double states = 1.0;
  for (int d : p.domain) states *= d;
  if (states > kNaiveStateGuard)
    throw guard_error("naive engine: state space exceeds 1e9 assignments");

  const int n = static_cast<int>(p.domain.size());
  std::vector<int> assign(n, 0);
  // Per-factor flat index strides by variable.
  struct FInfo {
    std::vector<std::pair<int, std::int64_t>> var_stride;
  };
  std::vector<FInfo> info(p.factors.size());
  for (size_t fi = 0; fi < p.factors.size(); ++fi) {
    const auto& s = p.factors[fi].scope;
    std::int64_t stride = 1;
    std::vector<std::int64_t> st(s.size());
    for (int k = static_cast<int>(s.size()) - 1; k >= 0; --k) {
      st[k] = stride;
      stride *= p.domain[s[k]];
    }
    for (size_t k = 0; k < s.size(); ++k) info[fi].var_stride.emplace_back(s[k], st[k]);
  }

  Kahan ksum;
  double sum = 0.0;
  while (true) {
    double prod = 1.0;
    for (size_t fi = 0; fi < p.factors.size(); ++fi) {
      std::int64_t idx = 0;
      for (const auto& [v, st] : info[fi].var_stride) idx += assign[v] * st;
      prod *= p.factors[fi].values[idx];
    }
    if (kahan)
      ksum.add(prod);
    else
      sum += prod;
    int pos = n - 1;
    while (pos >= 0 && ++assign[pos] == p.domain[pos]) assign[pos--] = 0;
    if (pos < 0) break;
  }
  return kahan ? ksum.sum : sum;
}

// Interaction graph adjacency from factor scopes.
std::vector<std::set<int>> interaction_adjacency(int n, const std::vector<Factor>& factors) {
  std::vector<std::set<int>> adj(n);
  for (const auto& f : factors)
    for (size_t a = 0; a < f.scope.size(); ++a)
      for (size_t b = a + 1; b < f.scope.size(); ++b) {
        adj[f.scope[a]].insert(f.scope[b]);
        adj[f.scope[b]].insert(f.scope[a]);
      }
  return adj;
}

EliminationPlan min_fill_plan(int n, std::vector<std::set<int>> adj) {
  EliminationPlan plan;
  std::vector<bool> alive(n, true);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      long fill = 0;
      std::vector<int> nb;
      for (int u : adj[v])
        if (alive[u]) nb.push_back(u);
      for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b)
          if (!adj[nb[a]].count(nb[b])) fill++;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    EliminationStep s;
    s.vertex = best;
    for (int u : adj[best])
      if (alive[u]) s.scope.push_back(u);
    std::sort(s.scope.begin(), s.scope.end());
    for (size_t a = 0; a < s.scope.size(); ++a)
      for (size_t b = a + 1; b < s.scope.size(); ++b) {
        adj[s.scope[a]].insert(s.scope[b]);
        adj[s.scope[b]].insert(s.scope[a]);
      }
    plan.width = std::max(plan.width, static_cast<int>(s.scope.size()));
    alive[best] = false;
    plan.steps.push_back(std::move(s));
  }
  return plan;
}

double eliminate_sum(FactorProblem p, const EliminationPlan& plan, bool kahan) {
  for (const auto& step : plan.steps) {
    const int v = step.vertex;
    std::vector<Factor> touching;
    for (auto it = p.factors.begin(); it != p.factors.end();) {
      if (std::binary_search(it->scope.begin(), it->scope.end(), v)) {
        touching.push_back(std::move(*it));
        it = p.factors.erase(it);
      } else {
        ++it;
      }
    }
    if (touching.empty()) {
      // Isolated variable: contributes its domain size.
      Factor f;
      f.values = {static_cast<double>(p.domain[v])};
      p.factors.push_back(std::move(f));
      continue;
    }
    // Result scope: union of touching scopes minus v.
    std::set<int> uset;
    for (const auto& f : touching) uset.insert(f.scope.begin(), f.scope.end());
    uset.erase(v);
    std::vector<int> scope(uset.begin(), uset.end());

    std::int64_t table = 1;
    for (int u : scope) {
      table *= p.domain[u];
      if (table > kElimTableGuard)
        throw guard_error("eliminated engine: intermediate table exceeds 2^27 entries");
    }
    // Per-factor strides: by result-scope position, and for v.
    struct FView {
      const Factor* f;
      std::vector<std::pair<int, std::int64_t>> pos_stride;  // (position in scope, stride)
      std::int64_t v_stride = 0;
    };
    std::vector<FView> views;
    for (const auto& f : touching) {
      FView view;
      view.f = &f;
      std::int64_t stride = 1;
      for (int k = static_cast<int>(f.scope.size()) - 1; k >= 0; --k) {
        int var = f.scope[k];
        if (var == v) {
          view.v_stride = stride;
        } else {
          int pos = static_cast<int>(std::lower_bound(scope.begin(), scope.end(), var) -
                                     scope.begin());
          view.pos_stride.emplace_back(pos, stride);
        }
        stride *= p.domain[var];
      }
      views.push_back(std::move(view));
    }

    Factor result;
    result.scope = scope;
    result.values.assign(static_cast<size_t>(table), 0.0);
    std::vector<int> assign(scope.size(), 0);
    std::vector<std::int64_t> base(views.size(), 0);
    const int vdom = p.domain[v];
    for (std::int64_t out = 0; out < table; ++out) {
      for (size_t fi = 0; fi < views.size(); ++fi) {
        base[fi] = 0;
        for (const auto& [pos, st] : views[fi].pos_stride) base[fi] += assign[pos] * st;
      }
      double acc = 0.0;
      Kahan kacc;
      for (int val = 0; val < vdom; ++val) {
        double prod = 1.0;
        for (size_t fi = 0; fi < views.size(); ++fi)
          prod *= views[fi].f->values[base[fi] + val * views[fi].v_stride];
        if (kahan)
          kacc.add(prod);
        else
          acc += prod;
      }
      result.values[out] = kahan ? kacc.sum : acc;
      int pos = static_cast<int>(scope.size()) - 1;
      while (pos >= 0 && ++assign[pos] == p.domain[scope[pos]]) assign[pos--] = 0;
    }
    p.factors.push_back(std::move(result));
  }
  // All variables eliminated: every factor is a scalar.
  double out = 1.0;
  for (const auto& f : p.factors) out *= f.values.at(0);
  return out;
}

double run_engine(const FactorProblem& p, const HomOptions& opt) {
  if (opt.engine == Engine::Naive) return naive_sum(p, opt.kahan);
  EliminationPlan plan =
      min_fill_plan(static_cast<int>(p.domain.size()), interaction_adjacency(
                        static_cast<int>(p.domain.size()), p.factors));
  return eliminate_sum(p, plan, opt.kahan);
}

std::vector<const Matrix*> same_matrix(const BipartiteGraph& g, const Matrix& w) {
  return std::vector<const Matrix*>(g.edges.size(), &w);
}

void check_matrix(const Matrix& w) {
  require(w.rows() >= 1 && w.cols() >= 1, "weight matrix: must be nonempty");
}

}  // namespace

EdgeDecoration::EdgeDecoration(BipartiteGraph g, const Matrix& w)
    : graph(std::move(g)), weights(graph.edges.size(), w) {}

EdgeDecoration::EdgeDecoration(BipartiteGraph g, std::vector<Matrix> ws)
    : graph(std::move(g)), weights(std::move(ws)) {}

void EdgeDecoration::validate() const {
  graph.validate();
  require(weights.size() == graph.edges.size(), "decoration: one matrix per edge required");
  require(!weights.empty(), "decoration: graph has no edges");
  for (const auto& w : weights) {
    check_matrix(w);
    require(w.rows() == weights.front().rows() && w.cols() == weights.front().cols(),
            "decoration: all matrices must share dimensions");
  }
}

EliminationPlan plan_elimination(const BipartiteGraph& g) {
  g.validate();
  // Structure only: the plan depends on the interaction graph, not the weights.
  Matrix dummy = Matrix::Zero(1, 1);
  FactorProblem p = build_problem(g, same_matrix(g, dummy), nullptr, 1, 1);
  return min_fill_plan(g.n(), interaction_adjacency(g.n(), p.factors));
}

double hom_sum(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt) {
  g.validate();
  check_matrix(w);
  return run_engine(build_problem(g, same_matrix(g, w), nullptr, static_cast<int>(w.rows()),
                                  static_cast<int>(w.cols())),
                    opt);
}

double hom_sum_decorated(const EdgeDecoration& d, const HomOptions& opt) {
  d.validate();
  std::vector<const Matrix*> ptrs;
  ptrs.reserve(d.weights.size());
  for (const auto& w : d.weights) ptrs.push_back(&w);
  return run_engine(build_problem(d.graph, ptrs, nullptr, d.rows(), d.cols()), opt);
}

double hom_sum_decorated(const EdgeDecoration& d, const VertexDecoration& v,
                         const HomOptions& opt) {
  d.validate();
  std::vector<const Matrix*> ptrs;
  ptrs.reserve(d.weights.size());
  for (const auto& w : d.weights) ptrs.push_back(&w);
  return run_engine(build_problem(d.graph, ptrs, &v, d.rows(), d.cols()), opt);
}

double hom_sum_symmetric(const GeneralGraph& g, const Matrix& w, const HomOptions& opt) {
  g.validate();
  check_matrix(w);
  require(w.rows() == w.cols(), "hom_sum_symmetric: matrix must be square");
  require((w - w.transpose()).cwiseAbs().maxCoeff() <= 1e-12,
          "hom_sum_symmetric: matrix must be symmetric within 1e-12");
  FactorProblem p;
  const int k = static_cast<int>(w.rows());
  p.domain.assign(g.v_size, k);
  std::map<std::pair<int, int>, Matrix> grouped;
  for (auto [u, v] : g.edges) {
    if (u > v) std::swap(u, v);
    auto it = grouped.find({u, v});
    if (it == grouped.end())
      grouped.emplace(std::pair<int, int>{u, v}, w);
    else
      it->second = it->second.cwiseProduct(w).eval();
  }
  for (const auto& [uv, mat] : grouped) {
    Factor f;
    f.scope = {uv.first, uv.second};
    f.values.resize(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) f.values[static_cast<size_t>(a) * k + b] = mat(a, b);
    p.factors.push_back(std::move(f));
  }
  return run_engine(p, opt);
}

double hom_density(const BipartiteGraph& g, const Matrix& w, const HomOptions& opt) {
  double h = hom_sum(g, w, opt);
  return h / (std::pow(static_cast<double>(w.rows()), g.x_size) *
              std::pow(static_cast<double>(w.cols()), g.y_size));
}

double hom_density_symmetric(const GeneralGraph& g, const Matrix& w, const HomOptions& opt) {
  double h = hom_sum_symmetric(g, w, opt);
  return h / std::pow(static_cast<double>(w.rows()), g.v_size);
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  check_matrix(a);
  check_matrix(b);
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

Matrix tensor_power(const Matrix& w, int k) {
  require(k >= 1, "tensor_power: k must be >= 1");
  check_matrix(w);
  double entries = std::pow(static_cast<double>(w.rows()), k) *
                   std::pow(static_cast<double>(w.cols()), k);
  if (entries > 1e8) throw guard_error("tensor_power: result exceeds 1e8 entries");
  Matrix r = w;
  for (int i = 1; i < k; ++i) r = tensor_product(r, w);
  return r;
}

Matrix pointwise_power(const Matrix& w, int k) {
  require(k >= 0, "pointwise_power: k must be >= 0");
  check_matrix(w);
  Matrix r = Matrix::Ones(w.rows(), w.cols());
  for (int i = 0; i < k; ++i) r = r.cwiseProduct(w).eval();
  return r;
}

}  // namespace gnorm
