#include "gnorm/holder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "gnorm/errors.hpp"
#include "gnorm/rng.hpp"

namespace gnorm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool exceeds(double lhs, double rhs, double rel) {
  return lhs - rhs > rel * std::max(1.0, std::abs(rhs));
}

}  // namespace

DegreeCheck check_same_side_degrees(const BipartiteGraph& g) {
  g.validate();
  DegreeCheck r;
  auto scan = [&r](const std::vector<int>& deg, char side) {
    for (size_t i = 1; i < deg.size(); ++i) {
      if (deg[i] != deg[0]) {
        r.pass = false;
        r.side = side;
        r.u = 0;
        r.v = static_cast<int>(i);
        r.deg_u = deg[0];
        r.deg_v = deg[i];
        return false;
      }
    }
    return true;
  };
  if (!scan(x_degrees(g), 'x')) return r;
  scan(y_degrees(g), 'y');
  return r;
}

DensityCheck check_subgraph_density(const BipartiteGraph& g) {
  g.validate();
  const int n = g.n();
  if (n > 24) throw guard_error("check_subgraph_density: n > 24");
  const long long m = g.m();
  DensityCheck r;
  r.graph_ratio = n >= 2 ? static_cast<double>(m) / (n - 1) : 0.0;
  if (n < 2) return r;

  std::vector<std::uint32_t> emask(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e)
    emask[e] = (1u << g.edges[e].first) | (1u << (g.x_size + g.edges[e].second));

  // Max-ratio violating subset; ratios compared exactly by cross-multiplication.
  std::uint32_t best_mask = 0;
  long long best_m = 0, best_d = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int np = std::popcount(mask);
    if (np < 2) continue;
    long long mp = 0;
    for (std::uint32_t em : emask) mp += (em & mask) == em;
    if (mp * (n - 1) > m * (np - 1)) {
      if (mp * best_d > best_m * (np - 1)) {
        best_mask = mask;
        best_m = mp;
        best_d = np - 1;
      }
    }
  }
  if (best_mask) {
    r.pass = false;
    for (int i = 0; i < g.x_size; ++i)
      if (best_mask >> i & 1u) r.xs.push_back(i);
    for (int j = 0; j < g.y_size; ++j)
      if (best_mask >> (g.x_size + j) & 1u) r.ys.push_back(j);
    r.sub_edges = best_m;
    r.sub_vertices = std::popcount(best_mask);
    r.sub_ratio = static_cast<double>(best_m) / best_d;
  }
  return r;
}

CriterionReport criterion_report(const BipartiteGraph& g) {
  CriterionReport r;
  r.degrees = check_same_side_degrees(g);
  r.density = check_subgraph_density(g);
  r.independent_set = max_independent_set(g);
  return r;
}

double holder_gap(const EdgeDecoration& d, NormKind kind, const HomOptions& opt) {
  d.validate();
  require(kind == NormKind::Plain || kind == NormKind::Rectified,
          "holder_gap: kind must be plain or rectified");
  double rhs = 1.0;
  for (const auto& w : d.weights) rhs *= graph_norm_of_kind(d.graph, w, kind, opt);
  return hom_sum_decorated(d, opt) - rhs;
}

WitnessReport degree_witness(const BipartiteGraph& g, int v, int k) {
  g.validate();
  require(g.m() >= 1, "degree_witness: graph must have edges");
  require(v >= 0 && v < g.y_size, "degree_witness: v must be a Y vertex index");
  require(k >= 2, "degree_witness: k must be >= 2");
  Matrix w = Matrix::Zero(k, k);
  w.row(0).setOnes();
  w.col(0).setOnes();
  Matrix w1 = Matrix::Zero(k, k);
  w1(0, 0) = 1.0;
  std::vector<Matrix> mats;
  mats.reserve(g.edges.size());
  for (const auto& e : g.edges) mats.push_back(e.second == v ? w1 : w);
  WitnessReport r;
  r.decoration = EdgeDecoration(g, std::move(mats));
  r.lhs = hom_sum_decorated(r.decoration);
  r.rhs = 1.0;
  for (const auto& mat : r.decoration.weights) r.rhs *= graph_rnorm(g, mat);
  r.violation = exceeds(r.lhs, r.rhs, 1e-9);
  return r;
}

WitnessReport density_witness(const BipartiteGraph& g, const std::vector<int>& xs,
                              const std::vector<int>& ys, const Vector& lambda) {
  g.validate();
  require(lambda.size() >= 1, "density_witness: lambda must be nonempty");
  require(lambda.minCoeff() >= 0.0, "density_witness: lambda must be nonnegative");
  BipartiteGraph sub = induced_subgraph(g, xs, ys);
  const int m = g.m(), mp = sub.m(), n = g.n(), np = sub.n();
  require(mp >= 1, "density_witness: induced subgraph has no edges");
  const int k = static_cast<int>(lambda.size());

  std::vector<bool> in_x(g.x_size, false), in_y(g.y_size, false);
  for (int x : xs) in_x[x] = true;
  for (int y : ys) in_y[y] = true;
  Matrix diag = lambda.asDiagonal();
  Matrix ones = Matrix::Ones(k, k);
  std::vector<Matrix> mats;
  mats.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) mats.push_back(in_x[u] && in_y[v] ? diag : ones);

  WitnessReport r;
  r.decoration = EdgeDecoration(g, std::move(mats));
  r.lhs = hom_sum_decorated(r.decoration);
  r.rhs = 1.0;
  for (const auto& mat : r.decoration.weights) r.rhs *= graph_rnorm(g, mat);
  r.violation = exceeds(r.lhs, r.rhs, 1e-9);

  double sum_mp = 0.0, sum_m = 0.0;
  for (int i = 0; i < k; ++i) {
    sum_mp += std::pow(lambda[i], mp);
    sum_m += std::pow(lambda[i], m);
  }
  r.closed_lhs = std::pow(k, n - np) * sum_mp;
  r.closed_rhs = std::pow(k, static_cast<double>(n) * (m - mp) / m) * std::pow(sum_m, double(mp) / m);
  return r;
}

namespace {

EdgeDecoration sample_decoration(const BipartiteGraph& g, int dim, NormKind kind, Rng rng) {
  std::vector<Matrix> mats(g.edges.size());
  for (auto& w : mats) {
    w.resize(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        w(i, j) = kind == NormKind::Rectified ? rng.uniform() : rng.uniform_signed();
  }
  return EdgeDecoration(g, std::move(mats));
}

struct GapEval {
  double lhs = 0.0, rhs = 0.0;
  std::vector<double> norms;
};

GapEval eval_gap(const EdgeDecoration& d, NormKind kind, const HomOptions& hom) {
  GapEval e;
  e.lhs = hom_sum_decorated(d, hom);
  e.rhs = 1.0;
  for (const auto& w : d.weights) {
    e.norms.push_back(graph_norm_of_kind(d.graph, w, kind, hom));
    e.rhs *= e.norms.back();
  }
  return e;
}

bool is_violation(const GapEval& e) { return e.lhs - e.rhs > 1e-6 * e.rhs; }

// Coordinate-wise hill climb on the decorated gap; heuristic refinement.
GapEval hill_climb(EdgeDecoration& d, NormKind kind, const HomOptions& hom) {
  GapEval cur = eval_gap(d, kind, hom);
  double gap = cur.lhs - cur.rhs;
  const int dim = d.rows();
  double step = 0.1;
  for (int pass = 0; pass < 100; ++pass, step *= 0.95) {
    for (size_t e = 0; e < d.weights.size(); ++e) {
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          for (double delta : {step, -step}) {
            const double old = d.weights[e](i, j);
            double cand = old + delta;
            if (kind == NormKind::Rectified && cand < 0.0) cand = 0.0;
            if (cand == old) continue;
            d.weights[e](i, j) = cand;
            double norm_e = graph_norm_of_kind(d.graph, d.weights[e], kind, hom);
            double rhs = 1.0;
            for (size_t f = 0; f < cur.norms.size(); ++f) rhs *= (f == e ? norm_e : cur.norms[f]);
            double lhs = hom_sum_decorated(d, hom);
            if (lhs - rhs > gap) {
              gap = lhs - rhs;
              cur.lhs = lhs;
              cur.rhs = rhs;
              cur.norms[e] = norm_e;
            } else {
              d.weights[e](i, j) = old;
            }
          }
        }
      }
    }
  }
  return cur;
}

}  // namespace

std::optional<SearchResult> search_violation(const BipartiteGraph& g, const SearchOptions& opt) {
  g.validate();
  require(g.m() >= 1, "search_violation: graph must have edges");
  require(opt.dim >= 1 && opt.trials >= 1, "search_violation: dim and trials must be >= 1");
  require(opt.kind == NormKind::Plain || opt.kind == NormKind::Rectified,
          "search_violation: kind must be plain or rectified");

  const int threads = std::max(1, opt.threads);
  struct Candidate {
    double ratio;  // lhs / rhs, higher first
    std::int64_t trial;
  };
  std::vector<std::int64_t> hit(threads, -1);
  std::vector<std::vector<Candidate>> cands(threads);

  auto worker = [&](int t) {
    for (std::int64_t trial = t; trial < opt.trials; trial += threads) {
      EdgeDecoration d = sample_decoration(g, opt.dim, opt.kind, Rng::substream(opt.seed, trial));
      GapEval e = eval_gap(d, opt.kind, opt.hom);
      if (is_violation(e)) {
        if (hit[t] < 0) hit[t] = trial;
        break;
      }
      if (opt.refine_top > 0) {
        double ratio = e.rhs > 0 ? e.lhs / e.rhs : (e.lhs > 0 ? 1e300 : 0.0);
        cands[t].push_back({ratio, trial});
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::int64_t first = -1;
  for (std::int64_t h : hit)
    if (h >= 0 && (first < 0 || h < first)) first = h;
  if (first >= 0) {
    EdgeDecoration d = sample_decoration(g, opt.dim, opt.kind, Rng::substream(opt.seed, first));
    GapEval e = eval_gap(d, opt.kind, opt.hom);
    return SearchResult{first, e.lhs, e.rhs, e.lhs - e.rhs, false, std::move(d)};
  }
  if (opt.refine_top <= 0) return std::nullopt;

  std::vector<Candidate> all;
  for (auto& c : cands) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    return a.trial < b.trial;
  });
  if (all.size() > static_cast<size_t>(opt.refine_top)) all.resize(opt.refine_top);

  std::optional<SearchResult> best;
  for (const Candidate& c : all) {
    EdgeDecoration d = sample_decoration(g, opt.dim, opt.kind, Rng::substream(opt.seed, c.trial));
    GapEval e = hill_climb(d, opt.kind, opt.hom);
    if (is_violation(e) && (!best || c.trial < best->trial))
      best = SearchResult{c.trial, e.lhs, e.rhs, e.lhs - e.rhs, true, std::move(d)};
  }
  return best;
}

ViolationCertificate amplification_certificate(const EdgeDecoration& d, const HomOptions& opt) {
  d.validate();
  const int m = d.graph.m();
  if (std::pow(static_cast<double>(m), m) > 1e7)
    throw guard_error("amplification_certificate: m^m exceeds 1e7 expansion terms");

  ViolationCertificate cert;
  cert.normalized = d;
  for (auto& w : cert.normalized.weights) {
    double nr = graph_rnorm(d.graph, w, opt);
    require(nr > 0.0, "amplification_certificate: edge matrix has zero rectified norm");
    w /= nr;
  }
  cert.c = hom_sum_decorated(cert.normalized, opt);
  require(cert.c > 1.0, "amplification_certificate: not a violation (normalized sum <= 1)");

  // Smallest n with c^(2n/m) > m.
  const double target = static_cast<double>(m);
  std::int64_t n = 1;
  while (std::pow(cert.c, 2.0 * n / m) <= target) {
    if (++n > 1000000)
      throw guard_error("amplification_certificate: required tensor power exceeds 1e6");
  }
  cert.n = n;

  // rhs^m = sum over maps f: E -> E of (decorated sum with weights w_{f(e)})^(2n).
  EdgeDecoration work = cert.normalized;
  std::vector<int> f(m, 0);
  double sum = 0.0;
  while (true) {
    for (int e = 0; e < m; ++e) work.weights[e] = cert.normalized.weights[f[e]];
    double s = hom_sum_decorated(work, opt);
    sum += std::pow(s, 2.0 * n);
    int pos = m - 1;
    while (pos >= 0 && ++f[pos] == m) f[pos--] = 0;
    if (pos < 0) break;
  }
  cert.lhs = target;
  cert.rhs = std::pow(sum, 1.0 / m);
  cert.margin = cert.rhs - cert.lhs;
  return cert;
}

bool verify_certificate(const ViolationCertificate& cert, const HomOptions& opt) {
  const int m = cert.normalized.graph.m();
  for (const auto& w : cert.normalized.weights) {
    double nr = graph_rnorm(cert.normalized.graph, w, opt);
    if (std::abs(nr - 1.0) > 1e-9) return false;
  }
  HomOptions kopt = opt;
  kopt.kahan = true;
  double c = hom_sum_decorated(cert.normalized, kopt);
  if (!(c > 1.0)) return false;
  if (std::pow(c, 2.0 * cert.n / m) <= m) return false;

  EdgeDecoration work = cert.normalized;
  std::vector<int> f(m, 0);
  double sum = 0.0, comp = 0.0;  // compensated accumulation of the expansion
  while (true) {
    for (int e = 0; e < m; ++e) work.weights[e] = cert.normalized.weights[f[e]];
    double term = std::pow(hom_sum_decorated(work, kopt), 2.0 * cert.n);
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    int pos = m - 1;
    while (pos >= 0 && ++f[pos] == m) f[pos--] = 0;
    if (pos < 0) break;
  }
  double margin = std::pow(sum, 1.0 / m) - m;
  if (!(margin > 0.0)) return false;
  return std::abs(margin - cert.margin) <= 1e-9 * std::max(1.0, std::abs(cert.margin));
}

double odd_degree_nullity(const BipartiteGraph& g, const HomOptions& opt) {
  Matrix w(2, 2);
  w << 1, -1, -1, 1;
  return graph_norm(g, w, opt);
}

}  // namespace gnorm
