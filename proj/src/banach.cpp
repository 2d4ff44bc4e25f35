#include "gnorm/banach.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gnorm/rng.hpp"

namespace gnorm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string describe(const BipartiteGraph& g) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "bipartite x=%d y=%d m=%d", g.x_size, g.y_size, g.m());
  return buf;
}

}  // namespace

double key_inequality_gap(const BipartiteGraph& h, const Matrix& w1, const Matrix& w2,
                          const HomOptions& opt) {
  h.validate();
  const int m = h.m();
  require(m >= 1, "key_inequality_gap: graph must have edges");
  require(w1.rows() == w2.rows() && w1.cols() == w2.cols(),
          "key_inequality_gap: matrices must have equal shape");
  const double lhs =
      std::abs(hom_sum(h, w1 + w2, opt)) + std::abs(hom_sum(h, w1 - w2, opt));
  const double n1 = graph_norm(h, w1, opt);
  const double n2 = graph_norm(h, w2, opt);
  const double rhs = std::pow(n1 + n2, m) + std::pow(std::abs(n1 - n2), m);
  return lhs - rhs;
}

double derive_Kp(double p) {
  require(p >= 2.0, "derive_Kp: p must be >= 2");
  // ((1+y)^p - 1) + ((1-y)^p - 1), each via expm1/log1p for small y.
  auto phi = [p](double y) {
    const double a = std::expm1(p * std::log1p(y));
    const double b = std::expm1(p * std::log1p(-y));
    return (a + b) / (y * y);
  };
  const double lo = 1e-5;
  std::vector<double> grid;
  const int steps = 2000;
  for (int i = 0; i <= steps; ++i) {
    grid.push_back(lo * std::pow(1.0 / lo, static_cast<double>(i) / steps));
    grid.push_back(lo + (1.0 - lo) * i / steps);
  }
  double best_y = lo, best = phi(lo);
  for (double y : grid) {
    const double v = phi(y);
    if (v > best) {
      best = v;
      best_y = y;
    }
  }
  double a = std::max(lo, best_y * 0.5);
  double b = std::min(1.0, best_y * 2.0);
  for (int it = 0; it < 200; ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (phi(m1) < phi(m2))
      a = m1;
    else
      b = m2;
  }
  return std::max(best, phi(0.5 * (a + b)));
}

namespace {

Matrix sample_matrix(int dim, bool signed_inputs, Rng& rng) {
  Matrix w(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) w(i, j) = signed_inputs ? rng.uniform_signed() : rng.uniform();
  return w;
}

struct ProbeAccum {
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  double observed = 0.0;
  bool seen = false;
};

template <typename TrialFn>
ProbeAccum run_trials(const ProbeOptions& opt, bool min_observed, TrialFn&& trial) {
  const int threads = std::max(1, opt.threads);
  std::vector<ProbeAccum> acc(threads);
  auto worker = [&](int t) {
    for (std::int64_t i = t; i < opt.trials; i += threads) {
      Rng rng = Rng::substream(opt.seed, i);
      trial(rng, acc[t]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  ProbeAccum total;
  for (const auto& a : acc) {
    total.samples += a.samples;
    total.violations += a.violations;
    if (a.seen) {
      if (!total.seen)
        total.observed = a.observed;
      else
        total.observed = min_observed ? std::min(total.observed, a.observed)
                                      : std::max(total.observed, a.observed);
      total.seen = true;
    }
  }
  return total;
}

void record(ProbeAccum& a, double value, bool min_observed) {
  ++a.samples;
  if (!a.seen) {
    a.observed = value;
    a.seen = true;
  } else {
    a.observed = min_observed ? std::min(a.observed, value) : std::max(a.observed, value);
  }
}

}  // namespace

ModuliReport convexity_probe(const BipartiteGraph& h, double eps, const ProbeOptions& opt) {
  h.validate();
  const int m = h.m();
  require(m >= 1, "convexity_probe: graph must have edges");
  require(eps > 0.0 && eps <= 2.0, "convexity_probe: eps must lie in (0, 2]");
  require(opt.dim >= 1 && opt.trials >= 1, "convexity_probe: dim and trials must be >= 1");

  ModuliReport r;
  r.graph = describe(h);
  r.m = m;
  r.epsilon = eps;
  r.bound = 1.0 - std::pow(1.0 - std::pow(eps / 2.0, m), 1.0 / m);

  ProbeAccum acc = run_trials(opt, /*min_observed=*/true, [&](Rng& rng, ProbeAccum& a) {
    Matrix x = sample_matrix(opt.dim, opt.signed_inputs, rng);
    Matrix y = sample_matrix(opt.dim, opt.signed_inputs, rng);
    const double nx = graph_norm(h, x, opt.hom);
    const double ny = graph_norm(h, y, opt.hom);
    if (nx <= 0.0 || ny <= 0.0) return;
    x /= nx;
    y /= ny;
    if (graph_norm(h, x - y, opt.hom) < eps) return;
    const double depth = 1.0 - graph_norm(h, (x + y) / 2.0, opt.hom);
    record(a, depth, true);
    if (depth < r.bound - 1e-9) ++a.violations;
  });
  r.samples = acc.samples;
  r.violations = acc.violations;
  r.observed = acc.observed;
  return r;
}

ModuliReport smoothness_probe(const BipartiteGraph& h, double eps, const ProbeOptions& opt) {
  h.validate();
  const int m = h.m();
  require(m >= 1, "smoothness_probe: graph must have edges");
  require(eps > 0.0 && eps <= 1.0, "smoothness_probe: eps must lie in (0, 1]");
  require(opt.dim >= 1 && opt.trials >= 1, "smoothness_probe: dim and trials must be >= 1");

  ModuliReport r;
  r.graph = describe(h);
  r.m = m;
  r.epsilon = eps;
  r.K = derive_Kp(m);
  r.bound = r.K / m * eps * eps;

  ProbeAccum acc = run_trials(opt, /*min_observed=*/false, [&](Rng& rng, ProbeAccum& a) {
    Matrix x = sample_matrix(opt.dim, opt.signed_inputs, rng);
    Matrix y = sample_matrix(opt.dim, opt.signed_inputs, rng);
    const double nx = graph_norm(h, x, opt.hom);
    const double ny = graph_norm(h, y, opt.hom);
    if (nx <= 0.0 || ny <= 0.0) return;
    x /= nx;
    y *= eps / ny;
    const double excess =
        graph_norm(h, x + y, opt.hom) + graph_norm(h, x - y, opt.hom) - 2.0;
    record(a, excess, false);
    if (excess > r.bound + 1e-9) ++a.violations;
  });
  r.samples = acc.samples;
  r.violations = acc.violations;
  r.observed = acc.observed;
  return r;
}

double two_point_gap(double x, double y, double p) {
  require(p >= 2.0, "two_point_gap: p must be >= 2");
  require(0.0 <= y && y <= x, "two_point_gap: need 0 <= y <= x");
  return std::pow(x + y, p) + std::pow(x - y, p) -
         std::pow(2.0, p - 1.0) * (std::pow(x, p) + std::pow(y, p));
}

}  // namespace gnorm
