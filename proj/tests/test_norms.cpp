#include <doctest.h>

#include <cmath>
#include <gnorm/norms.hpp>
#include <gnorm/rng.hpp>

#include "oracle.hpp"

using namespace gnorm;

namespace {

Matrix random_matrix(int rows, int cols, Rng& rng) {
  Matrix w(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w(i, j) = rng.uniform_signed();
  return w;
}

}  // namespace

TEST_CASE("graph norms and rectified norms") {
  BipartiteGraph c4 = make_even_cycle(2);
  Matrix id = Matrix::Identity(2, 2);
  CHECK(graph_norm(c4, id) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
  CHECK(graph_rnorm(c4, id) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
  CHECK(normalized_rnorm(c4, id) == doctest::Approx(0.59460355750136053).epsilon(1e-14));

  Matrix signs(2, 2);
  signs << 1, -1, -1, 1;
  BipartiteGraph p3 = make_path(3);
  const double hom_signed = oracle::hom_brute(p3, signs);
  Matrix rect = signs.cwiseAbs();
  const double hom_rect = oracle::hom_brute(p3, rect);
  CHECK(graph_norm(p3, signs) ==
        doctest::Approx(std::pow(std::abs(hom_signed), 1.0 / 3)).epsilon(1e-12));
  CHECK(graph_rnorm(p3, signs) == doctest::Approx(std::pow(hom_rect, 1.0 / 3)).epsilon(1e-12));

  CHECK(graph_norm_of_kind(p3, signs, NormKind::Plain) == graph_norm(p3, signs));
  CHECK(graph_norm_of_kind(p3, signs, NormKind::Rectified) == graph_rnorm(p3, signs));
  CHECK(graph_norm_of_kind(p3, signs, NormKind::NormalizedRectified) ==
        normalized_rnorm(p3, signs));

  BipartiteGraph edgeless;
  edgeless.x_size = 1;
  edgeless.y_size = 1;
  CHECK_THROWS_AS(graph_norm(edgeless, id), std::invalid_argument);
}

TEST_CASE("norm reports carry the pieces") {
  BipartiteGraph c4 = make_even_cycle(2);
  Matrix id = Matrix::Identity(2, 2);
  NormReport r = make_norm_report(c4, id, NormKind::Plain, "cycle4");
  CHECK(r.graph == "cycle4");
  CHECK(r.kind == NormKind::Plain);
  CHECK(r.m == 4);
  CHECK(r.hom == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.value == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));

  NormReport nr = make_norm_report(c4, id, NormKind::NormalizedRectified, "cycle4");
  CHECK(nr.hom == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(nr.value == doctest::Approx(0.59460355750136053).epsilon(1e-14));
}

TEST_CASE("schatten norms from singular values") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 3;
  d(1, 1) = 4;
  CHECK(schatten_norm(d, 2) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(schatten_norm(d, 1) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(schatten_norm(d, 4) == doctest::Approx(std::pow(337.0, 0.25)).epsilon(1e-14));

  Matrix rank1 = Matrix::Ones(2, 2);
  for (double p : {1.0, 2.0, 3.5, 8.0})
    CHECK(schatten_norm(rank1, p) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(schatten_norm(d, 0.5), std::invalid_argument);
}

TEST_CASE("even-cycle norms equal Schatten norms") {
  Rng rng(23);
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 3; ++rep) {
      Matrix w = random_matrix(4, 4, rng);
      GapReport gap = cycle_schatten_gap(n, w);
      CHECK(std::abs(gap.gap) <= 1e-9 * std::max(1.0, gap.rhs));
      CHECK(gap.lhs == doctest::Approx(graph_norm(make_even_cycle(n), w)).epsilon(1e-12));
      CHECK(gap.rhs == doctest::Approx(schatten_norm(w, 2.0 * n)).epsilon(1e-12));
    }
  }
  // Non-square inputs go through the same identity.
  Matrix w = random_matrix(3, 5, rng);
  GapReport gap = cycle_schatten_gap(2, w);
  CHECK(std::abs(gap.gap) <= 1e-9 * std::max(1.0, gap.rhs));
}

TEST_CASE("trace holder inequality for products") {
  Matrix id = Matrix::Identity(2, 2);
  GapReport eq = trace_holder_gap(id, id, 2, 2);
  CHECK(eq.lhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eq.rhs == doctest::Approx(2.0).epsilon(1e-12));

  Rng rng(29);
  for (int rep = 0; rep < 5; ++rep) {
    Matrix v = random_matrix(3, 4, rng);
    Matrix w = random_matrix(4, 3, rng);
    for (auto [p, q] : {std::pair{2.0, 2.0}, {3.0, 1.5}, {4.0, 2.0}}) {
      GapReport gap = trace_holder_gap(v, w, p, q);
      CHECK(gap.gap <= 1e-9 * std::max(1.0, gap.rhs));
    }
  }

  Matrix v = random_matrix(3, 4, rng);
  CHECK_THROWS_AS(trace_holder_gap(v, v, 2, 2), std::invalid_argument);        // inner mismatch
  Matrix w = random_matrix(4, 3, rng);
  CHECK_THROWS_AS(trace_holder_gap(v, w, 1.5, 1.5), std::invalid_argument);    // r < 1
  CHECK_THROWS_AS(trace_holder_gap(v, w, 0.5, 2), std::invalid_argument);      // p < 1
}
