#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grcf/errors.hpp"
#include "grcf/markov_mod.hpp"
#include "grcf/rng.hpp"
#include "grcf/special_functions.hpp"

using namespace grcf;

namespace {
const FunctionRep kOne = FunctionRep::constant(1.0);
}

TEST_CASE("split point values") {
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  for (double p : {0.2, 0.7}) {
    CHECK(apply_B(SplitKind::Hardy, p, kOne, 0.0) == doctest::Approx(1.0 - p));
    CHECK(apply_A(SplitKind::Hardy, p, kOne, 0.0) ==
          doctest::Approx(pi2_6 - (1.0 - p)).epsilon(1e-11));
    CHECK(apply_B(SplitKind::Banach, p, kOne, 1.0) == doctest::Approx(0.25));
  }
}

TEST_CASE("A + B recovers L_p") {
  const CounterRng rng(88);
  const FunctionRep f([](double y) { return std::exp(-y) + y; });
  for (int trial = 0; trial < 100; ++trial) {
    const double p = rng.uniform(3 * trial);
    const double x = rng.uniform(3 * trial + 1);
    const SplitKind split = (rng.draw(3 * trial + 2) & 1) ? SplitKind::Hardy
                                                          : SplitKind::Banach;
    const double total = apply_Lp(p, f, x);
    const double sum = apply_A(split, p, f, x) + apply_B(split, p, f, x);
    CHECK(sum == doctest::Approx(total).epsilon(1e-11));
  }
}

TEST_CASE("B powers: closed form, iterate, contraction") {
  // Hardy m = 2, p = 0, f = 1, x = 1: 1/(1+2)^2 = 1/9.
  CHECK(B_power(SplitKind::Hardy, 0.0, 2, kOne, 1.0) == doctest::Approx(1.0 / 9.0));

  const FunctionRep f([](double y) { return 1.0 + 0.5 * std::sin(2.0 * y); });
  for (int m = 1; m <= 10; ++m) {
    for (double x : {0.0, 0.33, 1.0}) {
      const double closed = B_power(SplitKind::Hardy, 0.35, m, f, x);
      const double iterated = B_power_iterated(SplitKind::Hardy, 0.35, m, f, x);
      CHECK(std::abs(closed - iterated) <= 1e-12);
    }
  }

  for (double p : {0.25, 0.5, 1.0}) {
    double sup = 0.0;
    for (int i = 0; i <= 100; ++i)
      sup = std::max(sup, B_power(SplitKind::Banach, p, 2, kOne, i / 100.0));
    CHECK(sup <= 1.0 - 0.75 * p + 1e-14);
  }
}

TEST_CASE("B2 bound values and identity") {
  CHECK(B2_bound(1.0) == doctest::Approx(0.25));
  CHECK(B2_bound(0.5) == doctest::Approx(0.625));
  for (int i = 1; i <= 99; ++i) {
    const double p = i / 100.0;
    const double four_term =
        p * p / 4.0 + p * (1.0 - p) / 4.0 + p * (1.0 - p) + (1.0 - p) * (1.0 - p);
    CHECK(std::abs(four_term - B2_bound(p)) <= 1e-14);
  }
}

TEST_CASE("resolvent solves (I-B)J = I with Neumann backup") {
  auto grid = CollocationGrid::shared(24);
  for (SplitKind split : {SplitKind::Banach, SplitKind::Hardy}) {
    for (double p : {0.3, 0.5, 0.9}) {
      const OperatorMatrix B = build_B_matrix(split, p, grid);
      const OperatorMatrix J = resolvent_J(split, p, grid);
      const int n = grid->size();
      const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
      CHECK((J.m * (I - B.m) - I).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(((I - B.m) * J.m - I).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
  CHECK_THROWS_AS(resolvent_J(SplitKind::Hardy, 0.005, grid), ConditioningError);
}

TEST_CASE("Hardy power norms respect the sqrt(m+1) weighted bound") {
  for (double p : {0.3, 0.6}) {
    for (int m = 1; m <= 10; ++m) {
      const double row_sum = B_power_row_sum(SplitKind::Hardy, p, m);
      CHECK(row_sum <= std::pow(1.0 - p, m) * std::sqrt(m + 1.0) + 1e-14);
    }
  }
}

TEST_CASE("split report: Markov modification end to end") {
  for (SplitKind split : {SplitKind::Banach, SplitKind::Hardy}) {
    const SplitReport rep = run_split_report(split, 0.5, 32);
    CHECK(rep.b2_identity_residual <= 1e-14);
    CHECK(rep.resolvent_residual <= 1e-10);
    CHECK(rep.neumann_max_diff <= 1e-9);
    const double ratio_bound =
        std::max(std::sqrt(1.0 - 0.75 * rep.p), (1.0 - rep.p) * std::numbers::sqrt2);
    CHECK(rep.neumann_decay_ratio <= ratio_bound + 1e-9);
    CHECK(rep.lhat_markov_residual <= 1e-8);
    CHECK(std::abs(rep.lhat_lambda1 - 1.0) <= 1e-8);
    CHECK(rep.lift_discrepancy <= 1e-7);
    CHECK(rep.lift_fixed_point_residual <= 1e-7);
  }
  const SplitReport rep9 = run_split_report(SplitKind::Hardy, 0.9, 32);
  CHECK(rep9.lift_discrepancy <= 1e-7);
}

TEST_CASE("Hardy split at p = 1 degenerates to the Gauss operator") {
  auto grid = CollocationGrid::shared(16);
  const OperatorMatrix B = build_B_matrix(SplitKind::Hardy, 1.0, grid);
  CHECK(B.m.cwiseAbs().maxCoeff() == 0.0);
  TailPolicy pol{.N = 64, .order = 2, .tol = 1e-7};
  const OperatorMatrix lhat = modified_operator(SplitKind::Hardy, 1.0, grid, pol);
  const OperatorMatrix lg = build_matrix(1.0, grid, pol);
  CHECK((lhat.m - lg.m).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("lift density rejects non-J input") {
  auto grid = CollocationGrid::shared(8);
  const OperatorMatrix B = build_B_matrix(SplitKind::Hardy, 0.5, grid);
  const ChebFunction ones(grid, Eigen::VectorXd::Ones(grid->size()));
  CHECK_THROWS_AS(lift_density(B, ones), std::invalid_argument);
}
