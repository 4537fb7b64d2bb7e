#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grcf/errors.hpp"
#include "grcf/quadrature.hpp"
#include "grcf/rng.hpp"
#include "grcf/special_functions.hpp"
#include "grcf/transfer_core.hpp"

using namespace grcf;

namespace {

const FunctionRep kOne = FunctionRep::constant(1.0);

FunctionRep gauss_density() {
  return FunctionRep(
      [](double x) { return 1.0 / ((1.0 + x) * std::numbers::ln2); },
      [](double x) { return -1.0 / ((1.0 + x) * (1.0 + x) * std::numbers::ln2); });
}

FunctionRep reciprocal() {
  return FunctionRep([](double y) { return 1.0 / y; },
                     [](double y) { return -1.0 / (y * y); });
}

}  // namespace

TEST_CASE("L_p of the constant function is the trigamma sum") {
  for (double p : {0.0, 0.3, 1.0}) {
    CHECK(apply_Lp(p, kOne, 0.0) == doctest::Approx(trigamma(1.0)).epsilon(1e-12));
    for (double x : {0.2, 0.9})
      CHECK(apply_Lp(p, kOne, x) == doctest::Approx(trigamma(1.0 + x)).epsilon(1e-12));
  }
}

TEST_CASE("Renyi telescoping fixed point 1/x") {
  const FunctionRep f = reciprocal();
  CHECK(apply_LR(f, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(apply_LR(f, 0.25) == doctest::Approx(4.0).epsilon(1e-12));
  for (int i = 0; i <= 50; ++i) {
    const double x = 0.05 + 0.95 * i / 50.0;
    CHECK(std::abs(apply_LR(f, x) - 1.0 / x) <= 1e-9);
  }
}

TEST_CASE("Gauss fixed point") {
  const FunctionRep h0 = gauss_density();
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    CHECK(std::abs(apply_LG(h0, x) - h0(x)) <= 1e-10);
  }
}

TEST_CASE("mixture identity and linearity") {
  const CounterRng rng(5);
  const FunctionRep f([](double y) { return std::cos(3.0 * y) + y * y; });
  const FunctionRep g([](double y) { return 1.0 / (2.0 - y); });
  for (int trial = 0; trial < 100; ++trial) {
    const double p = rng.uniform(2 * trial);
    const double x = rng.uniform(2 * trial + 1);
    const double mix = apply_Lp(p, f, x);
    const double split = p * apply_LG(f, x) + (1.0 - p) * apply_LR(f, x);
    CHECK(mix == doctest::Approx(split).epsilon(1e-12));
  }
  // alpha f + beta g
  const double a = 1.7, b = -0.4;
  FunctionRep combo([&](double y) { return a * f(y) + b * g(y); });
  for (double x : {0.0, 0.5, 1.0}) {
    CHECK(std::abs(apply_Lp(0.3, combo, x) -
                   (a * apply_Lp(0.3, f, x) + b * apply_Lp(0.3, g, x))) <= 1e-12);
  }
}

TEST_CASE("positivity") {
  const FunctionRep f([](double y) { return y * (1.0 - y) + 0.01; });
  for (double p : {0.2, 0.8})
    for (double x : {0.0, 0.4, 1.0}) CHECK(apply_Lp(p, f, x) >= -1e-10);
}

TEST_CASE("truncation error report") {
  TailPolicy tight{.N = 2, .order = 0, .tol = 1e-12};
  CHECK_THROWS_AS(apply_Lp(0.5, kOne, 0.0, tight), TruncationError);
}

TEST_CASE("iterated operator: m = 1 equals the direct sum") {
  const FunctionRep f([](double y) { return 1.0 / (1.0 + y); });
  for (double p : {0.5, 0.9}) {
    const IteratedResult r = apply_iterated(p, f, 0.3, 1, 4000);
    const double direct = apply_Lp(p, f, 0.3);
    CHECK(std::abs(direct - r.value) <= r.neglected_mass_bound + 1e-10);
    CHECK(r.value <= direct + 1e-10);  // dropped words carry positive weight
  }
}

TEST_CASE("iterated operator: m = 2 against operator composition") {
  const double p = 0.5;
  FunctionRep once([&](double y) { return apply_Lp(p, kOne, y); });
  const double composed = apply_Lp(p, once, 0.0);
  const IteratedResult r = apply_iterated(p, kOne, 0.0, 2, 300);
  CHECK(r.value <= composed + 1e-8);
  CHECK(std::abs(composed - r.value) <= r.neglected_mass_bound + 1e-8);
}

TEST_CASE("iterated operator: neglected mass bound obeys the union bound") {
  const double z2 = trigamma(1.0);
  for (int m : {1, 2, 3}) {
    const IteratedResult r = apply_iterated(0.5, kOne, 0.0, m, 200);
    const double tail = trigamma(201.0);
    CHECK(r.neglected_mass_bound <= m * tail * std::pow(z2, m - 1) * (1.0 + 1e-12));
    CHECK(r.neglected_mass_bound > 0.0);
  }
}

TEST_CASE("markov residual on the polynomial battery") {
  CHECK(markov_residual(0.5, kOne) <= 1e-10);
  const FunctionRep sq([](double y) { return y * y; }, [](double y) { return 2.0 * y; });
  CHECK(markov_residual(0.5, sq) <= 1e-8);

  const CounterRng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    double coef[9];
    for (int k = 0; k <= 8; ++k) coef[k] = rng.uniform(9 * trial + k);
    FunctionRep poly([coef](double y) {
      double v = 0.0;
      for (int k = 8; k >= 0; --k) v = v * y + coef[k];
      return v;
    });
    for (double p : {0.25, 0.5, 0.75}) CHECK(markov_residual(p, poly) <= 1e-8);
  }
}

TEST_CASE("invariance condition for the Gauss measure") {
  const FunctionRep h0 = gauss_density();
  // mu_0([0,1/2]) = log2(3/2); closed-form antiderivative log2(1+x).
  const double mu = integrate_adaptive([&](double x) { return h0(x); }, 0.0, 0.5, 1e-12);
  CHECK(mu == doctest::Approx(std::log(1.5) / std::numbers::ln2).epsilon(1e-10));
  CHECK(invariance_residual(h0, 1.0, 0.0, 0.5) <= 1e-8);
  CHECK(invariance_residual(h0, 1.0, 0.1, 0.9) <= 1e-8);
}

TEST_CASE("invariance on the full interval is exact for any density") {
  const FunctionRep h([](double x) { return 6.0 * x * (1.0 - x); },
                      [](double x) { return 6.0 - 12.0 * x; });
  for (double p : {0.2, 0.6}) CHECK(invariance_residual(h, p, 0.0, 1.0) <= 1e-8);
  CHECK_THROWS_AS(invariance_residual(h, 0.5, 0.7, 0.2), std::invalid_argument);
}
