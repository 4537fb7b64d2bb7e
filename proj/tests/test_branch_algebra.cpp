#include <doctest.h>

#include <cmath>

#include "grcf/branch_algebra.hpp"
#include "grcf/rng.hpp"
#include "grcf/special_functions.hpp"

using namespace grcf;

namespace {

BranchWord random_word(const CounterRng& rng, std::uint64_t tag, int len, int max_n) {
  BranchWord w;
  for (int i = 0; i < len; ++i) {
    const std::uint64_t r = rng.draw(tag * 64 + i);
    w.push_back({1 + r % max_n, (r >> 32 & 1) ? MapChoice::Renyi : MapChoice::Gauss});
  }
  return w;
}

}  // namespace

TEST_CASE("branch matrices") {
  const MoebiusMatrix m10 = branch_matrix({1, MapChoice::Gauss});
  CHECK(m10.A == 0);
  CHECK(m10.B == 1);
  CHECK(m10.C == 1);
  CHECK(m10.D == 1);

  const MoebiusMatrix m31 = branch_matrix({3, MapChoice::Renyi});
  CHECK(m31.A == 1);
  CHECK(m31.B == 2);
  CHECK(m31.C == 1);
  CHECK(m31.D == 3);

  for (std::uint64_t n = 1; n <= 100; ++n) {
    CHECK(abs(branch_matrix({n, MapChoice::Gauss}).det()) == 1);
    CHECK(abs(branch_matrix({n, MapChoice::Renyi}).det()) == 1);
  }
  CHECK_THROWS_AS(branch_matrix({0, MapChoice::Gauss}), std::invalid_argument);
}

TEST_CASE("compose against integer multiply and functional composition") {
  const BranchWord w{{1, MapChoice::Gauss}, {2, MapChoice::Renyi}};
  const MoebiusMatrix m = compose(w);
  CHECK(m.A == 1);
  CHECK(m.B == 2);
  CHECK(m.C == 2);
  CHECK(m.D == 3);

  // b_w(0) = B/D and the step-by-step functional composition agree.
  CHECK(m.evaluate(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const double direct =
      branch_matrix({1, MapChoice::Gauss}).evaluate(branch_matrix({2, MapChoice::Renyi}).evaluate(0.0));
  CHECK(direct == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const MoebiusMatrix single = compose({{7, MapChoice::Renyi}});
  CHECK(single.D == branch_matrix({7, MapChoice::Renyi}).D);
}

TEST_CASE("compose is associative and keeps unit determinant") {
  const CounterRng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const BranchWord u = random_word(rng, 2 * trial, 3, 30);
    const BranchWord v = random_word(rng, 2 * trial + 1, 3, 30);
    BranchWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    const MoebiusMatrix lhs = compose(uv);
    const MoebiusMatrix rhs = compose(u) * compose(v);
    CHECK(lhs.A == rhs.A);
    CHECK(lhs.B == rhs.B);
    CHECK(lhs.C == rhs.C);
    CHECK(lhs.D == rhs.D);
    CHECK(abs(lhs.det()) == 1);
  }
}

TEST_CASE("sup derivative: exact value and grid domination") {
  CHECK(sup_abs_derivative(MoebiusMatrix{1, 2, 2, 3}) == doctest::Approx(1.0 / 9.0));
  CHECK(sup_abs_derivative(branch_matrix({1, MapChoice::Gauss})) == doctest::Approx(1.0));

  const CounterRng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int len = 1 + static_cast<int>(rng.draw(5000 + trial) % 6);
    const BranchWord w = random_word(rng, 100 + trial, len, 20);
    const MoebiusMatrix m = compose(w);
    const double sup = sup_abs_derivative(m);
    double grid_max = 0.0;
    for (int i = 0; i <= 1000; ++i)
      grid_max = std::max(grid_max, m.abs_derivative(i / 1000.0));
    CHECK(grid_max <= sup * (1.0 + 1e-12));
    CHECK(m.abs_derivative(0.0) == doctest::Approx(sup).epsilon(1e-13));
  }
}

TEST_CASE("branch weights and the trigamma sum") {
  CHECK(branch_weight({1, MapChoice::Gauss}, 0.5, 0.0) == doctest::Approx(0.5));
  CHECK(branch_weight({2, MapChoice::Renyi}, 0.25, 1.0) ==
        doctest::Approx(0.75 / 9.0).epsilon(1e-15));

  // sum over omega and n <= N: partial trigamma sum; tail bracketed by
  // integrals; at x = 0 the limit is pi^2/6.
  for (double x : {0.0, 0.37, 1.0}) {
    const int N = 20000;
    double sum = 0.0;
    for (int n = N; n >= 1; --n) {
      sum += branch_weight({static_cast<std::uint64_t>(n), MapChoice::Gauss}, 0.3, x);
      sum += branch_weight({static_cast<std::uint64_t>(n), MapChoice::Renyi}, 0.3, x);
    }
    const double target = trigamma(1.0 + x);
    CHECK(sum + 1.0 / (N + 1.0 + x) <= target + 1e-9);
    CHECK(sum + 1.0 / (N + x) >= target - 1e-9);
  }
}

TEST_CASE("word weight equals probability times derivative, and stepwise product") {
  CHECK(word_weight({{1, MapChoice::Gauss}}, 0.7, 0.0) == doctest::Approx(0.7));
  CHECK(word_weight({{1, MapChoice::Gauss}, {2, MapChoice::Renyi}}, 0.5, 0.0) ==
        doctest::Approx(0.25 / 9.0).epsilon(1e-13));

  const CounterRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int len = 1 + static_cast<int>(rng.draw(777 + trial) % 5);
    const BranchWord w = random_word(rng, 300 + trial, len, 12);
    const double p = rng.uniform(9000 + trial);
    const double x = rng.uniform(9100 + trial);

    // Stepwise oracle: prod_i (a_{n_i} o b_{n_{i+1}} o ... o b_{n_m})(x).
    double product = 1.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      double arg = x;
      for (std::size_t j = w.size(); j-- > i + 1;)
        arg = branch_matrix(w[j]).evaluate(arg);
      product *= branch_weight(w[i], p, arg);
    }
    CHECK(word_weight(w, p, x) == doctest::Approx(product).epsilon(1e-11));
  }
}
