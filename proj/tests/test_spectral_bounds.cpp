#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grcf/errors.hpp"
#include "grcf/spectral_bounds.hpp"

using namespace grcf;

TEST_CASE("zeta closed forms and monotone limit") {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(zeta(2.0) == doctest::Approx(pi2 / 6.0).epsilon(1e-12));
  CHECK(zeta(4.0) == doctest::Approx(pi2 * pi2 / 90.0).epsilon(1e-12));
  CHECK(zeta(20.0) - 1.0 < 1e-6);
  CHECK(zeta(20.0) > 1.0);
  CHECK_THROWS_AS(zeta(1.0), std::domain_error);
  CHECK_THROWS_AS(zeta(0.5), std::domain_error);

  // partial-sum oracle at s = 6
  double partial = 0.0;
  for (int n = 4000; n >= 1; --n) partial += std::pow(n, -6.0);
  CHECK(zeta(6.0) == doctest::Approx(partial).epsilon(1e-12));
}

TEST_CASE("essential spectral radius bound") {
  const BoundReport r = ess_radius_bound(0.5, 1);
  CHECK(r.bound == doctest::Approx(zeta(4.0) - 0.5).epsilon(1e-14));
  CHECK(r.bound == doctest::Approx(0.582323).epsilon(1e-6));
  CHECK(r.quasi_compact);

  CHECK_THROWS_AS(ess_radius_bound(0.5, 0), std::domain_error);
  CHECK_THROWS_AS(ess_radius_bound(0.0, 1), std::domain_error);

  const BoundReport r2 = ess_radius_bound(0.01, 2);
  CHECK(r2.bound == doctest::Approx(1.00734).epsilon(1e-5));
  CHECK_FALSE(r2.quasi_compact);

  // symmetry under p <-> 1-p
  for (double p : {0.1, 0.25, 0.4}) {
    CHECK(ess_radius_bound(p, 2).bound ==
          doctest::Approx(ess_radius_bound(1.0 - p, 2).bound).epsilon(1e-15));
  }
}

TEST_CASE("minimal quasi-compact k") {
  CHECK(min_quasicompact_k(0.5) == 1);
  CHECK(min_quasicompact_k(0.01) == 3);
  int prev = 64;
  for (double q : {0.001, 0.005, 0.02, 0.1, 0.3, 0.5}) {
    const int k = min_quasicompact_k(q);
    CHECK(k <= prev);
    prev = k;
  }
}

TEST_CASE("V_p values and zeta identity") {
  CHECK(V_p(4, 1, 0.5) == doctest::Approx(0.53125).epsilon(1e-15));
  for (double p : {0.5, 0.2, 1.0}) {
    for (int t : {4, 6}) {
      double sum = 0.0;
      for (int n = 100000; n >= 1; --n) sum += V_p(t, n, p);
      const double target = zeta(t) - std::min(p, 1.0 - p);
      CHECK(sum == doctest::Approx(target).epsilon(1e-9));
    }
  }
}

TEST_CASE("empirical Q sums against the zeta chain bound") {
  // Chain bound (sum_n V_p)^{m-1} zeta(2k+2): the min(p,1-p) subtraction
  // only enters through the m-1 conditional factors, so m = 1 meets plain
  // zeta with equality up to truncation.
  {
    const QResult q = empirical_Q(0.5, 1, 1, 10000);
    CHECK(q.value <= zeta(4.0) + q.dropped_mass_bound + 1e-12);
    CHECK(q.value >= zeta(4.0) - q.dropped_mass_bound - 1e-12);
  }
  {
    const QResult q = empirical_Q(0.5, 2, 2, 200);
    CHECK(q.value <= (zeta(6.0) - 0.5) * zeta(6.0) + q.dropped_mass_bound + 1e-12);
  }
  // Q^{1/m} trend over m = 1, 2, 3.
  double prev = 1e300;
  for (int m : {1, 2, 3}) {
    const QResult q = empirical_Q(0.5, 2, m, 200);
    const double root = std::pow(q.value, 1.0 / m);
    CHECK(root <= prev * (1.0 + 1e-9));
    prev = root;
  }
  CHECK_THROWS_AS(empirical_Q(0.5, 2, 4, 100000), SizeError);
}

TEST_CASE("stirling numbers: values, identities, and the binomial bound") {
  CHECK(stirling2(4, 2) == 7);
  for (int m = 1; m <= 20; ++m) {
    CHECK(stirling2(m, m) == 1);
    CHECK(stirling2(m, 0) == 0);
    for (int j = 0; j <= m; ++j) CHECK(stirling2(m, j) == stirling2_recurrence(m, j));
  }
  CHECK_THROWS_AS(stirling2(3, 4), std::domain_error);

  // S(m,j) <= (1/2) C(m,j) j^{m-j} for 1 <= j <= m-1 (equality at j = m-1).
  for (int m = 2; m <= 12; ++m) {
    BigInt binom = m;  // C(m,1)
    for (int j = 1; j <= m - 1; ++j) {
      const BigInt bound2 = binom * boost::multiprecision::pow(BigInt(j), m - j);
      CHECK(2 * stirling2(m, j) <= bound2);
      binom = binom * (m - j) / (j + 1);
    }
  }
}
