#include "grcf/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grcf/errors.hpp"
#include "grcf/special_functions.hpp"

namespace grcf {

QuadRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n from the Chebyshev initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[n - 1 - i] = w;
  }
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid - half * rule.nodes[i];  // increasing order
    rule.weights[i] *= half;
  }
  return rule;
}

QuadRule clenshaw_curtis(int n) {
  if (n < 2) throw std::invalid_argument("clenshaw_curtis: n >= 2 required");
  QuadRule rule;
  rule.nodes.resize(n + 1);
  rule.weights.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double theta = k * std::numbers::pi / n;
    rule.nodes[k] = 0.5 * (1.0 - std::cos(theta));
    double s = 0.0;
    for (int j = 1; j <= n / 2; ++j) {
      const double bj = (2 * j == n) ? 1.0 : 2.0;
      s += bj * std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
    }
    const double ck = (k == 0 || k == n) ? 1.0 : 2.0;
    rule.weights[k] = 0.5 * (ck / n) * (1.0 - s);  // [0,1]: half of [-1,1]
  }
  return rule;
}

QuadRule gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n >= 1 required");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = 2.0 * i + 1.0;
    if (i > 0) {
      J(i, i - 1) = i;
      J(i - 1, i) = i;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;  // mu_0 = int_0^inf e^{-t} dt = 1
  }
  return rule;
}

namespace {

double adaptive_panel(const std::function<double(double)>& f, double a,
                      double b, double tol, int depth, const QuadRule& lo,
                      const QuadRule& hi) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  auto eval = [&](const QuadRule& r) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
  };
  const double coarse = eval(lo);
  const double fine = eval(hi);
  if (std::abs(fine - coarse) <= tol || depth <= 0) return fine;
  return adaptive_panel(f, a, mid, 0.5 * tol, depth - 1, lo, hi) +
         adaptive_panel(f, mid, b, 0.5 * tol, depth - 1, lo, hi);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth) {
  if (!(a <= b)) throw std::invalid_argument("integrate_adaptive: a <= b required");
  if (a == b) return 0.0;
  static const QuadRule lo = gauss_legendre(12, -1.0, 1.0);
  static const QuadRule hi = gauss_legendre(24, -1.0, 1.0);
  return adaptive_panel(f, a, b, tol, max_depth, lo, hi);
}

double integrate_mu(const std::function<double(double)>& F, const QuadRule& laguerre) {
  // dmu = e^{-t} * t/(1 - e^{-t}) dt; skip nodes where the density underflows.
  double s = 0.0;
  for (std::size_t i = 0; i < laguerre.nodes.size(); ++i) {
    const double t = laguerre.nodes[i];
    if (t * std::exp(-t) < 1e-280) continue;
    const double density = t / -std::expm1(-t);
    s += laguerre.weights[i] * density * F(t);
  }
  return s;
}

double integrate_mu_series(const std::function<double(double)>& F,
                           const QuadRule& laguerre, int j_max) {
  // int F dmu = sum_{j>=1} int_0^inf t e^{-jt} F(t) dt
  //           = sum_{j>=1} j^{-2} int_0^inf e^{-y} y F(y/j) dy.
  double s = 0.0;
  for (int j = 1; j <= j_max; ++j) {
    double term = 0.0;
    for (std::size_t i = 0; i < laguerre.nodes.size(); ++i) {
      const double y = laguerre.nodes[i];
      term += laguerre.weights[i] * y * F(y / j);
    }
    s += term / (static_cast<double>(j) * j);
  }
  // Tail over j > j_max from the expansion F(t) ~ F(0) + F'(0) t near 0:
  // sum_j [F(0)/j^2 + 2 F'(0)/j^3].
  const double h = 1e-6;
  const double f0 = F(h);
  const double f1 = (F(2.0 * h) - F(h)) / h;
  s += f0 * trigamma(j_max + 1.0) - f1 * tetragamma(j_max + 1.0);
  return s;
}

}  // namespace grcf
