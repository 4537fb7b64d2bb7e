#pragma once

#include <functional>
#include <vector>

namespace grcf {

/// Nodes/weights pair for a fixed quadrature rule.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double apply(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

/// Gauss-Legendre rule with n points on [a, b]. Exact for degree 2n-1.
QuadRule gauss_legendre(int n, double a, double b);

/// Clenshaw-Curtis rule with n+1 points on [0, 1] (n >= 2 even preferred).
/// Nodes are the increasing Chebyshev-Lobatto points; weights sum to 1.
QuadRule clenshaw_curtis(int n);

/// Gauss-Laguerre rule with n points for integrals of the form
/// int_0^inf e^{-t} F(t) dt. Computed by Golub-Welsch.
QuadRule gauss_laguerre(int n);

/// Adaptive bisection quadrature of f on [a, b] with absolute tolerance tol.
/// Uses an embedded Gauss-Legendre 12/24 pair per panel.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth = 40);

/// int_0^inf F(t) dmu(t) with dmu(t) = t/(e^t - 1) dt, by Gauss-Laguerre
/// after factoring e^{-t}. Nodes with underflowing weight are skipped.
double integrate_mu(const std::function<double(double)>& F, const QuadRule& laguerre);

/// Same integral via the expansion t/(e^t-1) = t sum_{j>=1} e^{-jt}, each
/// term by a scaled Laguerre rule; independent cross-check of integrate_mu.
double integrate_mu_series(const std::function<double(double)>& F,
                           const QuadRule& laguerre, int j_max = 48);

}  // namespace grcf
