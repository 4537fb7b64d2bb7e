#pragma once

#include <functional>
#include <vector>

#include "grcf/function_rep.hpp"
#include "grcf/quadrature.hpp"
#include "grcf/transfer_core.hpp"

namespace grcf {

/// Callable on (0, inf); callers guarantee square-integrability against
/// dmu(t) = t/(e^t - 1) dt.
using HalfLineFunction = std::function<double(double)>;

/// Bessel J_1 and modified I_1 of the first kind by the defining series
/// sum (-1)^k (x/2)^{2k+1} / (k! (k+1)!) (unsigned for I_1), accumulated
/// in extended precision until the next term falls below 1e-17 * partial.
double bessel_J1(double x);
double bessel_I1(double x);

/// kernel_J(u) = J_1(2 sqrt u)/sqrt u and kernel_I(u) = I_1(2 sqrt u)/sqrt u,
/// i.e. sum_k (-+1)^k u^k/(k!(k+1)!). Throws RangeError for u > 400 where
/// the alternating series loses all precision in binary64.
double kernel_J(double u);
double kernel_I(double u);

/// K_J g(s) = int_0^inf kernel_J(st) g(t) dmu(t). Evaluated with the given
/// Laguerre rule and cross-checked against the doubled rule; throws
/// AccuracyError if the two disagree beyond check_tol.
double apply_KJ(const HalfLineFunction& g, double s, const QuadRule& laguerre,
                double check_tol = 1e-6);

/// K_I g(s) = int_0^inf kernel_I(st) e^{-(s+t)} g(t) dt, same checking.
double apply_KI(const HalfLineFunction& g, double s, const QuadRule& laguerre,
                double check_tol = 1e-6);

/// phi_hat(x) = int_0^inf e^{-tx} phi(t) dmu(t).
double laplace_hat(const HalfLineFunction& phi, double x, const QuadRule& laguerre);

/// max over x_grid of |L_G(laplace_hat phi)(x) - laplace_hat(K_J phi)(x)|:
/// the commuting-diagram witness linking the Bessel kernel to the Gauss
/// transfer operator.
double commuting_residual(const HalfLineFunction& phi,
                          const std::vector<double>& x_grid,
                          const QuadRule& laguerre, const TailPolicy& policy = {});

/// Hilbert-Schmidt norm of the n-th Gauss weighted-composition operator,
/// evaluated by quadrature after t = n tan(theta); equals 1/(2n).
double hs_norm(int n);

/// Closed-form norm bounds: (2n^3+3n^2+n)^{-1/2}, 1/(n sqrt(n+1)), sqrt(m+1).
double trace_norm_bound(int n);
double opnorm_bound_gauss(int n);
double opnorm_bound_Bpow(int m);

/// Direct quadrature of the trace-bound integral
/// sqrt((1/pi) int dt / (|n+it|^2 |(n+1)+it|^2)); oracle for trace_norm_bound.
double trace_norm_quadrature(int n);

struct XiEtaNorms {
  double xi_sq = 0.0;          // ||xi_n||^2 by quadrature
  double eta_sq = 0.0;         // ||eta_n||^2 by quadrature
  double eta_sq_closed = 0.0;  // (2n)! / ((n!)^2 2^{2n+1})
};

/// Squared L^2(R_+) norms of the nuclear-decomposition factors
///   xi_n(s) = (s/(e^s-1)) s^n e^{-s}/(n+1)!,  eta_n(t) = t^n e^{-t}/n!.
/// Throws RangeError for n > 150.
XiEtaNorms xi_eta_norms(int n);

}  // namespace grcf
