#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "grcf/chebyshev.hpp"
#include "grcf/transfer_core.hpp"

namespace grcf {

/// Dense collocation discretization of one of the operators.
struct OperatorMatrix {
  enum class Tag { Lp, A, B, J, Lhat };
  Eigen::MatrixXd m;
  Tag tag = Tag::Lp;
  double p = 0.0;
  TailPolicy policy{};
  std::shared_ptr<const CollocationGrid> grid;
  /// Max over rows of the summed tail-correction estimate (diagnostic).
  double tail_estimate = 0.0;
};

/// Invariant-density result of the leading-eigenpair solve.
struct DensityResult {
  double lambda1 = 0.0;
  ChebFunction h;
  double lambda2 = 0.0;        // subdominant magnitude, 0 until computed
  double residual_inf = 0.0;   // ||M h - lambda1 h||_inf at nodes
  int degree = 0;
  int iterations = 0;

  double operator()(double x) const { return h(x); }
};

/// Collocation matrix of L_p: entry (i,j) is L_p applied to the j-th
/// cardinal interpolant, evaluated at node i, with Euler-Maclaurin tail
/// corrections assembled row-wise.
OperatorMatrix build_matrix(double p, std::shared_ptr<const CollocationGrid> grid,
                            const TailPolicy& policy = {}, int threads = 0);

/// Leading eigenpair by power iteration normalized by the discrete
/// integral each step; lambda1 is the integral of the iterate image.
DensityResult leading_pair(const OperatorMatrix& M);

/// |lambda_2| after deflating the rank-one projector h (x) integration
/// functional; power iteration on the deflated matrix.
double spectral_gap(const OperatorMatrix& M, const DensityResult& lead);

/// Full eigenvalue list sorted by decreasing magnitude (diagnostic mode).
std::vector<std::complex<double>> full_spectrum(const OperatorMatrix& M);

/// build_matrix + leading_pair + spectral_gap for the given degree.
/// p = 0 is refused: the Renyi-only system has only a sigma-finite
/// invariant density (1/x), which is not normalizable on [0,1].
DensityResult density(double p, int degree, TailPolicy policy = {}, int threads = 0);

}  // namespace grcf
