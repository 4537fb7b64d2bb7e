#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <vector>

namespace grcf {

/// Chebyshev-Lobatto collocation grid on [0,1].
///
/// Holds the d+1 increasing nodes (endpoints included), barycentric
/// weights, Clenshaw-Curtis integration weights (summing to 1) and the
/// spectral differentiation matrix.
class CollocationGrid {
 public:
  explicit CollocationGrid(int degree);

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& bary_weights() const { return bary_w_; }
  const Eigen::VectorXd& int_weights() const { return int_w_; }
  const Eigen::MatrixXd& diff_matrix() const { return diff_; }

  /// Values of all cardinal interpolants l_j at y; out has size() entries.
  void cardinals_at(double y, Eigen::VectorXd& out) const;

  static std::shared_ptr<const CollocationGrid> shared(int degree);

 private:
  int degree_;
  std::vector<double> nodes_;
  std::vector<double> bary_w_;
  Eigen::VectorXd int_w_;
  Eigen::MatrixXd diff_;
};

/// Polynomial on [0,1] represented by values at collocation nodes,
/// evaluated by barycentric interpolation.
class ChebFunction {
 public:
  ChebFunction(std::shared_ptr<const CollocationGrid> grid, Eigen::VectorXd values);

  double operator()(double x) const;
  const Eigen::VectorXd& values() const { return values_; }
  const CollocationGrid& grid() const { return *grid_; }
  std::shared_ptr<const CollocationGrid> grid_ptr() const { return grid_; }

  /// Discrete integral over [0,1] (Clenshaw-Curtis weights).
  double integral() const;

  /// Exact derivative of the interpolating polynomial.
  ChebFunction derivative() const;

  /// Sample an arbitrary function at the grid nodes.
  static ChebFunction sample(std::shared_ptr<const CollocationGrid> grid,
                             const std::function<double(double)>& f);

 private:
  std::shared_ptr<const CollocationGrid> grid_;
  Eigen::VectorXd values_;
};

}  // namespace grcf
