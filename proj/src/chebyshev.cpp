#include "grcf/chebyshev.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "grcf/quadrature.hpp"

namespace grcf {

CollocationGrid::CollocationGrid(int degree) : degree_(degree) {
  if (degree < 2) throw std::invalid_argument("CollocationGrid: degree >= 2 required");
  const int n = degree + 1;
  nodes_.resize(n);
  bary_w_.resize(n);
  for (int i = 0; i <= degree; ++i) {
    nodes_[i] = 0.5 * (1.0 - std::cos(i * std::numbers::pi / degree));
    bary_w_[i] = (i % 2 == 0) ? 1.0 : -1.0;
  }
  nodes_.front() = 0.0;
  nodes_.back() = 1.0;
  bary_w_.front() *= 0.5;
  bary_w_.back() *= 0.5;

  const QuadRule cc = clenshaw_curtis(degree);
  int_w_ = Eigen::Map<const Eigen::VectorXd>(cc.weights.data(), n);

  diff_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      diff_(i, j) = (bary_w_[j] / bary_w_[i]) / (nodes_[i] - nodes_[j]);
      row_sum += diff_(i, j);
    }
    diff_(i, i) = -row_sum;  // negative sum trick
  }
}

void CollocationGrid::cardinals_at(double y, Eigen::VectorXd& out) const {
  const int n = size();
  out.resize(n);
  for (int j = 0; j < n; ++j) {
    if (y == nodes_[j]) {
      out.setZero();
      out(j) = 1.0;
      return;
    }
  }
  double denom = 0.0;
  for (int j = 0; j < n; ++j) {
    out(j) = bary_w_[j] / (y - nodes_[j]);
    denom += out(j);
  }
  out /= denom;
}

std::shared_ptr<const CollocationGrid> CollocationGrid::shared(int degree) {
  return std::make_shared<const CollocationGrid>(degree);
}

ChebFunction::ChebFunction(std::shared_ptr<const CollocationGrid> grid,
                           Eigen::VectorXd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->size())
    throw std::invalid_argument("ChebFunction: value/grid size mismatch");
}

double ChebFunction::operator()(double x) const {
  const auto& xs = grid_->nodes();
  const auto& w = grid_->bary_weights();
  const int n = grid_->size();
  double num = 0.0, den = 0.0;
  for (int j = 0; j < n; ++j) {
    if (x == xs[j]) return values_(j);
    const double c = w[j] / (x - xs[j]);
    num += c * values_(j);
    den += c;
  }
  return num / den;
}

double ChebFunction::integral() const { return grid_->int_weights().dot(values_); }

ChebFunction ChebFunction::derivative() const {
  return ChebFunction(grid_, grid_->diff_matrix() * values_);
}

ChebFunction ChebFunction::sample(std::shared_ptr<const CollocationGrid> grid,
                                  const std::function<double(double)>& f) {
  Eigen::VectorXd v(grid->size());
  for (int i = 0; i < grid->size(); ++i) v(i) = f(grid->nodes()[i]);
  return ChebFunction(std::move(grid), std::move(v));
}

}  // namespace grcf
