#include "grcf/branch_algebra.hpp"

#include <stdexcept>

namespace grcf {

MoebiusMatrix MoebiusMatrix::operator*(const MoebiusMatrix& rhs) const {
  return MoebiusMatrix{A * rhs.A + B * rhs.C, A * rhs.B + B * rhs.D,
                       C * rhs.A + D * rhs.C, C * rhs.B + D * rhs.D};
}

double MoebiusMatrix::evaluate(double x) const {
  const double a = static_cast<double>(A), b = static_cast<double>(B);
  const double c = static_cast<double>(C), d = static_cast<double>(D);
  return (a * x + b) / (c * x + d);
}

double MoebiusMatrix::abs_derivative(double x) const {
  const double c = static_cast<double>(C), d = static_cast<double>(D);
  const double den = c * x + d;
  return 1.0 / (den * den);  // |det| = 1 by construction
}

MoebiusMatrix branch_matrix(const BranchIndex& idx) {
  if (idx.n < 1) throw std::invalid_argument("branch_matrix: n >= 1 required");
  const BigInt n = idx.n;
  if (idx.omega == MapChoice::Gauss) return {0, 1, 1, n};
  return {1, n - 1, 1, n};
}

MoebiusMatrix compose(const BranchWord& word) {
  if (word.empty()) throw std::invalid_argument("compose: word must be nonempty");
  MoebiusMatrix m = branch_matrix(word.front());
  for (std::size_t i = 1; i < word.size(); ++i) m = m * branch_matrix(word[i]);
  return m;
}

double sup_abs_derivative(const MoebiusMatrix& m) {
  if (m.D == 0) throw std::invalid_argument("sup_abs_derivative: D > 0 required");
  const double d = static_cast<double>(m.D);
  return 1.0 / (d * d);
}

double branch_weight(const BranchIndex& idx, double p, double x) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("branch_weight: p in [0,1]");
  const double den = x + static_cast<double>(idx.n);
  const double prob = (idx.omega == MapChoice::Gauss) ? p : 1.0 - p;
  return prob / (den * den);
}

double word_weight(const BranchWord& word, double p, double x) {
  if (word.empty()) throw std::invalid_argument("word_weight: word must be nonempty");
  double prob = 1.0;
  for (const auto& idx : word) prob *= (idx.omega == MapChoice::Gauss) ? p : 1.0 - p;
  return prob * compose(word).abs_derivative(x);
}

}  // namespace grcf
