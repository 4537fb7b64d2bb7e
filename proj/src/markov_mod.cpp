#include "grcf/markov_mod.hpp"

#include <cmath>
#include <stdexcept>

#include "grcf/errors.hpp"

namespace grcf {

double apply_B(SplitKind split, double p, const FunctionRep& f, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("apply_B: x in [0,1]");
  const double w = 1.0 / ((1.0 + x) * (1.0 + x));
  double out = (1.0 - p) * w * f(1.0 - 1.0 / (1.0 + x));
  if (split == SplitKind::Banach) out += p * w * f(1.0 / (1.0 + x));
  return out;
}

double apply_A(SplitKind split, double p, const FunctionRep& f, double x,
               const TailPolicy& policy) {
  return apply_Lp(p, f, x, policy) - apply_B(split, p, f, x);
}

double B_power(SplitKind split, double p, int m, const FunctionRep& f, double x) {
  if (m < 1) throw std::invalid_argument("B_power: m >= 1 required");
  if (split == SplitKind::Hardy) {
    const double den = 1.0 + m * x;
    return std::pow(1.0 - p, m) / (den * den) * f(x / den);
  }
  return B_power_iterated(split, p, m, f, x);
}

double B_power_iterated(SplitKind split, double p, int m, const FunctionRep& f,
                        double x) {
  if (m < 1) throw std::invalid_argument("B_power_iterated: m >= 1 required");
  if (m == 1) return apply_B(split, p, f, x);
  FunctionRep inner([=, &f](double y) { return B_power_iterated(split, p, m - 1, f, y); });
  return apply_B(split, p, inner, x);
}

double B_power_row_sum(SplitKind split, double p, int m) {
  const FunctionRep one = FunctionRep::constant(1.0);
  double sup = 0.0;
  for (int i = 0; i <= 100; ++i)
    sup = std::max(sup, B_power(split, p, m, one, i / 100.0));
  return sup;
}

double B2_bound(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("B2_bound: p in (0,1]");
  const double bound = 1.0 - 0.75 * p;
  const double four_term =
      p * p / 4.0 + p * (1.0 - p) / 4.0 + p * (1.0 - p) + (1.0 - p) * (1.0 - p);
  if (std::abs(four_term - bound) > 1e-14)
    throw ConsistencyError("B2_bound: coefficient identity violated");
  return bound;
}

OperatorMatrix build_B_matrix(SplitKind split, double p,
                              std::shared_ptr<const CollocationGrid> grid) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("build_B_matrix: p in [0,1]");
  const int n = grid->size();
  OperatorMatrix op;
  op.m.setZero(n, n);
  op.tag = OperatorMatrix::Tag::B;
  op.p = p;
  op.grid = grid;
  Eigen::VectorXd card(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid->nodes()[i];
    const double w = 1.0 / ((1.0 + x) * (1.0 + x));
    grid->cardinals_at(1.0 - 1.0 / (1.0 + x), card);
    op.m.row(i) += ((1.0 - p) * w) * card.transpose();
    if (split == SplitKind::Banach) {
      grid->cardinals_at(1.0 / (1.0 + x), card);
      op.m.row(i) += (p * w) * card.transpose();
    }
  }
  return op;
}

OperatorMatrix resolvent_J(SplitKind split, double p,
                           std::shared_ptr<const CollocationGrid> grid) {
  if (split == SplitKind::Hardy && p < 0.01)
    throw ConditioningError(
        "resolvent_J: Hardy split refused for p < 0.01 (resolvent of the "
        "indifferent branch becomes ill-conditioned)",
        1.0 / std::max(p, 1e-300));
  const OperatorMatrix B = build_B_matrix(split, p, grid);
  const int n = grid->size();
  const Eigen::MatrixXd ImB = Eigen::MatrixXd::Identity(n, n) - B.m;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(ImB);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-13))
    throw ConditioningError("resolvent_J: I - B numerically singular", 1.0 / rcond);
  OperatorMatrix J;
  J.m = lu.solve(Eigen::MatrixXd::Identity(n, n));
  J.tag = OperatorMatrix::Tag::J;
  J.p = p;
  J.grid = grid;
  return J;
}

OperatorMatrix modified_operator(SplitKind split, double p,
                                 std::shared_ptr<const CollocationGrid> grid,
                                 const TailPolicy& policy) {
  const OperatorMatrix J = resolvent_J(split, p, grid);
  const OperatorMatrix Lp = build_matrix(p, grid, policy);
  const OperatorMatrix B = build_B_matrix(split, p, grid);
  OperatorMatrix Lhat;
  Lhat.m = (Lp.m - B.m) * J.m;
  Lhat.tag = OperatorMatrix::Tag::Lhat;
  Lhat.p = p;
  Lhat.policy = Lp.policy;
  Lhat.grid = grid;
  Lhat.tail_estimate = Lp.tail_estimate;
  return Lhat;
}

ChebFunction lift_density(const OperatorMatrix& J, const ChebFunction& hhat) {
  if (J.tag != OperatorMatrix::Tag::J)
    throw std::invalid_argument("lift_density: matrix must be tagged J");
  Eigen::VectorXd lifted = J.m * hhat.values();
  const double mass = J.grid->int_weights().dot(lifted);
  lifted /= mass;
  for (int i = 0; i < lifted.size(); ++i) {
    if (lifted(i) < -1e-9)
      throw ConsistencyError("lift_density: lifted density negative beyond tolerance");
  }
  return ChebFunction(J.grid, std::move(lifted));
}

SplitReport run_split_report(SplitKind split, double p, int degree,
                             const TailPolicy& policy) {
  SplitReport rep;
  rep.split = split;
  rep.p = p;
  rep.degree = degree;
  rep.b2_identity_residual = std::abs(
      (p * p / 4.0 + p * (1.0 - p) / 4.0 + p * (1.0 - p) + (1.0 - p) * (1.0 - p)) -
      (1.0 - 0.75 * p));

  auto grid = CollocationGrid::shared(degree);
  TailPolicy pol = policy;
  pol.N = std::max(pol.N, 2 * degree);
  pol.tol = std::max(pol.tol, 1e-8);

  const OperatorMatrix B = build_B_matrix(split, p, grid);
  const OperatorMatrix J = resolvent_J(split, p, grid);
  const int n = grid->size();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  rep.resolvent_residual = ((J.m * (I - B.m)) - I).cwiseAbs().maxCoeff();

  // Neumann partial sums S_M = sum_{m<=M} B^m; M from the split's
  // contraction bound so the remainder clears 1e-12.
  int M = 2;
  if (split == SplitKind::Banach) {
    const double r = std::sqrt(1.0 - 0.75 * p);
    M = static_cast<int>(std::ceil(std::log(1e-12) / std::log(r))) + 2;
  } else {
    while (std::pow(1.0 - p, M) * std::sqrt(M + 1.0) > 1e-12 && M < 4000) ++M;
  }
  Eigen::MatrixXd S = I, term = I;
  double prev_err = 0.0;
  rep.neumann_decay_ratio = 0.0;
  for (int m = 1; m <= M; ++m) {
    term = B.m * term;
    S += term;
    const double err = (J.m - S).cwiseAbs().maxCoeff();
    if (m > 1 && prev_err > 1e-11 && err > 1e-13)
      rep.neumann_decay_ratio = std::max(rep.neumann_decay_ratio, err / prev_err);
    prev_err = err;
  }
  rep.neumann_M = M;
  rep.neumann_max_diff = (J.m - S).cwiseAbs().maxCoeff();

  const OperatorMatrix Lp = build_matrix(p, grid, pol);
  OperatorMatrix Lhat;
  Lhat.m = (Lp.m - B.m) * J.m;
  Lhat.tag = OperatorMatrix::Tag::Lhat;
  Lhat.p = p;
  Lhat.policy = pol;
  Lhat.grid = grid;

  const Eigen::VectorXd& w = grid->int_weights();
  rep.lhat_markov_residual =
      ((Lhat.m.transpose() * w) - w).lpNorm<Eigen::Infinity>();

  const DensityResult hhat = leading_pair(Lhat);
  rep.lhat_lambda1 = hhat.lambda1;
  const ChebFunction lifted = lift_density(J, hhat.h);

  const DensityResult direct = leading_pair(Lp);
  rep.lift_discrepancy =
      (lifted.values() - direct.h.values()).lpNorm<Eigen::Infinity>();

  // Fixed-point residual of the lifted density under the full operator.
  const Eigen::VectorXd img = Lp.m * lifted.values();
  rep.lift_fixed_point_residual = (img - lifted.values()).lpNorm<Eigen::Infinity>();
  return rep;
}

}  // namespace grcf
