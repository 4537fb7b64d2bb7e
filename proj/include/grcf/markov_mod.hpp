#pragma once

#include "grcf/discretization.hpp"

namespace grcf {

/// Which sub-Markov split of L_p = A_p + B_p is used.
/// Banach: B_p holds both n = 1 branches (Gauss and Renyi).
/// Hardy:  B_p holds only the Renyi n = 1 branch.
enum class SplitKind { Banach, Hardy };

/// Pointwise B_p f(x) for the chosen split.
double apply_B(SplitKind split, double p, const FunctionRep& f, double x);

/// Pointwise A_p f(x) = L_p f(x) - B_p f(x).
double apply_A(SplitKind split, double p, const FunctionRep& f, double x,
               const TailPolicy& policy = {});

/// B_p^m f(x). Hardy uses the closed form
/// (1-p)^m (1+mx)^{-2} f(x/(1+mx)); Banach iterates apply_B.
double B_power(SplitKind split, double p, int m, const FunctionRep& f, double x);

/// B_p^m by plain recursion for either split (oracle for the closed form).
double B_power_iterated(SplitKind split, double p, int m, const FunctionRep& f,
                        double x);

/// sup over a 101-point grid of (B_p^m 1)(x); for the positive operator
/// B_p^m this is its C^0 operator norm.
double B_power_row_sum(SplitKind split, double p, int m);

/// Banach-split contraction bound ||B_p^2|| <= 1 - 3p/4, cross-checked
/// against the four-term coefficient sum at x = 0.
double B2_bound(double p);

/// Collocation matrix of B_p (finite branch sum, no truncation).
OperatorMatrix build_B_matrix(SplitKind split, double p,
                              std::shared_ptr<const CollocationGrid> grid);

/// J = (1 - B)^{-1} by direct LU solve of (I - B) J = I.
/// Throws ConditioningError when I - B is numerically singular
/// (Hardy split with p below 0.01 is refused up front).
OperatorMatrix resolvent_J(SplitKind split, double p,
                           std::shared_ptr<const CollocationGrid> grid);

/// Modified operator Lhat = A J on the grid.
OperatorMatrix modified_operator(SplitKind split, double p,
                                 std::shared_ptr<const CollocationGrid> grid,
                                 const TailPolicy& policy = {});

/// h = J hhat, renormalized to unit integral. Throws ConsistencyError if
/// the lifted values dip below -1e-9 at a node.
ChebFunction lift_density(const OperatorMatrix& J, const ChebFunction& hhat);

/// Diagnostics bundle for one (split, p) run; serialized by the CLI.
struct SplitReport {
  SplitKind split = SplitKind::Banach;
  double p = 0.0;
  int degree = 0;
  double b2_identity_residual = 0.0;  // four-term sum vs 1 - 3p/4
  double resolvent_residual = 0.0;    // ||J(I-B) - I||_max
  int neumann_M = 0;
  double neumann_max_diff = 0.0;      // ||J - sum_{m<=M} B^m||_max
  double neumann_decay_ratio = 0.0;   // measured geometric ratio
  double lhat_markov_residual = 0.0;  // ||w^T Lhat - w^T||_inf
  double lhat_lambda1 = 0.0;
  double lift_discrepancy = 0.0;      // ||lift - direct h_p||_inf at nodes
  double lift_fixed_point_residual = 0.0;  // ||Lp h - h||_inf at nodes
};

SplitReport run_split_report(SplitKind split, double p, int degree,
                             const TailPolicy& policy = {});

}  // namespace grcf
