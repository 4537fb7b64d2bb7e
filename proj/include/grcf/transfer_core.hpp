#pragma once

#include <cstdint>

#include "grcf/function_rep.hpp"

namespace grcf {

/// Truncation policy for the infinite branch series.
///
/// The series is cut at index N and the remainder sum_{n>N} is replaced
/// by an Euler-Maclaurin correction in the summation index: the exact
/// integral int_{N+1}^inf (a closed interval integral of f near the
/// relevant endpoint) plus endpoint terms with Bernoulli weights B_2, B_4.
/// order 0: no correction; 1: integral + half endpoint term; 2: adds the
/// B_2 and B_4 terms. Order 2 with N = 64 reaches ~1e-12 for smooth f.
struct TailPolicy {
  int N = 64;
  int order = 2;
  double tol = 1e-10;
};

/// Pointwise application of the p-weighted Gauss-Renyi transfer operator
///   (L_p f)(x) = sum_{n>=1} [p f(1/(n+x)) + (1-p) f(1-1/(n+x))]/(n+x)^2.
/// Throws TruncationError if the a-posteriori tail estimate exceeds policy.tol.
double apply_Lp(double p, const FunctionRep& f, double x, const TailPolicy& policy = {});

/// Gauss-map transfer operator (p = 1).
double apply_LG(const FunctionRep& f, double x, const TailPolicy& policy = {});

/// Renyi-map transfer operator (p = 0).
double apply_LR(const FunctionRep& f, double x, const TailPolicy& policy = {});

struct IteratedResult {
  double value = 0.0;
  /// Certified bound on the total weight of the dropped branch words.
  double neglected_mass_bound = 0.0;
};

/// (L_p^m f)(x) by explicit enumeration of branch words of length m with
/// every digit <= N_trunc, composed through the Moebius matrix algebra.
IteratedResult apply_iterated(double p, const FunctionRep& f, double x, int m,
                              int N_trunc);

/// |int L_p f - int f| with Clenshaw-Curtis quadrature on quad_nodes points.
double markov_residual(double p, const FunctionRep& f, int quad_nodes = 129,
                       const TailPolicy& policy = {});

/// |mu(A) - p mu(T_0^{-1}A) - (1-p) mu(T_1^{-1}A)| for A = [a,b], with the
/// preimage unions truncated at a branch index with digamma-form tail
/// corrections and per-cell adaptive quadrature.
double invariance_residual(const FunctionRep& h, double p, double a, double b);

}  // namespace grcf
