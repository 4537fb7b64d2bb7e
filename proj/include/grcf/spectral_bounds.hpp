#pragma once

#include "grcf/branch_algebra.hpp"

namespace grcf {

/// Essential-spectral-radius bound report on C^k([0,1]).
struct BoundReport {
  double p = 0.0;
  int k = 0;
  double zeta_value = 0.0;  // zeta(2k+2)
  double bound = 0.0;       // zeta(2k+2) - min(p, 1-p)
  bool quasi_compact = false;
};

/// Riemann zeta for real s > 1: partial sum plus Euler-Maclaurin tail,
/// |error| <= tol.
double zeta(double s, double tol = 1e-13);

/// r_ess(L_p | C^k) <= zeta(2k+2) - min(p, 1-p); quasi-compact iff < 1.
BoundReport ess_radius_bound(double p, int k);

/// Smallest k >= 1 with ess_radius_bound(p, k).bound < 1.
int min_quasicompact_k(double p);

/// V_p^{(t)}(n) = max(p,1-p)/n^t + min(p,1-p)/(n+1)^t.
double V_p(int t, int n, double p);

struct QResult {
  double value = 0.0;            // grid sup of the enumerated sum
  double dropped_mass_bound = 0.0;  // bound on mass removed by pruning/truncation
};

/// Q_m^{(k)} estimate: sup over a uniform 101-point x-grid of
/// sum_w P[omega] |b_w'(x)|^{k+1} over words of length m with digits
/// <= N_trunc, depth-first with weight pruning at 1e-16.
QResult empirical_Q(double p, int k, int m, int N_trunc);

/// Stirling number of the second kind via the alternating binomial sum;
/// cross-checked against the recurrence in tests.
BigInt stirling2(int m, int j);

/// Same number from the recurrence S(m,j) = j S(m-1,j) + S(m-1,j-1);
/// used as an independent route.
BigInt stirling2_recurrence(int m, int j);

}  // namespace grcf
