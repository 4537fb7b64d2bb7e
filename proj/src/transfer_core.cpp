#include "grcf/transfer_core.hpp"

#include <cmath>
#include <stdexcept>

#include "grcf/branch_algebra.hpp"
#include "grcf/errors.hpp"
#include "grcf/quadrature.hpp"
#include "grcf/special_functions.hpp"

namespace grcf {

namespace {

// Euler-Maclaurin tail of sum_{n>N} f(1/(n+x))/(n+x)^2 (Gauss side,
// renyi=false) or sum_{n>N} f(1-1/(n+x))/(n+x)^2 (renyi=true).
// With u(n) = 1/(n+x) and g(n) the summand, d/dn = -u^2 d/du gives
//   g'  = -+(f' u^4 + 2 f u^3)
//   g''' = -+(f''' u^8 + 12 f'' u^7 + 36 f' u^6 + 24 f u^5)
// (upper signs Gauss, evaluations at 1-u for the Renyi side), and
//   sum_{n=N+1}^inf g(n) = int_{N+1}^inf g dn + g/2 - g'/12 + g'''/720 - ...
// where the integral is the exact endpoint integral of f.
struct TailTerms {
  double value = 0.0;
  double estimate = 0.0;  // magnitude of the last correction term used
};

TailTerms em_tail(const FunctionRep& f, double x, int N, int order, bool renyi) {
  TailTerms out;
  if (order <= 0) {
    // No correction; report the plain truncation size as the estimate.
    const double u0 = 1.0 / (N + 1.0 + x);
    const double arg = renyi ? 1.0 - u0 : u0;
    out.estimate = std::abs(f(arg)) * trigamma(N + 1.0 + x);
    return out;
  }
  const double u0 = 1.0 / (N + 1.0 + x);
  const double arg = renyi ? 1.0 - u0 : u0;
  const double f0 = f(arg);

  static const QuadRule gl = gauss_legendre(40, 0.0, 1.0);
  double integral = 0.0;
  for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
    const double u = u0 * gl.nodes[q];
    integral += u0 * gl.weights[q] * f(renyi ? 1.0 - u : u);
  }

  const double u2 = u0 * u0, u3 = u2 * u0;
  const double g0 = u2 * f0;
  out.value = integral + 0.5 * g0;
  if (order == 1) {
    out.estimate = std::abs(g0) / 2.0;
    return out;
  }

  const double sgn = renyi ? -1.0 : 1.0;  // d/du f(1-u) = -f'(1-u)
  const double f1 = sgn * f.deriv(1, arg);
  const double f2 = f.deriv(2, arg);
  const double f3 = sgn * f.deriv(3, arg);
  const double u4 = u2 * u2, u5 = u4 * u0, u6 = u4 * u2, u7 = u6 * u0, u8 = u4 * u4;

  const double g1 = -(f1 * u4 + 2.0 * f0 * u3);
  const double g3 = -(f3 * u8 + 12.0 * f2 * u7 + 36.0 * f1 * u6 + 24.0 * f0 * u5);
  out.value += -g1 / 12.0 + g3 / 720.0;
  out.estimate = std::abs(g3) / 720.0;
  return out;
}

}  // namespace

double apply_Lp(double p, const FunctionRep& f, double x, const TailPolicy& policy) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("apply_Lp: p must be in [0,1]");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("apply_Lp: x must be in [0,1]");
  if (policy.N < 2) throw std::invalid_argument("apply_Lp: policy.N >= 2 required");

  double sum = 0.0;
  for (int n = policy.N; n >= 1; --n) {  // ascending magnitude
    const double den = n + x;
    const double w = 1.0 / (den * den);
    double term = 0.0;
    if (p > 0.0) term += p * f(1.0 / den);
    if (p < 1.0) term += (1.0 - p) * f(1.0 - 1.0 / den);
    sum += w * term;
  }

  double estimate = 0.0;
  if (p > 0.0) {
    const TailTerms t = em_tail(f, x, policy.N, policy.order, false);
    sum += p * t.value;
    estimate += p * t.estimate;
  }
  if (p < 1.0) {
    const TailTerms t = em_tail(f, x, policy.N, policy.order, true);
    sum += (1.0 - p) * t.value;
    estimate += (1.0 - p) * t.estimate;
  }
  if (estimate > policy.tol)
    throw TruncationError("apply_Lp: tail estimate exceeds policy.tol", estimate);
  return sum;
}

double apply_LG(const FunctionRep& f, double x, const TailPolicy& policy) {
  return apply_Lp(1.0, f, x, policy);
}

double apply_LR(const FunctionRep& f, double x, const TailPolicy& policy) {
  return apply_Lp(0.0, f, x, policy);
}

namespace {

void iterate_words(double p, const FunctionRep& f, double x, int depth,
                   const MoebiusMatrix& prefix, double prob, int N_trunc,
                   double& acc) {
  if (depth == 0) {
    acc += prob * prefix.abs_derivative(x) * f(prefix.evaluate(x));
    return;
  }
  for (int n = 1; n <= N_trunc; ++n) {
    for (int w = 0; w < 2; ++w) {
      const BranchIndex idx{static_cast<std::uint64_t>(n),
                            w == 0 ? MapChoice::Gauss : MapChoice::Renyi};
      const double pr = prob * ((w == 0) ? p : 1.0 - p);
      if (pr == 0.0) continue;
      iterate_words(p, f, x, depth - 1, prefix * branch_matrix(idx), pr, N_trunc, acc);
    }
  }
}

}  // namespace

IteratedResult apply_iterated(double p, const FunctionRep& f, double x, int m,
                              int N_trunc) {
  if (m < 1) throw std::invalid_argument("apply_iterated: m >= 1 required");
  if (N_trunc < 1) throw std::invalid_argument("apply_iterated: N_trunc >= 1 required");
  const double words = std::pow(2.0 * N_trunc, m);
  if (words > 1e8) throw SizeError("apply_iterated: enumeration too large");

  IteratedResult res;
  const MoebiusMatrix identity{1, 0, 0, 1};
  iterate_words(p, f, x, m, identity, 1.0, N_trunc, res.value);

  // Every word weight is bounded by prod prob_i/n_i^2 (D >= prod n_i), so
  // the dropped mass is at most zeta(2)^m - (zeta(2) - tail)^m.
  const double z2 = trigamma(1.0);
  const double tail = trigamma(N_trunc + 1.0);
  res.neglected_mass_bound = std::pow(z2, m) - std::pow(z2 - tail, m);
  return res;
}

double markov_residual(double p, const FunctionRep& f, int quad_nodes,
                       const TailPolicy& policy) {
  if (quad_nodes < 5) throw std::invalid_argument("markov_residual: need >= 5 nodes");
  const QuadRule cc = clenshaw_curtis(quad_nodes - 1);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < cc.nodes.size(); ++i) {
    lhs += cc.weights[i] * apply_Lp(p, f, cc.nodes[i], policy);
    rhs += cc.weights[i] * f(cc.nodes[i]);
  }
  return std::abs(lhs - rhs);
}

double invariance_residual(const FunctionRep& h, double p, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("invariance_residual: need a < b");
  if (!(a >= 0.0 && b <= 1.0))
    throw std::domain_error("invariance_residual: [a,b] must lie in [0,1]");

  constexpr int kBranches = 400;
  constexpr double kCellTol = 1e-14;

  const double mu_A = integrate_adaptive([&](double u) { return h(u); }, a, b, 1e-12);

  // T_0^{-1}[a,b] = U_n [1/(b+n), 1/(a+n)],  T_1^{-1}[a,b] = U_n [1-1/(a+n), 1-1/(b+n)].
  double gauss = 0.0, renyi = 0.0;
  for (int n = 1; n <= kBranches; ++n) {
    const double lo = 1.0 / (b + n), hi = 1.0 / (a + n);
    gauss += integrate_adaptive([&](double u) { return h(u); }, lo, hi, kCellTol);
    renyi += integrate_adaptive([&](double u) { return h(1.0 - u); }, lo, hi, kCellTol);
  }

  // Tail over n > kBranches: second-order Taylor of h at the accumulation
  // endpoints, with the digit sums in closed polygamma form.
  const double za = kBranches + 1.0 + a, zb = kBranches + 1.0 + b;
  const double s1 = digamma(zb) - digamma(za);               // sum (hi - lo)
  const double s2 = trigamma(za) - trigamma(zb);             // sum (hi^2 - lo^2)
  const double s3 = 0.5 * (tetragamma(zb) - tetragamma(za));  // sum (hi^3 - lo^3)
  gauss += h(0.0) * s1 + 0.5 * h.deriv(1, 0.0) * s2 + h.deriv(2, 0.0) * s3 / 6.0;
  renyi += h(1.0) * s1 - 0.5 * h.deriv(1, 1.0) * s2 + h.deriv(2, 1.0) * s3 / 6.0;

  return std::abs(mu_A - p * gauss - (1.0 - p) * renyi);
}

}  // namespace grcf
