#include "grcf/hardy_kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "grcf/errors.hpp"

namespace grcf {

namespace {

constexpr double kKernelRangeMax = 400.0;

// sum_k sign^k u^k / (k!(k+1)!) in long double; the alternating case is
// the only precision hazard and is fenced by kKernelRangeMax upstream.
double kernel_series(double u, bool alternating) {
  long double term = 1.0L, sum = 1.0L;
  const long double lu = u;
  for (int k = 0; k < 400; ++k) {
    term *= lu / ((k + 1.0L) * (k + 2.0L));
    if (alternating && (k % 2 == 0))
      sum -= term;
    else
      sum += term;
    if (std::abs(static_cast<double>(term)) <
        1e-17 * std::max(1.0, std::abs(static_cast<double>(sum))))
      break;
  }
  return static_cast<double>(sum);
}

const QuadRule& cached_laguerre(int n) {
  static std::mutex mu;
  static std::map<int, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_laguerre(n)).first;
  return it->second;
}

}  // namespace

double kernel_J(double u) {
  if (!(u >= 0.0)) throw std::domain_error("kernel_J: u >= 0 required");
  if (u > kKernelRangeMax)
    throw RangeError("kernel_J: series unstable for u > 400");
  return kernel_series(u, true);
}

double kernel_I(double u) {
  if (!(u >= 0.0)) throw std::domain_error("kernel_I: u >= 0 required");
  if (u > kKernelRangeMax)
    throw RangeError("kernel_I: argument beyond supported range");
  return kernel_series(u, false);
}

double bessel_J1(double x) {
  if (!(x >= 0.0)) throw std::domain_error("bessel_J1: x >= 0 required");
  return 0.5 * x * kernel_J(0.25 * x * x);
}

double bessel_I1(double x) {
  if (!(x >= 0.0)) throw std::domain_error("bessel_I1: x >= 0 required");
  return 0.5 * x * kernel_I(0.25 * x * x);
}

namespace {

// One Laguerre pass of int kernel_J(st) g(t) dmu(t). Nodes with st past
// the kernel range are skipped; |kernel_J| <= 1 bounds what they carry.
double kj_pass(const HalfLineFunction& g, double s, const QuadRule& rule,
               double& skipped_bound) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    if (rule.weights[i] < 1e-290 || t * std::exp(-t) < 1e-280) continue;
    const double mu_fac = t / -std::expm1(-t);
    if (s * t > kKernelRangeMax) {
      skipped_bound += rule.weights[i] * mu_fac * std::abs(g(t));
      continue;
    }
    sum += rule.weights[i] * mu_fac * kernel_J(s * t) * g(t);
  }
  return sum;
}

double ki_pass(const HalfLineFunction& g, double s, const QuadRule& rule,
               double& skipped_bound) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    if (rule.weights[i] < 1e-290) continue;
    // kernel_I(st) e^{-(s+t)} <= e^{-(sqrt s - sqrt t)^2}; skip hopeless nodes.
    const double log_bound = -(std::sqrt(s) - std::sqrt(t)) * (std::sqrt(s) - std::sqrt(t));
    if (log_bound < -90.0) {
      skipped_bound += rule.weights[i] * std::exp(std::max(log_bound + t, -700.0)) *
                       std::abs(g(t));
      continue;
    }
    if (s * t > kKernelRangeMax)
      throw RangeError("apply_KI: kernel argument beyond supported range");
    sum += rule.weights[i] * std::exp(t) * kernel_I(s * t) * std::exp(-(s + t)) * g(t);
  }
  return sum;
}

}  // namespace

double apply_KJ(const HalfLineFunction& g, double s, const QuadRule& laguerre,
                double check_tol) {
  if (!(s >= 0.0)) throw std::domain_error("apply_KJ: s >= 0 required");
  double skipped = 0.0;
  const double value = kj_pass(g, s, laguerre, skipped);
  double skipped2 = 0.0;
  const QuadRule& fine = cached_laguerre(2 * static_cast<int>(laguerre.nodes.size()));
  const double value2 = kj_pass(g, s, fine, skipped2);
  const double disagreement = std::abs(value - value2) + skipped + skipped2;
  if (disagreement > check_tol)
    throw AccuracyError("apply_KJ: quadrature rules disagree beyond tolerance",
                        disagreement);
  return value2;
}

double apply_KI(const HalfLineFunction& g, double s, const QuadRule& laguerre,
                double check_tol) {
  if (!(s >= 0.0)) throw std::domain_error("apply_KI: s >= 0 required");
  double skipped = 0.0;
  const double value = ki_pass(g, s, laguerre, skipped);
  double skipped2 = 0.0;
  const QuadRule& fine = cached_laguerre(2 * static_cast<int>(laguerre.nodes.size()));
  const double value2 = ki_pass(g, s, fine, skipped2);
  const double disagreement = std::abs(value - value2) + skipped + skipped2;
  if (disagreement > check_tol)
    throw AccuracyError("apply_KI: quadrature rules disagree beyond tolerance",
                        disagreement);
  return value2;
}

double laplace_hat(const HalfLineFunction& phi, double x, const QuadRule& laguerre) {
  if (!(x >= 0.0)) throw std::domain_error("laplace_hat: x >= 0 required");
  auto integrand = [&](double t) { return std::exp(-t * x) * phi(t); };
  const double value = integrate_mu(integrand, laguerre);
  const double fine =
      integrate_mu(integrand, cached_laguerre(2 * static_cast<int>(laguerre.nodes.size())));
  if (std::abs(value - fine) > 1e-7)
    throw AccuracyError("laplace_hat: quadrature rules disagree beyond tolerance",
                        std::abs(value - fine));
  return fine;
}

double commuting_residual(const HalfLineFunction& phi,
                          const std::vector<double>& x_grid,
                          const QuadRule& laguerre, const TailPolicy& policy) {
  // Left leg: L_G applied to phi_hat, with the analytic derivative
  // phi_hat'(y) = -int t e^{-ty} phi dmu for the tail correction.
  FunctionRep phat(
      [&](double y) { return laplace_hat(phi, y, laguerre); },
      [&](double y) {
        return -integrate_mu([&](double t) { return t * std::exp(-t * y) * phi(t); },
                             laguerre);
      });

  // Right leg: laplace transform of K_J phi; kernel images cached at the
  // outer rule's nodes. Outer nodes past t = 40 carry mu-mass below 1e-16
  // and are dropped; the per-node inner accuracy budget is the target
  // split by the node's own mu-weight.
  const std::size_t nn = laguerre.nodes.size();
  std::vector<double> kj_at_nodes(nn, 0.0), mu_weight(nn, 0.0);
  for (std::size_t i = 0; i < nn; ++i) {
    const double t = laguerre.nodes[i];
    if (t > 40.0 || laguerre.weights[i] < 1e-290) continue;
    mu_weight[i] = laguerre.weights[i] * t / -std::expm1(-t);
    const double budget = std::max(1e-9, 1e-9 / mu_weight[i]);
    kj_at_nodes[i] = apply_KJ(phi, t, laguerre, budget);
  }
  auto rhs = [&](double x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < nn; ++i)
      if (mu_weight[i] > 0.0)
        sum += mu_weight[i] * std::exp(-laguerre.nodes[i] * x) * kj_at_nodes[i];
    return sum;
  };

  double residual = 0.0;
  for (const double x : x_grid)
    residual = std::max(residual, std::abs(apply_LG(phat, x, policy) - rhs(x)));
  return residual;
}

double hs_norm(int n) {
  if (n < 1) throw std::invalid_argument("hs_norm: n >= 1 required");
  // (1/4pi) int |psi_n(it)|^2 / Re phi_n(it) dt  with t = n tan(theta).
  static const QuadRule gl = gauss_legendre(96, -std::numbers::pi / 2, std::numbers::pi / 2);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double theta = gl.nodes[i];
    const double t = n * std::tan(theta);
    const double t2n2 = t * t + static_cast<double>(n) * n;
    const double psi_sq = 1.0 / (t2n2 * t2n2);
    const double re_phi = n / t2n2;
    const double jac = n / (std::cos(theta) * std::cos(theta));
    sum += gl.weights[i] * psi_sq / re_phi * jac;
  }
  return std::sqrt(sum / (4.0 * std::numbers::pi));
}

double trace_norm_bound(int n) {
  if (n < 1) throw std::invalid_argument("trace_norm_bound: n >= 1 required");
  const double nn = n;
  return 1.0 / std::sqrt(2.0 * nn * nn * nn + 3.0 * nn * nn + nn);
}

double opnorm_bound_gauss(int n) {
  if (n < 1) throw std::invalid_argument("opnorm_bound_gauss: n >= 1 required");
  return 1.0 / (n * std::sqrt(n + 1.0));
}

double opnorm_bound_Bpow(int m) {
  if (m < 1) throw std::invalid_argument("opnorm_bound_Bpow: m >= 1 required");
  return std::sqrt(m + 1.0);
}

double trace_norm_quadrature(int n) {
  if (n < 1) throw std::invalid_argument("trace_norm_quadrature: n >= 1 required");
  static const QuadRule gl = gauss_legendre(128, -std::numbers::pi / 2, std::numbers::pi / 2);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double theta = gl.nodes[i];
    const double t = std::tan(theta);
    const double jac = 1.0 / (std::cos(theta) * std::cos(theta));
    const double a = n * static_cast<double>(n) + t * t;
    const double b = (n + 1.0) * (n + 1.0) + t * t;
    sum += gl.weights[i] * jac / (a * b);
  }
  return std::sqrt(sum / std::numbers::pi);
}

XiEtaNorms xi_eta_norms(int n) {
  if (n < 0) throw std::invalid_argument("xi_eta_norms: n >= 0 required");
  if (n > 150) throw RangeError("xi_eta_norms: n > 150 overflows the factorial scales");
  XiEtaNorms out;
  out.eta_sq_closed =
      std::exp(std::lgamma(2.0 * n + 1.0) - 2.0 * std::lgamma(n + 1.0) -
               (2.0 * n + 1.0) * std::numbers::ln2);

  const QuadRule& rule = cached_laguerre(256);
  // ||eta_n||^2 = int t^{2n} e^{-2t} dt / (n!)^2, substituted y = 2t so the
  // Laguerre rule integrates the pure power exactly.
  double eta = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    eta += rule.weights[i] *
           std::exp(2.0 * n * std::log(y) - (2.0 * n + 1.0) * std::numbers::ln2 -
                    2.0 * std::lgamma(n + 1.0));
  }
  out.eta_sq = eta;

  // ||xi_n||^2 = int (s/(e^s-1))^2 s^{2n} e^{-2s} ds / ((n+1)!)^2, y = 4s.
  double xi = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = rule.nodes[i];
    const double log_term = (2.0 * n + 2.0) * std::log(y) -
                            2.0 * std::log(-std::expm1(-0.25 * y)) -
                            (2.0 * n + 3.0) * std::numbers::ln2 * 2.0 -
                            2.0 * std::lgamma(n + 2.0);
    xi += rule.weights[i] * std::exp(log_term);
  }
  out.xi_sq = xi;
  return out;
}

}  // namespace grcf
