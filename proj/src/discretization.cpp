#include "grcf/discretization.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "grcf/errors.hpp"
#include "grcf/quadrature.hpp"
#include "grcf/special_functions.hpp"

namespace grcf {

namespace {

void parallel_rows(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

OperatorMatrix build_matrix(double p, std::shared_ptr<const CollocationGrid> grid,
                            const TailPolicy& policy, int threads) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("build_matrix: p in [0,1]");
  if (grid->degree() < 4) throw std::invalid_argument("build_matrix: degree >= 4 required");
  if (policy.N < 2) throw std::invalid_argument("build_matrix: policy.N >= 2 required");

  const int n = grid->size();
  const auto& xs = grid->nodes();
  const Eigen::MatrixXd& D1 = grid->diff_matrix();
  const Eigen::MatrixXd D2 = D1 * D1;
  const Eigen::MatrixXd D3 = D2 * D1;
  const QuadRule gl = gauss_legendre(grid->degree() / 2 + 2, 0.0, 1.0);

  OperatorMatrix op;
  op.m.resize(n, n);
  op.tag = OperatorMatrix::Tag::Lp;
  op.p = p;
  op.policy = policy;
  op.grid = grid;

  std::vector<double> row_estimates(n, 0.0);

  parallel_rows(n, threads, [&](int i) {
    const double x = xs[i];
    Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd card(n);

    // Truncated series over the first N branch pairs.
    for (int k = policy.N; k >= 1; --k) {
      const double den = k + x;
      const double w = 1.0 / (den * den);
      if (p > 0.0) {
        grid->cardinals_at(1.0 / den, card);
        row.noalias() += (p * w) * card;
      }
      if (p < 1.0) {
        grid->cardinals_at(1.0 - 1.0 / den, card);
        row.noalias() += ((1.0 - p) * w) * card;
      }
    }

    // Euler-Maclaurin tail, exact for the cardinal polynomials: endpoint
    // integral by Gauss-Legendre (exact at this node count) plus B_2/B_4
    // endpoint terms with derivative rows taken from the differentiation
    // matrices.
    double est = 0.0;
    if (policy.order >= 1) {
      const double u0 = 1.0 / (policy.N + 1.0 + x);
      const double u2 = u0 * u0, u3 = u2 * u0, u4 = u2 * u2;
      const double u5 = u4 * u0, u6 = u4 * u2, u7 = u6 * u0, u8 = u4 * u4;
      for (int side = 0; side < 2; ++side) {
        const bool renyi = side == 1;
        const double weight = renyi ? 1.0 - p : p;
        if (weight == 0.0) continue;
        Eigen::VectorXd tail = Eigen::VectorXd::Zero(n);
        for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
          const double u = u0 * gl.nodes[q];
          grid->cardinals_at(renyi ? 1.0 - u : u, card);
          tail.noalias() += (u0 * gl.weights[q]) * card;
        }
        grid->cardinals_at(renyi ? 1.0 - u0 : u0, card);
        Eigen::VectorXd L0 = card;
        tail.noalias() += (0.5 * u2) * L0;
        if (policy.order >= 2) {
          const double sgn = renyi ? -1.0 : 1.0;
          Eigen::VectorXd L1 = sgn * (D1.transpose() * L0);
          Eigen::VectorXd L2 = D2.transpose() * L0;
          Eigen::VectorXd L3 = sgn * (D3.transpose() * L0);
          Eigen::VectorXd g1 = -(u4 * L1 + (2.0 * u3) * L0);
          Eigen::VectorXd g3 = -(u8 * L3 + (12.0 * u7) * L2 + (36.0 * u6) * L1 +
                                 (24.0 * u5) * L0);
          tail.noalias() += -g1 / 12.0 + g3 / 720.0;
          est += weight * g3.cwiseAbs().sum() / 720.0;
        } else {
          est += weight * 0.5 * u2 * L0.cwiseAbs().sum();
        }
        row.noalias() += weight * tail;
      }
    } else {
      est = trigamma(policy.N + 1.0 + x);
    }
    op.m.row(i) = row.transpose();
    row_estimates[i] = est;
  });

  for (double e : row_estimates) op.tail_estimate = std::max(op.tail_estimate, e);
  if (op.tail_estimate > policy.tol)
    throw TruncationError("build_matrix: tail estimate exceeds policy.tol",
                          op.tail_estimate);
  return op;
}

DensityResult leading_pair(const OperatorMatrix& M) {
  if (M.tag != OperatorMatrix::Tag::Lp && M.tag != OperatorMatrix::Tag::Lhat)
    throw std::invalid_argument("leading_pair: matrix must be tagged Lp or Lhat");
  const int n = static_cast<int>(M.m.rows());
  const Eigen::VectorXd& w = M.grid->int_weights();

  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  double lambda = 1.0;
  int it = 0;
  constexpr int kMaxIter = 100000;
  for (; it < kMaxIter; ++it) {
    Eigen::VectorXd next = M.m * v;
    lambda = w.dot(next);  // Rayleigh quotient under the integration functional
    next /= lambda;        // keep unit discrete mass
    const double diff = (next - v).lpNorm<Eigen::Infinity>();
    v.swap(next);
    if (diff < 1e-13) break;
  }
  if (it == kMaxIter)
    throw ConvergenceError("leading_pair: power iteration did not converge (gap too small)");

  DensityResult res{.lambda1 = lambda,
                    .h = ChebFunction(M.grid, v / w.dot(v)),
                    .lambda2 = 0.0,
                    .residual_inf = (M.m * v - lambda * v).lpNorm<Eigen::Infinity>(),
                    .degree = M.grid->degree(),
                    .iterations = it + 1};
  return res;
}

double spectral_gap(const OperatorMatrix& M, const DensityResult& lead) {
  const int n = static_cast<int>(M.m.rows());
  const Eigen::VectorXd& w = M.grid->int_weights();
  const Eigen::VectorXd& h = lead.h.values();

  // Deflate the rank-one spectral projector h (x) w.
  auto deflated = [&](const Eigen::VectorXd& g) -> Eigen::VectorXd {
    Eigen::VectorXd out = M.m * g;
    out.noalias() -= lead.lambda1 * h * w.dot(g);
    return out;
  };

  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) g(i) = std::cos(3.0 * i + 1.0);  // fixed generic start
  g -= h * w.dot(g);
  g /= g.lpNorm<Eigen::Infinity>();

  double ratio = 0.0;
  constexpr int kMaxIter = 100000;
  for (int it = 0; it < kMaxIter; ++it) {
    Eigen::VectorXd next = deflated(g);
    const double nrm = next.lpNorm<Eigen::Infinity>();
    if (nrm < 1e-290) return 0.0;
    next /= nrm;
    const bool settled = it > 4 && std::abs(nrm - ratio) < 1e-12 * std::max(1.0, nrm);
    ratio = nrm;
    g.swap(next);
    if (settled) return ratio;
  }
  throw ConvergenceError("spectral_gap: deflated iteration did not converge");
}

std::vector<std::complex<double>> full_spectrum(const OperatorMatrix& M) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(M.m);
  std::vector<std::complex<double>> vals(es.eigenvalues().data(),
                                         es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(vals.begin(), vals.end(),
            [](auto a, auto b) { return std::abs(a) > std::abs(b); });
  return vals;
}

DensityResult density(double p, int degree, TailPolicy policy, int threads) {
  if (p == 0.0)
    throw std::domain_error(
        "density: p = 0 is refused; the Renyi map only has the sigma-finite "
        "invariant density 1/x, which is not normalizable on [0,1]");
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("density: p in (0,1] required");
  // The tail cut must clear the node-clustering scale ~1/d^2 near the
  // endpoints for the Euler-Maclaurin terms to keep decreasing.
  policy.N = std::max(policy.N, 2 * degree);
  policy.tol = std::max(policy.tol, 1e-8);

  auto grid = CollocationGrid::shared(degree);
  OperatorMatrix M = build_matrix(p, grid, policy, threads);
  DensityResult res = leading_pair(M);
  res.lambda2 = spectral_gap(M, res);

  for (int i = 0; i < grid->size(); ++i) {
    if (res.h.values()(i) < -1e-10)
      throw ConsistencyError("density: computed density is negative at a node");
  }
  return res;
}

}  // namespace grcf
