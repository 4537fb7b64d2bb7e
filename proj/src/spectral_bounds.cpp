#include "grcf/spectral_bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "grcf/errors.hpp"

namespace grcf {

double zeta(double s, double tol) {
  if (!(s > 1.0)) throw std::domain_error("zeta: requires s > 1");
  if (!(tol > 0.0)) throw std::invalid_argument("zeta: tol > 0 required");
  // Partial sum to N-1 plus Euler-Maclaurin tail; the first omitted
  // Bernoulli term bounds the error, and N doubles until it meets tol.
  int N = 16;
  for (;;) {
    double rising = s;
    for (int i = 1; i <= 8; ++i) rising *= s + i;
    const double first_omitted =
        (5.0 / 66.0) / 3628800.0 * rising * std::pow(N, -s - 9.0);
    if (std::abs(first_omitted) <= 0.5 * tol || N >= (1 << 20)) break;
    N *= 2;
  }
  double sum = 0.0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(n, -s);
  sum += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
  const double t1 = s / 12.0 * std::pow(N, -s - 1.0);
  const double t2 = -s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(N, -s - 3.0);
  double r5 = s;
  for (int i = 1; i <= 4; ++i) r5 *= s + i;
  const double t3 = r5 / 30240.0 * std::pow(N, -s - 5.0);
  double r7 = r5;
  for (int i = 5; i <= 6; ++i) r7 *= s + i;
  const double t4 = -r7 / 1209600.0 * std::pow(N, -s - 7.0);
  return sum + t1 + t2 + t3 + t4;
}

BoundReport ess_radius_bound(double p, int k) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("ess_radius_bound: requires p in (0,1)");
  if (k < 1) throw std::domain_error("ess_radius_bound: requires k >= 1");
  BoundReport rep;
  rep.p = p;
  rep.k = k;
  rep.zeta_value = zeta(2.0 * k + 2.0);
  rep.bound = rep.zeta_value - std::min(p, 1.0 - p);
  rep.quasi_compact = rep.bound < 1.0;
  return rep;
}

int min_quasicompact_k(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("min_quasicompact_k: requires p in (0,1)");
  for (int k = 1;; ++k) {
    if (ess_radius_bound(p, k).bound < 1.0) return k;
    if (k > 64)
      throw std::runtime_error("min_quasicompact_k: no k <= 64 found");  // unreachable for p in (0,1)
  }
}

double V_p(int t, int n, double p) {
  if (n < 1) throw std::invalid_argument("V_p: n >= 1 required");
  if (t < 2) throw std::invalid_argument("V_p: t >= 2 required");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("V_p: p in [0,1] required");
  const double hi = std::max(p, 1.0 - p), lo = std::min(p, 1.0 - p);
  return hi * std::pow(n, -t) + lo * std::pow(n + 1.0, -t);
}

namespace {

// Depth-first enumeration of branch words with analytic pruning.
// A prefix with probability P and matrix bottom-right D can contribute at
// most P * D^{-(2k+2)} * zeta(2k+2)^r over all r-step completions.
class QEnumerator {
 public:
  QEnumerator(double p, int k, int m, int N_trunc, const std::vector<double>& xs)
      : p_(p), k_(k), m_(m), N_(N_trunc), xs_(xs), acc_(xs.size(), 0.0) {
    zeta_t_ = zeta(2.0 * (k + 1.0));
    double partial = 0.0;
    for (int n = 1; n <= N_trunc; ++n) partial += std::pow(n, -2.0 * (k + 1.0));
    tail_t_ = zeta_t_ - partial;
  }

  void run() {
    const MoebiusMatrix identity{1, 0, 0, 1};
    descend(identity, 1.0, m_);
    // Words rejected by digit truncation alone.
    dropped_ += std::pow(zeta_t_, m_) - std::pow(zeta_t_ - tail_t_, m_);
  }

  double sup() const {
    double s = 0.0;
    for (double v : acc_) s = std::max(s, v);
    return s;
  }
  double dropped() const { return dropped_; }

 private:
  void descend(const MoebiusMatrix& prefix, double prob, int remaining) {
    if (remaining == 0) {
      const double c = static_cast<double>(prefix.C);
      const double d = static_cast<double>(prefix.D);
      for (std::size_t i = 0; i < xs_.size(); ++i) {
        const double den = c * xs_[i] + d;
        acc_[i] += prob * std::pow(den * den, -(k_ + 1.0));
      }
      return;
    }
    for (int w = 0; w < 2; ++w) {
      const double pw = (w == 0) ? p_ : 1.0 - p_;
      if (pw == 0.0) continue;
      for (int n = 1; n <= N_; ++n) {
        const BranchIndex idx{static_cast<std::uint64_t>(n),
                              w == 0 ? MapChoice::Gauss : MapChoice::Renyi};
        const MoebiusMatrix child = prefix * branch_matrix(idx);
        const double d = static_cast<double>(child.D);
        const double ceiling = prob * pw * std::pow(d, -2.0 * (k_ + 1.0)) *
                               std::pow(zeta_t_, remaining - 1);
        if (ceiling < kPrune) {
          // D grows at least linearly in n, so all larger digits prune too;
          // charge them with the same zeta-chain bound and stop.
          const double dpre = static_cast<double>(prefix.D);
          double rest = 0.0;
          for (int nn = n; nn <= N_; ++nn)
            rest += std::pow(dpre * nn, -2.0 * (k_ + 1.0));
          dropped_ += prob * pw * rest * std::pow(zeta_t_, remaining - 1);
          break;
        }
        descend(child, prob * pw, remaining - 1);
      }
    }
  }

  static constexpr double kPrune = 1e-16;
  double p_;
  int k_, m_, N_;
  const std::vector<double>& xs_;
  std::vector<double> acc_;
  double zeta_t_ = 0.0, tail_t_ = 0.0, dropped_ = 0.0;
};

}  // namespace

QResult empirical_Q(double p, int k, int m, int N_trunc) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("empirical_Q: p in [0,1]");
  if (k < 1 || m < 1) throw std::invalid_argument("empirical_Q: k, m >= 1 required");
  if (N_trunc < 1) throw std::invalid_argument("empirical_Q: N_trunc >= 1 required");
  if (m > 4 || m * std::log2(2.0 * N_trunc) > 44.0)
    throw SizeError("empirical_Q: enumeration too large");

  std::vector<double> xs(101);
  for (int i = 0; i <= 100; ++i) xs[i] = i / 100.0;
  QEnumerator en(p, k, m, N_trunc, xs);
  en.run();
  return {en.sup(), en.dropped()};
}

BigInt stirling2(int m, int j) {
  if (m < 0 || j < 0 || j > m) throw std::domain_error("stirling2: need 0 <= j <= m");
  if (j == 0) return m == 0 ? BigInt(1) : BigInt(0);
  // S(m,j) = (1/j!) sum_{i=0}^j (-1)^{j-i} C(j,i) i^m
  BigInt sum = 0, binom = 1, fact = 1;
  for (int i = 0; i <= j; ++i) {
    if (i > 0) {
      binom = binom * (j - i + 1) / i;
      fact *= i;
    }
    BigInt term = binom * boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(m));
    if ((j - i) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum / fact;
}

BigInt stirling2_recurrence(int m, int j) {
  if (m < 0 || j < 0 || j > m)
    throw std::domain_error("stirling2_recurrence: need 0 <= j <= m");
  std::vector<BigInt> row(static_cast<std::size_t>(j) + 1, BigInt(0));
  row[0] = 1;  // S(0,0)
  for (int mm = 1; mm <= m; ++mm) {
    for (int jj = std::min(mm, j); jj >= 1; --jj)
      row[jj] = jj * row[jj] + row[jj - 1];
    row[0] = 0;
  }
  return row[j];
}

}  // namespace grcf
