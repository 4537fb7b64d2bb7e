#include "grcf/function_rep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grcf {

FunctionRep::FunctionRep(Fn f) : f_(std::move(f)) {
  if (!f_) throw std::invalid_argument("FunctionRep: empty callable");
}

FunctionRep::FunctionRep(Fn f, Fn d1) : f_(std::move(f)), d1_(std::move(d1)) {
  if (!f_) throw std::invalid_argument("FunctionRep: empty callable");
}

FunctionRep FunctionRep::constant(double c) {
  return FunctionRep([c](double) { return c; }, [](double) { return 0.0; });
}

FunctionRep FunctionRep::from_cheb(ChebFunction f) {
  auto fp = std::make_shared<ChebFunction>(std::move(f));
  FunctionRep rep([fp](double x) { return (*fp)(x); });
  rep.cheb_ = fp;
  ChebFunction d = fp->derivative();
  for (auto& slot : rep.cheb_derivs_) {
    slot = std::make_shared<ChebFunction>(d);
    d = d.derivative();
  }
  return rep;
}

namespace {

// Finite differences on [0,1]: central stencils inside, one-sided near
// the endpoints. The tail corrections only use these with tiny u^k
// prefactors, so modest FD accuracy is enough.
double fd(const std::function<double(double)>& f, int k, double x) {
  const double h = 1e-4;
  if (x < 3.0 * h || x > 1.0 - 3.0 * h) {
    const double s = (x < 0.5) ? h : -h;  // step into the interior
    const double f0 = f(x), f1 = f(x + s), f2 = f(x + 2 * s), f3 = f(x + 3 * s);
    switch (k) {
      case 1:
        return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * s);
      case 2:
        return (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (s * s);
      case 3:
        return (-f0 + 3.0 * f1 - 3.0 * f2 + f3) / (s * s * s);
      default:
        throw std::invalid_argument("FunctionRep::deriv: order must be 1..3");
    }
  }
  switch (k) {
    case 1:
      return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2:
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 3:
      return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) /
             (2.0 * h * h * h);
    default:
      throw std::invalid_argument("FunctionRep::deriv: order must be 1..3");
  }
}

}  // namespace

double FunctionRep::deriv(int k, double x) const {
  if (k < 1 || k > 3) throw std::invalid_argument("FunctionRep::deriv: order must be 1..3");
  if (cheb_) return (*cheb_derivs_[k - 1])(x);
  if (k == 1 && d1_) return d1_(x);
  if (d1_) return fd(d1_, k - 1, x);
  return fd(f_, k, x);
}

}  // namespace grcf
