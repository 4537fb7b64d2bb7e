#pragma once

#include <array>
#include <functional>
#include <memory>

#include "grcf/chebyshev.hpp"

namespace grcf {

/// Real function on [0,1], either a raw callable (derivatives by finite
/// differences) or backed by a collocation interpolant (exact polynomial
/// derivatives). Transfer-operator tail corrections need derivatives up
/// to order 3 at interior points near the ends of [0,1].
class FunctionRep {
 public:
  using Fn = std::function<double(double)>;

  explicit FunctionRep(Fn f);
  FunctionRep(Fn f, Fn d1);
  static FunctionRep constant(double c);
  static FunctionRep from_cheb(ChebFunction f);

  double operator()(double x) const { return f_(x); }

  /// k-th derivative at x, k in {1,2,3}.
  double deriv(int k, double x) const;

  bool is_cheb() const { return cheb_ != nullptr; }
  const ChebFunction* cheb() const { return cheb_.get(); }

 private:
  Fn f_;
  Fn d1_;  // optional analytic first derivative
  std::shared_ptr<ChebFunction> cheb_;
  std::array<std::shared_ptr<ChebFunction>, 3> cheb_derivs_;
};

}  // namespace grcf
