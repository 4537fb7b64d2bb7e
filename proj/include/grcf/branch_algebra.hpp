#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "grcf/dynamics.hpp"

namespace grcf {

using BigInt = boost::multiprecision::cpp_int;

/// Index (n, omega) of an inverse branch b_{n,omega}.
struct BranchIndex {
  std::uint64_t n = 1;  // digit, n >= 1
  MapChoice omega = MapChoice::Gauss;
};

using BranchWord = std::vector<BranchIndex>;

/// Integer Moebius matrix [[A,B],[C,D]] of a composed inverse branch
/// b(x) = (Ax+B)/(Cx+D). Entries are nonnegative and |det| = 1; entries
/// grow multiplicatively with the word length, hence big integers.
struct MoebiusMatrix {
  BigInt A{0}, B{0}, C{0}, D{0};

  BigInt det() const { return A * D - B * C; }
  MoebiusMatrix operator*(const MoebiusMatrix& rhs) const;

  /// b(x) = (Ax+B)/(Cx+D) in binary64.
  double evaluate(double x) const;
  /// |b'(x)| = |det| / (Cx+D)^2.
  double abs_derivative(double x) const;
};

/// M_{n,0} = [[0,1],[1,n]], M_{n,1} = [[1,n-1],[1,n]].
MoebiusMatrix branch_matrix(const BranchIndex& idx);

/// Left-to-right product M_{n_1,w_1} ... M_{n_m,w_m}; the leftmost index
/// applies last, matching b_w = b_{n_1} o ... o b_{n_m}.
MoebiusMatrix compose(const BranchWord& word);

/// sup_{x in [0,1]} |b'(x)| = 1/D^2, attained at x = 0.
double sup_abs_derivative(const MoebiusMatrix& m);

/// a_{n,omega}(x): p/(x+n)^2 for the Gauss branch, (1-p)/(x+n)^2 for Renyi.
double branch_weight(const BranchIndex& idx, double p, double x);

/// Product weight of a composed branch: P[omega-word] * |b_w'(x)|.
double word_weight(const BranchWord& word, double p, double x);

}  // namespace grcf
