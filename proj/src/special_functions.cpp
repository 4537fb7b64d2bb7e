#include "grcf/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace grcf {

namespace {
constexpr double kAsymptoticCut = 16.0;
}

double digamma(double z) {
  if (!(z > 0.0)) throw std::domain_error("digamma: requires z > 0");
  double acc = 0.0;
  while (z < kAsymptoticCut) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // psi(z) ~ ln z - 1/(2z) - sum B_{2k}/(2k z^{2k})
  const double r = 1.0 / (z * z);
  double s = std::log(z) - 0.5 / z;
  s -= r * (1.0 / 12.0 - r * (1.0 / 120.0 - r * (1.0 / 252.0 -
        r * (1.0 / 240.0 - r * (1.0 / 132.0 - r * (691.0 / 32760.0))))));
  return acc + s;
}

double trigamma(double z) {
  if (!(z > 0.0)) throw std::domain_error("trigamma: requires z > 0");
  double acc = 0.0;
  while (z < kAsymptoticCut) {
    acc += 1.0 / (z * z);
    z += 1.0;
  }
  // psi'(z) ~ 1/z + 1/(2z^2) + sum B_{2k}/z^{2k+1}
  const double r = 1.0 / (z * z);
  double s = 1.0 / 6.0 - r * (1.0 / 30.0 - r * (1.0 / 42.0 -
        r * (1.0 / 30.0 - r * (5.0 / 66.0 - r * (691.0 / 2730.0)))));
  return acc + 1.0 / z + 0.5 * r + r / z * s;
}

double tetragamma(double z) {
  if (!(z > 0.0)) throw std::domain_error("tetragamma: requires z > 0");
  double acc = 0.0;
  while (z < kAsymptoticCut) {
    acc -= 2.0 / (z * z * z);
    z += 1.0;
  }
  // psi''(z) ~ -[1/z^2 + 1/z^3 + 1/(2z^4) - 1/(6z^6) + 1/(6z^8) - 3/(10z^10)]
  const double r = 1.0 / (z * z);
  double s = 0.5 - r * (1.0 / 6.0 - r * (1.0 / 6.0 - r * (3.0 / 10.0)));
  return acc - r * (1.0 + 1.0 / z + r * s);
}

}  // namespace grcf
