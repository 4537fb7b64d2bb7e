#pragma once

namespace grcf {

/// Digamma psi(z) for z > 0. Recurrence up to z >= 16, then the
/// Bernoulli asymptotic series; absolute accuracy ~1e-15.
double digamma(double z);

/// Trigamma psi'(z) = sum_{k>=0} 1/(z+k)^2, z > 0.
double trigamma(double z);

/// Tetragamma psi''(z) = -2 sum_{k>=0} 1/(z+k)^3, z > 0.
double tetragamma(double z);

}  // namespace grcf
