#include "grcf/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "grcf/errors.hpp"

namespace grcf {

double apply_map(MapChoice omega, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("apply_map: x must be in [0,1]");
  const double y = (omega == MapChoice::Gauss) ? x : 1.0 - x;
  if (y == 0.0) return 0.0;  // T_0(0) = 0 and T_1(1) = 0
  double r = 1.0 / y;
  r -= std::floor(r);
  return std::clamp(r, 0.0, 1.0);
}

std::uint64_t first_digit(MapChoice omega, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("first_digit: x must be in [0,1]");
  const double y = (omega == MapChoice::Gauss) ? x : 1.0 - x;
  if (y == 0.0)
    throw DigitUndefinedError("first_digit: undefined at the map's fixed boundary point");
  // y in (1/(m+1), 1/m] <=> m = floor(1/y); exact reciprocals land on the
  // closed right endpoint and floor already yields their digit.
  const double m = std::floor(1.0 / y);
  return static_cast<std::uint64_t>(m);
}

std::vector<DigitRecord> expand(double x, const std::vector<MapChoice>& omega_prefix) {
  std::vector<DigitRecord> records;
  records.reserve(omega_prefix.size());
  for (const MapChoice omega : omega_prefix) {
    records.push_back({first_digit(omega, x), omega});
    x = apply_map(omega, x);
  }
  return records;
}

double reconstruct(const std::vector<DigitRecord>& digits, double tail) {
  if (digits.empty()) throw std::invalid_argument("reconstruct: digit sequence is empty");
  if (!(tail >= 0.0 && tail <= 1.0))
    throw std::domain_error("reconstruct: tail must be in [0,1]");
  double v = tail;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const double den = static_cast<double>(it->digit) + v;
    if (den == 0.0) throw std::runtime_error("reconstruct: zero denominator");
    v = (it->omega == MapChoice::Gauss) ? 1.0 / den : 1.0 - 1.0 / den;
  }
  return v;
}

std::vector<double> simulate(const CoinParams& params, double x0,
                             std::uint64_t burn_in, std::uint64_t samples) {
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw std::domain_error("simulate: p must be in [0,1]");
  if (samples < 1) throw std::invalid_argument("simulate: samples >= 1 required");
  const CounterRng rng(params.seed);
  std::vector<double> out;
  out.reserve(samples);
  double x = x0;
  const std::uint64_t total = burn_in + samples;
  for (std::uint64_t k = 0; k < total; ++k) {
    const MapChoice omega =
        rng.uniform(k) < params.p ? MapChoice::Gauss : MapChoice::Renyi;
    x = apply_map(omega, x);
    if (k >= burn_in) out.push_back(x);
  }
  return out;
}

std::vector<double> histogram_density(const std::vector<double>& samples, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram_density: bins >= 1 required");
  std::vector<double> density(bins, 0.0);
  for (const double x : samples) {
    int b = static_cast<int>(x * bins);
    b = std::clamp(b, 0, bins - 1);
    density[b] += 1.0;
  }
  const double scale = static_cast<double>(bins) / static_cast<double>(samples.size());
  for (double& d : density) d *= scale;
  return density;
}

}  // namespace grcf
