#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grcf/rng.hpp"

namespace grcf {

/// Which of the two continued-fraction maps acts at a step.
enum class MapChoice : int { Gauss = 0, Renyi = 1 };

/// Parameters of the Bernoulli coin driving the random system.
struct CoinParams {
  double p = 0.5;  // probability of the Gauss map
  std::uint64_t seed = 0;
  std::string rng_algorithm_id{CounterRng::kAlgorithmId};
};

/// One digit of the random expansion together with the map that produced it.
struct DigitRecord {
  std::uint64_t digit = 1;  // a_k >= 1
  MapChoice omega = MapChoice::Gauss;
};

/// T_0(x) = {1/x} with T_0(0) = 0, or T_1(x) = {1/(1-x)} with T_1(1) = 0.
double apply_map(MapChoice omega, double x);

/// First digit a_1: the m with omega + (-1)^omega x in (1/(m+1), 1/m].
/// Throws DigitUndefinedError at x=0 (Gauss) and x=1 (Renyi).
std::uint64_t first_digit(MapChoice omega, double x);

/// Digit records of the first n steps of the orbit driven by omega_prefix.
std::vector<DigitRecord> expand(double x, const std::vector<MapChoice>& omega_prefix);

/// Evaluate the nested fraction: with v = tail, fold right-to-left
/// v <- omega_k + (-1)^{omega_k} / (a_k + v).
double reconstruct(const std::vector<DigitRecord>& digits, double tail);

/// Random-coin orbit samples after burn_in steps; deterministic in
/// (params.p, params.seed). Step k uses coin draw(k).
std::vector<double> simulate(const CoinParams& params, double x0,
                             std::uint64_t burn_in, std::uint64_t samples);

/// Normalized histogram (density values per bin) of the samples.
std::vector<double> histogram_density(const std::vector<double>& samples, int bins);

}  // namespace grcf
