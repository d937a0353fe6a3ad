#pragma once

// Deterministic experiment plumbing: the duration-versus-delay sweep as CSV,
// uncertainty-region dumps, and Monte-Carlo cross-checks of the exact
// expected beamwidth.

#include "beamalign/beamset.hpp"
#include "beamalign/prior.hpp"
#include "beamalign/strategies.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace beamalign {

struct ExperimentConfig {
  Rat target_width = Rat(1, 32);  // turns
  int d_min = 1;
  int d_max = 20;
  std::vector<Method> methods = {Method::bisection, Method::modified_exhaustive,
                                 Method::non_interactive, Method::lower_bound};
  Prior prior = Prior::uniform();
  std::string prior_label = "uniform";
  std::uint64_t seed = 1;
  int b_cap = 4096;
};

// One row per (method, d), methods in config order, d ascending. A leading
// comment line records the full configuration; output is byte-stable.
std::string duration_sweep_csv(const ExperimentConfig& config);

// Rows (codeword, arc list, measure, probability), sorted by codeword.
std::string uncertainty_csv(const UncertaintyMap& map, const Prior& prior);

struct SimulationReport {
  Rat exact_width;      // turns
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double mc_mean = 0.0;    // turns; meaningful when samples > 0
  double mc_stderr = 0.0;  // sample standard error of the mean
};

// Exact expected width plus a seeded Monte-Carlo estimate over n draws.
SimulationReport simulate_expected_width(const ScanningBeamSet& set, const Prior& prior,
                                         std::size_t n, std::uint64_t seed);

}  // namespace beamalign
