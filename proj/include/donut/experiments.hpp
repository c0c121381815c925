#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "donut/matching.hpp"
#include "donut/tours.hpp"
#include "json.hpp"

namespace donut {

enum class TourPolicy { BTour, Hierholzer };
enum class MatchingMode { Structural, Oracle };

const char* to_string(TourPolicy p);
const char* to_string(MatchingMode m);

struct ExperimentConfig {
  int k = 3;
  long long trials = 1;
  uint64_t seed = 0;
  MatchingMode matching = MatchingMode::Structural;
  TourPolicy policy = TourPolicy::BTour;
  double epsilon = -1;   // < 0: use sqrt(ln k / k)
  bool exhaustive = false;
  int threads = 1;
};

struct ExperimentReport {
  int k = 0;
  long long trials = 0;
  uint64_t seed = 0;
  std::string matching_mode;
  std::string tour_policy;
  bool exhaustive = false;
  double epsilon = 0;

  double mean_euler_cost = 0;
  double mean_shortcut_cost = 0;
  double ratio_euler = 0;       // mean_euler_cost / (4k+2)
  double ratio_shortcut = 0;
  double std_error = 0;         // of ratio_euler
  double concentration = 0;     // P[both matchings >= (3/2 - eps) k]

  // exact rationals, present in exhaustive mode
  std::string ratio_euler_exact;
  std::string concentration_exact;

  nlohmann::ordered_json to_json() const;
};

// Per trial: sample a 1-tree, build the matching for the mode, assemble the
// Eulerian subgraph, tour it under the policy, and shortcut. Deterministic
// in (k, trials, seed, mode, policy) regardless of thread count.
ExperimentReport estimate_ratio(const ExperimentConfig& cfg);

struct ConcentrationResult {
  double fraction = 0;
  double bound = 0;       // 1 - 2 exp(-2 eps^2 k / 3)
  double std_error = 0;
  std::string exact;      // rational, exhaustive mode only
};

ConcentrationResult concentration_check(int k, long long trials, double epsilon,
                                        uint64_t seed, bool exhaustive = false,
                                        int threads = 1);

std::vector<ExperimentReport> ratio_sweep(const std::vector<int>& ks,
                                          long long trials, uint64_t seed,
                                          TourPolicy policy, int threads = 1);

std::string sweep_csv(const std::vector<ExperimentReport>& reports);

double default_epsilon(int k);  // sqrt(ln k / k)

}  // namespace donut
