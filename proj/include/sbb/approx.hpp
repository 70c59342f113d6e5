#pragma once

#include <cstdint>
#include <vector>

#include "sbb/graph.hpp"

namespace sbb {

struct EstimateReport {
  double rho = 1.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> estimates;  // per trial, in trial order
  double mean = 0.0;
  double sample_stddev = 0.0;  // n-1 denominator; 0 for a single trial
};

// Keeps each edge independently with probability rho, visiting edges in
// (left, right) order with one SplitMix64 draw each. Vertex sets are kept.
// Throws Error(kInvalidRho) unless 0 < rho <= 1.
SignedBipartiteGraph sparsify(const SignedBipartiteGraph& graph, double rho,
                              std::uint64_t seed);

// Trial t sparsifies with derive_seed(seed, t), counts balanced butterflies
// on the sample and scales by rho^-4, the inverse survival probability of a
// butterfly. Throws Error(kInvalidRho) or Error(kInvalidTrials).
EstimateReport estimate_balanced(const SignedBipartiteGraph& graph, double rho,
                                 std::uint64_t trials, std::uint64_t seed);

}  // namespace sbb
