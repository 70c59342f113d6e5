#include "sbb/approx.hpp"

#include <cmath>
#include <string>

#include "sbb/error.hpp"
#include "sbb/exact.hpp"
#include "sbb/rng.hpp"

namespace sbb {
namespace {

void check_rho(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw Error(ErrorKind::kInvalidRho, "rho must lie in (0, 1], got " + std::to_string(rho));
  }
}

}  // namespace

SignedBipartiteGraph sparsify(const SignedBipartiteGraph& graph, double rho,
                              std::uint64_t seed) {
  check_rho(rho);
  SplitMix64 rng(seed);
  std::vector<SignedEdge> kept;
  for (const auto& e : graph.edges()) {
    if (rng.bernoulli(rho)) kept.push_back(e);
  }
  return build_graph(graph.left_count(), graph.right_count(), kept);
}

EstimateReport estimate_balanced(const SignedBipartiteGraph& graph, double rho,
                                 std::uint64_t trials, std::uint64_t seed) {
  check_rho(rho);
  if (trials == 0) throw Error(ErrorKind::kInvalidTrials, "trials must be at least 1");

  EstimateReport report;
  report.rho = rho;
  report.trials = trials;
  report.seed = seed;
  report.estimates.reserve(trials);
  const double scale = 1.0 / std::pow(rho, 4);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto sample = sparsify(graph, rho, derive_seed(seed, t));
    const auto counted = bb_bucket(sample);
    report.estimates.push_back(static_cast<double>(counted.balanced) * scale);
  }

  double sum = 0.0;
  for (double x : report.estimates) sum += x;
  report.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0.0;
    for (double x : report.estimates) ss += (x - report.mean) * (x - report.mean);
    report.sample_stddev = std::sqrt(ss / static_cast<double>(trials - 1));
  }
  return report;
}

}  // namespace sbb
