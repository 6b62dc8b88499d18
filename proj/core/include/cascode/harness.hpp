#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cascode/benchgen.hpp"

namespace cascode {

/// One seeded benchmark run. Partition/metric fields are reproducible from
/// the seed; the *_ms fields are wall-clock measurements and are not.
struct BenchRunRecord {
  std::uint64_t seed;
  std::uint32_t communities_cascode;
  std::uint32_t communities_greedy;
  double q_cascode;
  double q_greedy;
  double nmi_cascode;  // vs planted truth
  double nmi_greedy;   // vs planted truth
  double gen_ms;
  double detect_ms;
  double greedy_ms;
};

struct BenchResult {
  std::string params;  // generator parameters, seed policy, metric variant
  std::vector<BenchRunRecord> runs;
  double mean_q_cascode, sd_q_cascode;
  double mean_q_greedy, sd_q_greedy;
  double mean_nmi_cascode, sd_nmi_cascode;
  double mean_nmi_greedy, sd_nmi_greedy;
  double mean_abs_nmi_delta;  // mean |nmi_cascode - nmi_greedy|
};

/// Runs both detectors on seed_count planted-partition networks (run i uses
/// seed base_seed + i for generation and detection) and aggregates the
/// metrics. Standard deviations are sample (n-1) flavored, 0 for a single
/// run. Requires seed_count >= 1 plus gn_benchmark's parameter constraints.
BenchResult run_gn_bench(std::uint32_t k, std::uint32_t n, double p_in,
                         double p_out, std::uint32_t seed_count,
                         std::uint64_t base_seed);

struct ScalingPoint {
  std::uint32_t nodes;
  std::uint64_t edges;
  std::uint32_t reps;
  double best_ms;  // fastest detect() among reps
};

struct ScalingReport {
  std::uint64_t seed;
  std::vector<ScalingPoint> points;
  double slope;  // least-squares slope of ln(best_ms) vs ln(nodes*edges)
};

/// Times detect() on sparse planted-partition networks of the given node
/// counts: blocks of 20 nodes, p_in 0.3 (expected internal degree 5.7) and
/// p_out set for expected external degree 4.3, so average degree is 10 at
/// every size. Sizes must number >= 4 and each be a multiple of 20, at
/// least 40. Generation is untimed; each size is warmed up once and then
/// timed best-of-N sequentially, N adapted to the warmup estimate.
ScalingReport run_scaling(const std::vector<std::uint32_t>& sizes,
                          std::uint64_t seed);

}  // namespace cascode
