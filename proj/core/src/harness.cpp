#include "cascode/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cascode/detect.hpp"
#include "cascode/greedy.hpp"
#include "cascode/metrics.hpp"
#include "cascode/text.hpp"

namespace cascode {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Stats {
  double mean = 0.0;
  double sd = 0.0;
};

Stats stats_of(const std::vector<BenchRunRecord>& runs,
               double BenchRunRecord::*field) {
  Stats s;
  for (const auto& r : runs) s.mean += r.*field;
  s.mean /= static_cast<double>(runs.size());
  if (runs.size() > 1) {
    double acc = 0.0;
    for (const auto& r : runs) {
      const double d = r.*field - s.mean;
      acc += d * d;
    }
    s.sd = std::sqrt(acc / static_cast<double>(runs.size() - 1));
  }
  return s;
}

}  // namespace

BenchResult run_gn_bench(std::uint32_t k, std::uint32_t n, double p_in,
                         double p_out, std::uint32_t seed_count,
                         std::uint64_t base_seed) {
  if (seed_count < 1)
    throw std::invalid_argument("seeds count must be at least 1");

  BenchResult result;
  {
    std::ostringstream params;
    params << "gn k=" << k << " n=" << n << " p_in=" << format_double(p_in)
           << " p_out=" << format_double(p_out) << " seeds=" << seed_count
           << " base_seed=" << base_seed
           << " nmi_variant=2I/(Ha+Hb),natural-log";
    result.params = params.str();
  }

  for (std::uint32_t i = 0; i < seed_count; ++i) {
    const std::uint64_t seed = base_seed + i;
    BenchRunRecord rec{};
    rec.seed = seed;

    auto t = Clock::now();
    PlantedNetwork net = gn_benchmark(k, n, p_in, p_out, seed);
    rec.gen_ms = ms_since(t);

    t = Clock::now();
    DetectResult dr = detect(net.graph, seed);
    rec.detect_ms = ms_since(t);

    t = Clock::now();
    Partition greedy = greedy_modularity_partition(net.graph);
    rec.greedy_ms = ms_since(t);

    rec.communities_cascode = dr.partition.label_count();
    rec.communities_greedy = greedy.label_count();
    rec.q_cascode = modularity(net.graph, dr.partition);
    rec.q_greedy = modularity(net.graph, greedy);
    rec.nmi_cascode = nmi(dr.partition, net.truth);
    rec.nmi_greedy = nmi(greedy, net.truth);
    result.runs.push_back(rec);
  }

  const Stats qc = stats_of(result.runs, &BenchRunRecord::q_cascode);
  const Stats qg = stats_of(result.runs, &BenchRunRecord::q_greedy);
  const Stats nc = stats_of(result.runs, &BenchRunRecord::nmi_cascode);
  const Stats ng = stats_of(result.runs, &BenchRunRecord::nmi_greedy);
  result.mean_q_cascode = qc.mean;
  result.sd_q_cascode = qc.sd;
  result.mean_q_greedy = qg.mean;
  result.sd_q_greedy = qg.sd;
  result.mean_nmi_cascode = nc.mean;
  result.sd_nmi_cascode = nc.sd;
  result.mean_nmi_greedy = ng.mean;
  result.sd_nmi_greedy = ng.sd;
  result.mean_abs_nmi_delta = 0.0;
  for (const auto& r : result.runs)
    result.mean_abs_nmi_delta += std::abs(r.nmi_cascode - r.nmi_greedy);
  result.mean_abs_nmi_delta /= static_cast<double>(result.runs.size());
  return result;
}

namespace {

constexpr std::uint32_t kScalingBlock = 20;
constexpr double kScalingPIn = 0.3;
constexpr double kScalingExternalDegree = 4.3;

}  // namespace

ScalingReport run_scaling(const std::vector<std::uint32_t>& sizes,
                          std::uint64_t seed) {
  if (sizes.size() < 4) throw std::invalid_argument("need >= 4 sizes");
  for (std::uint32_t size : sizes) {
    if (size < 2 * kScalingBlock || size % kScalingBlock != 0)
      throw std::invalid_argument(
          "sizes must be multiples of 20 and at least 40");
  }

  ScalingReport report;
  report.seed = seed;
  for (std::uint32_t size : sizes) {
    const double p_out =
        kScalingExternalDegree / static_cast<double>(size - kScalingBlock);
    PlantedNetwork net =
        gn_benchmark(size / kScalingBlock, kScalingBlock, kScalingPIn, p_out, seed);

    auto t = Clock::now();
    (void)detect(net.graph, seed);  // warmup, also the rep-count estimate
    const double estimate_ms = std::max(ms_since(t), 1e-3);
    const auto reps = static_cast<std::uint32_t>(
        std::clamp(std::ceil(150.0 / estimate_ms), 3.0, 25.0));

    double best_ms = estimate_ms;
    for (std::uint32_t i = 0; i < reps; ++i) {
      t = Clock::now();
      (void)detect(net.graph, seed);
      best_ms = std::min(best_ms, ms_since(t));
    }
    report.points.push_back(
        ScalingPoint{size, net.graph.edge_count(), reps, best_ms});
  }

  double mx = 0.0, my = 0.0;
  for (const auto& p : report.points) {
    mx += std::log(static_cast<double>(p.nodes) * static_cast<double>(p.edges));
    my += std::log(std::max(p.best_ms, 1e-6));
  }
  mx /= static_cast<double>(report.points.size());
  my /= static_cast<double>(report.points.size());
  double num = 0.0, den = 0.0;
  for (const auto& p : report.points) {
    const double dx =
        std::log(static_cast<double>(p.nodes) * static_cast<double>(p.edges)) - mx;
    const double dy = std::log(std::max(p.best_ms, 1e-6)) - my;
    num += dx * dy;
    den += dx * dx;
  }
  if (den == 0.0) throw std::invalid_argument("need at least two distinct sizes");
  report.slope = num / den;
  return report;
}

}  // namespace cascode
