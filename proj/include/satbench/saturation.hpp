#pragma once

#include <string>
#include <vector>

#include "satbench/domain.hpp"

namespace satbench {

// Eq.-level pieces of the saturation chain. All pure; all binary64 with no
// intermediate rounding.

// n^alpha, the effective test set size.
double effective_sample_size(long long n, double alpha);

// sqrt(s(1-s)/n_eff), the standard error of one score.
double score_standard_error(double s, double n_eff);

// sqrt(s1(1-s1)/n_eff + sk(1-sk)/n_eff), the standard error of s1 - sk.
double difference_standard_error(double s1, double sk, double n_eff);

// delta <= z * se_delta; with se_delta = 0 only delta = 0 qualifies.
bool is_statistically_similar(double delta, double se_delta, double z);

// delta / se_delta. Degenerate cases: 0/0 -> 0, positive/0 -> +infinity.
double normalized_range(double delta, double se_delta);

// exp(-r_norm^2); +infinity maps to 0.
double saturation_index(double r_norm);

// Five-bin classification with boundaries 0.01 / 0.3 / 0.7 / 0.9.
BucketLabel classify_bucket(double s_index);

// Full chain for one snapshot. Throws InsufficientDataError when the
// leaderboard has fewer than config.k entries (k is never silently reduced).
SaturationResult compute_saturation(const LeaderboardSnapshot& snapshot,
                                    const SaturationConfig& config);

// Corpus-level driver. Snapshots with fewer than k entries are excluded,
// never dropped silently. Results come back sorted by canonical benchmark id
// regardless of scheduling.
struct SaturationExclusion {
    std::string benchmark_id;
    std::string reason;
};

struct SaturationRun {
    std::vector<SaturationResult> results;        // canonical id order
    std::vector<SaturationExclusion> exclusions;  // canonical id order
};

// OpenMP kernel: benchmarks are independent, so the per-snapshot chain runs
// in parallel. Output is identical to run_saturation_serial for any thread
// count.
SaturationRun run_saturation(const std::vector<LeaderboardSnapshot>& snapshots,
                             const SaturationConfig& config);

// Serial reference implementation, kept for testing and benchmarking.
SaturationRun run_saturation_serial(const std::vector<LeaderboardSnapshot>& snapshots,
                                    const SaturationConfig& config);

}  // namespace satbench
