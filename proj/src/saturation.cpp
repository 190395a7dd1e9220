#include "satbench/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace satbench {

double effective_sample_size(long long n, double alpha) {
    if (n < 1) throw RangeError("test set size must be >= 1, got " + std::to_string(n));
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw RangeError("alpha must be in [0,1], got " + std::to_string(alpha));
    return std::pow(static_cast<double>(n), alpha);
}

double score_standard_error(double s, double n_eff) {
    if (!(s >= 0.0 && s <= 1.0))
        throw RangeError("score must be in [0,1], got " + std::to_string(s));
    if (!(n_eff > 0.0)) throw RangeError("n_eff must be > 0, got " + std::to_string(n_eff));
    return std::sqrt(s * (1.0 - s) / n_eff);
}

double difference_standard_error(double s1, double sk, double n_eff) {
    if (!(s1 >= 0.0 && s1 <= 1.0))
        throw RangeError("s1 must be in [0,1], got " + std::to_string(s1));
    if (!(sk >= 0.0 && sk <= 1.0))
        throw RangeError("sk must be in [0,1], got " + std::to_string(sk));
    if (!(n_eff > 0.0)) throw RangeError("n_eff must be > 0, got " + std::to_string(n_eff));
    return std::sqrt(s1 * (1.0 - s1) / n_eff + sk * (1.0 - sk) / n_eff);
}

bool is_statistically_similar(double delta, double se_delta, double z) {
    if (se_delta == 0.0) return delta == 0.0;
    return delta <= z * se_delta;
}

double normalized_range(double delta, double se_delta) {
    if (delta < 0.0) throw RangeError("delta must be >= 0, got " + std::to_string(delta));
    if (se_delta < 0.0) throw RangeError("se_delta must be >= 0, got " + std::to_string(se_delta));
    if (se_delta == 0.0) {
        return delta == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return delta / se_delta;
}

double saturation_index(double r_norm) {
    if (std::isinf(r_norm)) return 0.0;
    if (!(r_norm >= 0.0)) throw RangeError("r_norm must be >= 0, got " + std::to_string(r_norm));
    return std::exp(-r_norm * r_norm);
}

BucketLabel classify_bucket(double s_index) {
    if (!(s_index >= 0.0 && s_index <= 1.0))
        throw RangeError("s_index must be in [0,1], got " + std::to_string(s_index));
    if (s_index < 0.01) return BucketLabel::VeryLow;
    if (s_index < 0.3) return BucketLabel::Low;
    if (s_index < 0.7) return BucketLabel::Moderate;
    if (s_index < 0.9) return BucketLabel::High;
    return BucketLabel::VeryHigh;
}

SaturationResult compute_saturation(const LeaderboardSnapshot& snapshot,
                                    const SaturationConfig& config) {
    config.validate();
    if (snapshot.test_set_size < 1)
        throw MissingFieldError("snapshot '" + snapshot.benchmark_id +
                                "' is missing a test_set_size >= 1");
    const int found = static_cast<int>(snapshot.entries.size());
    if (found < config.k)
        throw InsufficientDataError("snapshot '" + snapshot.benchmark_id +
                                        "' has insufficient entries: " + std::to_string(found) +
                                        " < " + std::to_string(config.k),
                                    found, config.k);

    SaturationResult r;
    r.benchmark_id = snapshot.benchmark_id;
    r.config = config;
    r.s1 = snapshot.entries.front().score;
    r.sk = snapshot.entries[static_cast<size_t>(config.k) - 1].score;
    r.delta = r.s1 - r.sk;
    r.n_eff = effective_sample_size(snapshot.test_set_size, config.alpha);
    r.se_delta = difference_standard_error(r.s1, r.sk, r.n_eff);
    r.r_norm = normalized_range(r.delta, r.se_delta);
    r.s_index = saturation_index(r.r_norm);
    r.bucket = classify_bucket(r.s_index);
    // Similarity via r_norm so the exp(-z^2) threshold identity is exact.
    r.statistically_similar = std::isinf(r.r_norm) ? false : r.r_norm <= config.z;
    return r;
}

namespace {

// Shared by both drivers: evaluate each snapshot into a result or an
// exclusion slot, then merge in canonical id order.
struct SlotOutcome {
    bool ok = false;
    SaturationResult result;
    std::string reason;
};

SaturationRun assemble(const std::vector<LeaderboardSnapshot>& snapshots,
                       std::vector<SlotOutcome>& slots) {
    std::vector<size_t> order(snapshots.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return canonical_id(snapshots[a].benchmark_id) < canonical_id(snapshots[b].benchmark_id);
    });
    SaturationRun run;
    for (size_t i : order) {
        if (slots[i].ok) {
            run.results.push_back(std::move(slots[i].result));
        } else {
            run.exclusions.push_back({snapshots[i].benchmark_id, slots[i].reason});
        }
    }
    return run;
}

SlotOutcome evaluate(const LeaderboardSnapshot& snapshot, const SaturationConfig& config) {
    SlotOutcome out;
    try {
        out.result = compute_saturation(snapshot, config);
        out.ok = true;
    } catch (const InsufficientDataError& e) {
        out.reason = "insufficient entries: " + std::to_string(e.found()) + " < " +
                     std::to_string(e.required());
    }
    return out;
}

}  // namespace

SaturationRun run_saturation(const std::vector<LeaderboardSnapshot>& snapshots,
                             const SaturationConfig& config) {
    config.validate();
    std::vector<SlotOutcome> slots(snapshots.size());
    const long long count = static_cast<long long>(snapshots.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        slots[static_cast<size_t>(i)] = evaluate(snapshots[static_cast<size_t>(i)], config);
    }
    return assemble(snapshots, slots);
}

SaturationRun run_saturation_serial(const std::vector<LeaderboardSnapshot>& snapshots,
                                    const SaturationConfig& config) {
    config.validate();
    std::vector<SlotOutcome> slots(snapshots.size());
    for (size_t i = 0; i < snapshots.size(); ++i) {
        slots[i] = evaluate(snapshots[i], config);
    }
    return assemble(snapshots, slots);
}

}  // namespace satbench
