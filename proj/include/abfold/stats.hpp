#pragma once

// Summary statistics over batches of runs and the comparison tools used to
// rank parameter settings.

#include "abfold/benchmark.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace abfold {

struct AggregateStats {
    std::size_t n_runs = 0;
    std::size_t n_success = 0;
    double success_ratio = 0.0;
    double e_mean = 0.0;
    std::optional<double> e_std; ///< absent for a single run
    double e_best = 0.0;
    std::optional<double> nse_mean; ///< over successful runs only
    std::optional<double> nse_std;
    double t_mean = 0.0;
    std::optional<double> ci_lo;
    std::optional<double> ci_hi;
    std::optional<double> nse_coef1; ///< share of evaluations spent in the first phase
    std::optional<double> t_coef1;
    std::optional<double> target;
};

/// Throws DomainError on an empty record list. With a target, a run counts as
/// successful when its score reaches target - 1e-4; otherwise the record's own
/// flag is used.
AggregateStats aggregate(std::span<const RunRecord> records, std::optional<double> target);

/// 95% rule-of-thumb interval (1 -/+ 1.96 / sqrt(n)) * mean.
std::pair<double, double> confidence_interval(double nse_mean, std::size_t n_runs);

struct MannWhitneyResult {
    double u = 0.0; ///< U statistic of the first sample
    double p = 1.0; ///< two-sided
};

/// Rank-sum test with mid-ranks for ties. Up to kMannWhitneyExactLimit
/// observations in total the p-value comes from the exact permutation
/// distribution (conditional on the ties); above that, from the normal
/// approximation with continuity and tie correction.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

inline constexpr std::size_t kMannWhitneyExactLimit = 50;

struct RankingTable {
    /// ranks[setting][sequence], competition ranking (1, 2, 2, 4).
    std::vector<std::vector<std::size_t>> ranks;
    std::vector<double> mean_rank;
};

/// Ranks settings per sequence by ascending mean NSE. Absent means (target
/// never reached) share the rank after the last present value.
RankingTable rank_settings(const std::vector<std::vector<std::optional<double>>>& nse_means);

} // namespace abfold
