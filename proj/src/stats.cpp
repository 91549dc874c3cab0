#include "abfold/stats.hpp"

#include "abfold/errors.hpp"
#include "abfold/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <fmt/core.h>

namespace abfold {

namespace {

double mean_of(const std::vector<double>& v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::optional<double> sample_std(const std::vector<double>& v, double mean)
{
    if (v.size() < 2) {
        return std::nullopt;
    }
    double ss = 0.0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::optional<double> share(double first, double second)
{
    const double total = first + second;
    if (!(total > 0.0)) {
        return std::nullopt;
    }
    return first / total;
}

} // namespace

AggregateStats aggregate(std::span<const RunRecord> records, std::optional<double> target)
{
    if (records.empty()) {
        throw DomainError("cannot aggregate an empty set of runs");
    }
    AggregateStats s;
    s.target = target;
    s.n_runs = records.size();

    std::vector<double> scores;
    std::vector<double> nse_success;
    double time_sum = 0.0;
    double nse1 = 0.0;
    double nse2 = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    for (const RunRecord& r : records) {
        scores.push_back(r.score);
        const bool ok = target ? r.score >= *target - kTargetTolerance : r.success;
        if (ok) {
            nse_success.push_back(static_cast<double>(r.nse));
        }
        time_sum += r.time;
        nse1 += static_cast<double>(r.nse_phase1);
        nse2 += static_cast<double>(r.nse_phase2);
        t1 += r.time_phase1;
        t2 += r.time_phase2;
    }

    s.n_success = nse_success.size();
    s.success_ratio = static_cast<double>(s.n_success) / static_cast<double>(s.n_runs);
    s.e_mean = mean_of(scores);
    s.e_std = sample_std(scores, s.e_mean);
    s.e_best = *std::max_element(scores.begin(), scores.end());
    if (!nse_success.empty()) {
        s.nse_mean = mean_of(nse_success);
        s.nse_std = sample_std(nse_success, *s.nse_mean);
        if (*s.nse_mean > 0.0) {
            const auto [lo, hi] = confidence_interval(*s.nse_mean, s.n_success);
            s.ci_lo = lo;
            s.ci_hi = hi;
        }
    }
    s.t_mean = time_sum / static_cast<double>(s.n_runs);
    s.nse_coef1 = share(nse1, nse2);
    s.t_coef1 = share(t1, t2);
    return s;
}

std::pair<double, double> confidence_interval(double nse_mean, std::size_t n_runs)
{
    if (n_runs == 0) {
        throw DomainError("confidence interval needs at least one run");
    }
    const double half = 1.96 / std::sqrt(static_cast<double>(n_runs));
    return {(1.0 - half) * nse_mean, (1.0 + half) * nse_mean};
}

namespace {

// Mid-ranks doubled so that they are integers.
std::vector<std::int64_t> doubled_ranks(const std::vector<double>& pooled,
                                        std::vector<std::size_t>& tie_sizes)
{
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
    std::vector<std::int64_t> ranks(n);
    std::size_t k = 0;
    while (k < n) {
        std::size_t end = k + 1;
        while (end < n && pooled[order[end]] == pooled[order[k]]) {
            ++end;
        }
        // Positions k..end-1 hold ranks k+1..end; their mean doubled is k+1+end.
        const auto r2 = static_cast<std::int64_t>(k + 1 + end);
        for (std::size_t m = k; m < end; ++m) {
            ranks[order[m]] = r2;
        }
        tie_sizes.push_back(end - k);
        k = end;
    }
    return ranks;
}

double exact_two_sided(const std::vector<std::int64_t>& ranks, std::size_t n1,
                       std::int64_t observed)
{
    const std::size_t n = ranks.size();
    const auto total = std::accumulate(ranks.begin(), ranks.end(), std::int64_t{0});
    const auto max_sum = static_cast<std::size_t>(total);
    // ways[k][s]: subsets of size k with doubled rank sum s.
    std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(max_sum + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t item = 0; item < n; ++item) {
        const auto r = static_cast<std::size_t>(ranks[item]);
        for (std::size_t k = std::min(n1, item + 1); k >= 1; --k) {
            const auto& prev = ways[k - 1];
            auto& cur = ways[k];
            for (std::size_t s = max_sum; s >= r; --s) {
                cur[s] += prev[s - r];
                if (s == r) {
                    break;
                }
            }
        }
    }
    // Centre of the doubled rank-sum distribution: n1 (N + 1).
    const auto centre = static_cast<std::int64_t>(n1 * (n + 1));
    const std::int64_t dev = std::abs(observed - centre);
    double extreme = 0.0;
    double all = 0.0;
    for (std::size_t s = 0; s <= max_sum; ++s) {
        const double w = ways[n1][s];
        if (w == 0.0) {
            continue;
        }
        all += w;
        if (std::abs(static_cast<std::int64_t>(s) - centre) >= dev) {
            extreme += w;
        }
    }
    return std::min(1.0, extreme / all);
}

} // namespace

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty()) {
        throw DomainError("Mann-Whitney U needs two non-empty samples");
    }
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());

    std::vector<std::size_t> tie_sizes;
    const std::vector<std::int64_t> ranks = doubled_ranks(pooled, tie_sizes);
    const std::int64_t r_a2 = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n1),
                                              std::int64_t{0});

    MannWhitneyResult res;
    const double n1d = static_cast<double>(n1);
    const double n2d = static_cast<double>(n2);
    res.u = static_cast<double>(r_a2) / 2.0 - n1d * (n1d + 1.0) / 2.0;

    if (tie_sizes.size() == 1) {
        res.p = 1.0;
        return res;
    }
    if (n <= kMannWhitneyExactLimit) {
        res.p = exact_two_sided(ranks, n1, r_a2);
        return res;
    }

    double tie_term = 0.0;
    for (std::size_t t : tie_sizes) {
        const double td = static_cast<double>(t);
        tie_term += td * td * td - td;
    }
    const double nd = static_cast<double>(n);
    const double variance = n1d * n2d / 12.0 * ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));
    if (!(variance > 0.0)) {
        res.p = 1.0;
        return res;
    }
    const double z = std::max(0.0, std::abs(res.u - n1d * n2d / 2.0) - 0.5) / std::sqrt(variance);
    res.p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return res;
}

RankingTable rank_settings(const std::vector<std::vector<std::optional<double>>>& nse_means)
{
    if (nse_means.empty() || nse_means.front().empty()) {
        throw DomainError("ranking needs at least one setting and one sequence");
    }
    const std::size_t settings = nse_means.size();
    const std::size_t sequences = nse_means.front().size();
    for (const auto& row : nse_means) {
        if (row.size() != sequences) {
            throw DomainError("every setting needs one value per sequence");
        }
    }

    RankingTable table;
    table.ranks.assign(settings, std::vector<std::size_t>(sequences, 0));
    table.mean_rank.assign(settings, 0.0);
    for (std::size_t q = 0; q < sequences; ++q) {
        std::size_t present = 0;
        for (std::size_t s = 0; s < settings; ++s) {
            present += nse_means[s][q].has_value() ? 1 : 0;
        }
        for (std::size_t s = 0; s < settings; ++s) {
            const auto& v = nse_means[s][q];
            if (!v) {
                table.ranks[s][q] = present + 1;
                continue;
            }
            std::size_t better = 0;
            for (std::size_t o = 0; o < settings; ++o) {
                if (nse_means[o][q] && *nse_means[o][q] < *v) {
                    ++better;
                }
            }
            table.ranks[s][q] = better + 1;
        }
    }
    for (std::size_t s = 0; s < settings; ++s) {
        double sum = 0.0;
        for (std::size_t r : table.ranks[s]) {
            sum += static_cast<double>(r);
        }
        table.mean_rank[s] = sum / static_cast<double>(sequences);
    }
    return table;
}

} // namespace abfold
