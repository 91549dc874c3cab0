#include "abfold/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace abfold {

RunRecord make_record(std::string label, std::uint64_t seed, const RunResult& result)
{
    RunRecord r;
    r.label = std::move(label);
    r.seed = seed;
    r.score = result.best_score;
    r.nse = result.success ? *result.nse_at_success : result.nse_total;
    r.time = result.wall_time;
    r.success = result.success;
    r.nse_phase1 = result.nse_phase1;
    r.nse_phase2 = result.nse_phase2;
    r.time_phase1 = result.time_phase1;
    r.time_phase2 = result.time_phase2;
    return r;
}

std::vector<RunRecord> run_batch(const AbSequence& seq, const std::string& label,
                                 const OptimizerConfig& cfg, std::size_t n_runs,
                                 std::uint64_t base_seed, std::size_t max_parallel)
{
    cfg.validate(seq.dimension());
    std::vector<RunRecord> records(n_runs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= n_runs) {
                return;
            }
            try {
                OptimizerConfig run_cfg = cfg;
                run_cfg.seed = derive_seed(base_seed, k);
                records[k] = make_record(label, run_cfg.seed, optimize(seq, run_cfg));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(n_runs);
                return;
            }
        }
    };

    const std::size_t threads = std::clamp<std::size_t>(max_parallel, 1, std::max<std::size_t>(n_runs, 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

std::vector<RunRecord> run_batch(const BenchmarkEntry& entry, const OptimizerConfig& cfg,
                                 std::size_t n_runs, std::uint64_t base_seed,
                                 std::size_t max_parallel)
{
    return run_batch(entry.sequence, entry.label, cfg, n_runs, base_seed, max_parallel);
}

} // namespace abfold
