#pragma once

// Built-in problem instances and the batch runner.

#include "abfold/model.hpp"
#include "abfold/optimizer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abfold {

struct BenchmarkEntry {
    std::string label;
    AbSequence sequence;
    std::optional<double> target_score;
    std::optional<double> best_known_score;
    std::optional<Conformation> reference_conformation; ///< radians

    std::size_t length() const { return sequence.length(); }
    std::size_t dimension() const { return sequence.dimension(); }
};

/// The 18 PDB-derived and 5 Fibonacci sequences, in table order.
const std::vector<BenchmarkEntry>& builtin_benchmarks();

/// Case-insensitive lookup; nullptr when the label is unknown.
const BenchmarkEntry* find_builtin(std::string_view label);

struct RunRecord {
    std::string label;
    std::uint64_t seed = 0;
    double score = 0.0;
    std::uint64_t nse = 0;
    double time = 0.0;
    bool success = false;
    std::uint64_t nse_phase1 = 0;
    std::uint64_t nse_phase2 = 0;
    double time_phase1 = 0.0;
    double time_phase2 = 0.0;
};

RunRecord make_record(std::string label, std::uint64_t seed, const RunResult& result);

/// Runs `n_runs` independent optimizations of `seq`. Run k uses the seed
/// derive_seed(base_seed, k); cfg.seed is ignored. Records come back in run
/// order whatever `max_parallel` is.
std::vector<RunRecord> run_batch(const AbSequence& seq, const std::string& label,
                                 const OptimizerConfig& cfg, std::size_t n_runs,
                                 std::uint64_t base_seed, std::size_t max_parallel);

std::vector<RunRecord> run_batch(const BenchmarkEntry& entry, const OptimizerConfig& cfg,
                                 std::size_t n_runs, std::uint64_t base_seed,
                                 std::size_t max_parallel);

} // namespace abfold
