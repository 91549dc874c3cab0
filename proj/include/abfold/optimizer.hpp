#pragma once

// Two-phase differential evolution for the AB model.
//
// Phase 1 minimizes the auxiliary energy E_x (compact hydrophobic core), phase
// 2 minimizes E_o and adds a local search around the population best. Long
// stagnation in phase 2 triggers a component reinitialization around the local
// best (back to phase 1); repeated fruitless component reinitializations
// trigger a full random restart.

#include "abfold/model.hpp"
#include "abfold/rng.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace abfold {

/// Which vector DE/best/1/bin and temporal locality build on.
enum class BaseVector {
    PopulationBest,
    GlobalBest,
};

struct StoppingCondition {
    std::optional<double> target_score;   ///< stop once -E_o >= target - 1e-4
    std::optional<std::uint64_t> nse_limit;
    std::optional<double> time_limit;     ///< seconds of wall time

    bool bounded() const { return target_score || nse_limit || time_limit; }
};

inline constexpr double kTargetTolerance = 1e-4;

struct OptimizerConfig {
    std::size_t np = 100;
    double p_b = 20.0;
    double l_b = 20.0;
    std::size_t c = 10;
    double h_c = 35.0;
    double lambda = 1000.0;
    StoppingCondition stopping;
    std::uint64_t seed = 1;
    BaseVector base = BaseVector::PopulationBest;

    /// Throws ConfigError when the settings cannot drive a run on a problem of
    /// the given dimension.
    void validate(std::size_t dimension) const;
};

struct Individual {
    Conformation conformation;
    double f = 0.5;
    double cr = 0.9;
    double fitness = std::numeric_limits<double>::infinity();
    bool auxiliary = true; ///< fitness holds E_x rather than E_o
    PositionChain chain;
    EnergyBreakdown energy;
};

struct BestEntry {
    Conformation conformation;
    double fitness = std::numeric_limits<double>::infinity();
    bool auxiliary = true;
};

struct TraceEvent {
    std::uint64_t nse = 0;
    int phase = 1;
    double best_fitness = 0.0;
    std::optional<double> best_score;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct RunResult {
    Conformation best_conformation; ///< lowest E_o seen in any evaluation
    double best_score = -std::numeric_limits<double>::infinity();
    bool success = false;
    std::uint64_t nse_total = 0;
    std::optional<std::uint64_t> nse_at_success;
    double wall_time = 0.0;
    std::uint64_t nse_phase1 = 0;
    std::uint64_t nse_phase2 = 0;
    double time_phase1 = 0.0;
    double time_phase2 = 0.0;
    std::vector<TraceEvent> trace;
    std::uint64_t generations = 0;
    std::uint64_t phase_switches = 0;
    std::uint64_t component_reinits = 0;
    std::uint64_t random_reinits = 0;
};

/// Self-adaptive control parameters: each of F and Cr is regenerated with
/// probability 0.1 (F in [0.1, 1), Cr in [0, 1)), otherwise inherited.
template <UniformSource R>
std::pair<double, double> jde_parameters(double f, double cr, R& rng)
{
    if (rng.uniform() < 0.1) {
        f = 0.1 + 0.9 * rng.uniform();
    }
    if (rng.uniform() < 0.1) {
        cr = rng.uniform();
    }
    return {f, cr};
}

/// Two donor indices r1 != i and r2 not in {i, r1}. Requires np >= 3.
std::pair<std::size_t, std::size_t> draw_donors(std::size_t np, std::size_t i, Rng& rng);

/// DE/best/1/bin crossover of `base + F (r1 - r2)` into `xi`.
void de_trial(const Conformation& base, const Conformation& xi, const Conformation& r1,
              const Conformation& r2, double f, double cr, Rng& rng, Conformation& out);

/// Draws the donors from `pop` and builds the trial for individual i.
Conformation de_trial(const std::vector<Individual>& pop, const Conformation& base,
                      std::size_t i, double f, double cr, Rng& rng);

/// u* = wrap(base + 0.5 (u - xi)), componentwise.
void temporal_locality_trial(const Conformation& base, const Conformation& u,
                             const Conformation& xi, Conformation& out);
Conformation temporal_locality_trial(const Conformation& base, const Conformation& u,
                                     const Conformation& xi);

/// Copy of `local_best` with `c` distinct components redrawn uniformly.
Conformation component_reinit(const Conformation& local_best, std::size_t c, Rng& rng);

Conformation random_conformation(std::size_t dimension, Rng& rng);

/// Index of the lowest fitness; the lowest index wins ties.
std::size_t best_index(const std::vector<Individual>& pop);

class TwoPhaseOptimizer {
public:
    TwoPhaseOptimizer(const AbSequence& seq, OptimizerConfig cfg, TraceSink sink = {});

    /// Random population, first phase, all three bests set. Counts Np evaluations.
    void initialize();

    /// One pass over the population followed by the reinitialization step.
    /// Returns early if the stopping condition fires mid-generation.
    void generation();

    /// Runs initialize() and generations until the stopping condition holds.
    RunResult run();

    bool finished() const { return stopped_; }
    RunResult result() const;

    const AbSequence& sequence() const { return seq_; }
    const OptimizerConfig& config() const { return cfg_; }
    const std::vector<Individual>& population() const { return pop_; }
    std::size_t population_best_index() const { return best_slot_; }
    const BestEntry& global_best() const { return global_; }
    const BestEntry& local_best() const { return local_; }
    bool first_phase() const { return first_phase_; }
    std::uint64_t nse() const { return nse_phase_[0] + nse_phase_[1]; }
    std::uint64_t nse_phase1() const { return nse_phase_[0]; }
    std::uint64_t nse_phase2() const { return nse_phase_[1]; }
    /// Evaluations spent in phase 1 (index 0) or phase 2 (index 1) since the
    /// local best last improved.
    std::uint64_t stagnant_evaluations(int phase) const { return stagnant_evals_[phase - 1]; }
    std::uint64_t stagnant_component_reinits() const { return stagnant_reinits_; }
    std::uint64_t accepted_trials() const { return accepted_trials_; }
    std::uint64_t local_moves_evaluated() const { return local_moves_; }
    std::uint64_t local_moves_accepted() const { return local_moves_accepted_; }
    std::uint64_t component_reinits() const { return component_reinits_; }
    std::uint64_t random_reinits() const { return random_reinits_; }
    std::uint64_t phase_switches() const { return phase_switches_; }
    const std::vector<TraceEvent>& trace() const { return trace_; }

    /// Lets tests start from a crafted state.
    std::vector<Individual>& mutable_population() { return pop_; }
    void set_first_phase(bool first) { first_phase_ = first; }
    void refresh_bests();

private:
    double evaluate(const Conformation& conf, bool auxiliary, PositionChain& chain,
                    EnergyBreakdown& energy);
    void note_original_energy(const Conformation& conf, double e_o);
    void count_evaluation();
    void stop();
    void local_search(std::size_t i);
    void reinitialize_step();
    void reevaluate_population();
    void record_trace_if_improved();
    void switch_phase(bool first);
    void reset_stagnation();
    const Conformation& base_vector() const;

    AbSequence seq_;
    OptimizerConfig cfg_;
    TraceSink sink_;
    Rng rng_;
    std::size_t dimension_;

    std::vector<Individual> pop_;
    std::size_t best_slot_ = 0;
    BestEntry global_;
    BestEntry local_;

    bool first_phase_ = true;
    std::uint64_t nse_phase_[2] = {0, 0};
    double time_phase_[2] = {0.0, 0.0};
    std::chrono::steady_clock::time_point start_;
    std::chrono::steady_clock::time_point phase_start_;
    std::chrono::steady_clock::time_point end_;
    std::uint64_t stagnant_evals_[2] = {0, 0};
    std::uint64_t stagnant_reinits_ = 0;

    std::uint64_t generations_ = 0;
    std::uint64_t accepted_trials_ = 0;
    std::uint64_t local_moves_ = 0;
    std::uint64_t local_moves_accepted_ = 0;
    std::uint64_t component_reinits_ = 0;
    std::uint64_t random_reinits_ = 0;
    std::uint64_t phase_switches_ = 0;

    double best_e_o_ = std::numeric_limits<double>::infinity();
    Conformation best_conformation_;
    std::optional<std::uint64_t> nse_at_success_;
    bool stopped_ = false;

    double trace_reference_ = std::numeric_limits<double>::infinity();
    std::vector<TraceEvent> trace_;

    // Scratch buffers reused across trials.
    Individual trial_;
    Individual second_;
    LocalMoveOutcome move_;
};

/// Convenience wrapper: one seeded run.
RunResult optimize(const AbSequence& seq, const OptimizerConfig& cfg, TraceSink sink = {});

} // namespace abfold
