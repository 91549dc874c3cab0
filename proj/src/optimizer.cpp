#include "abfold/optimizer.hpp"

#include "abfold/errors.hpp"

#include <cmath>
#include <numeric>

#include <fmt/core.h>

namespace abfold {

void OptimizerConfig::validate(std::size_t dimension) const
{
    if (np < 4) {
        throw ConfigError(fmt::format("population size must be at least 4, got {}", np));
    }
    if (c > dimension) {
        throw ConfigError(
            fmt::format("C = {} exceeds the problem dimension {}", c, dimension));
    }
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(p_b) || !positive(l_b) || !positive(h_c)) {
        throw ConfigError("P_b, L_b and H_c must be positive");
    }
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw ConfigError(fmt::format("lambda must be a non-negative number, got {}", lambda));
    }
    if (!stopping.bounded()) {
        throw ConfigError("no stopping condition given (target, NSE limit or time limit)");
    }
    if (stopping.target_score && !std::isfinite(*stopping.target_score)) {
        throw ConfigError("target score must be finite");
    }
    if (stopping.nse_limit && *stopping.nse_limit == 0) {
        throw ConfigError("NSE limit must be positive");
    }
    if (stopping.time_limit && !positive(*stopping.time_limit)) {
        throw ConfigError("time limit must be positive");
    }
}

std::pair<std::size_t, std::size_t> draw_donors(std::size_t np, std::size_t i, Rng& rng)
{
    if (np < 3) {
        throw ConfigError(fmt::format("cannot draw two donors from a population of {}", np));
    }
    std::size_t r1 = 0;
    do {
        r1 = rng.below(np);
    } while (r1 == i);
    std::size_t r2 = 0;
    do {
        r2 = rng.below(np);
    } while (r2 == i || r2 == r1);
    return {r1, r2};
}

void de_trial(const Conformation& base, const Conformation& xi, const Conformation& r1,
              const Conformation& r2, double f, double cr, Rng& rng, Conformation& out)
{
    const std::size_t d = xi.dimension();
    out.angles.resize(d);
    const std::size_t j_rand = rng.below(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double r = rng.uniform();
        if (r < cr || j == j_rand) {
            out.angles[j] = wrap_angle(base.angles[j] + f * (r1.angles[j] - r2.angles[j]));
        } else {
            out.angles[j] = xi.angles[j];
        }
    }
}

Conformation de_trial(const std::vector<Individual>& pop, const Conformation& base,
                      std::size_t i, double f, double cr, Rng& rng)
{
    const auto [r1, r2] = draw_donors(pop.size(), i, rng);
    Conformation out;
    de_trial(base, pop[i].conformation, pop[r1].conformation, pop[r2].conformation, f, cr, rng,
             out);
    return out;
}

void temporal_locality_trial(const Conformation& base, const Conformation& u,
                             const Conformation& xi, Conformation& out)
{
    const std::size_t d = u.dimension();
    out.angles.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        out.angles[j] = wrap_angle(base.angles[j] + 0.5 * (u.angles[j] - xi.angles[j]));
    }
}

Conformation temporal_locality_trial(const Conformation& base, const Conformation& u,
                                     const Conformation& xi)
{
    Conformation out;
    temporal_locality_trial(base, u, xi, out);
    return out;
}

Conformation component_reinit(const Conformation& local_best, std::size_t c, Rng& rng)
{
    const std::size_t d = local_best.dimension();
    if (c > d) {
        throw DomainError(fmt::format("cannot redraw {} of {} components", c, d));
    }
    Conformation out = local_best;
    std::vector<std::size_t> index(d);
    std::iota(index.begin(), index.end(), std::size_t{0});
    for (std::size_t k = 0; k < c; ++k) {
        std::swap(index[k], index[k + rng.below(d - k)]);
        out.angles[index[k]] = rng.angle();
    }
    return out;
}

Conformation random_conformation(std::size_t dimension, Rng& rng)
{
    Conformation out;
    out.angles.resize(dimension);
    for (double& a : out.angles) {
        a = rng.angle();
    }
    return out;
}

std::size_t best_index(const std::vector<Individual>& pop)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].fitness < pop[best].fitness) {
            best = i;
        }
    }
    return best;
}

namespace {

double seconds_between(std::chrono::steady_clock::time_point a,
                       std::chrono::steady_clock::time_point b)
{
    return std::chrono::duration<double>(b - a).count();
}

void adopt(Individual& slot, Individual& from)
{
    std::swap(slot.conformation, from.conformation);
    std::swap(slot.chain, from.chain);
    std::swap(slot.energy, from.energy);
    slot.fitness = from.fitness;
    slot.auxiliary = from.auxiliary;
}

} // namespace

TwoPhaseOptimizer::TwoPhaseOptimizer(const AbSequence& seq, OptimizerConfig cfg, TraceSink sink)
    : seq_(seq), cfg_(std::move(cfg)), sink_(std::move(sink)), rng_(cfg_.seed),
      dimension_(seq.dimension())
{
    cfg_.validate(dimension_);
}

void TwoPhaseOptimizer::count_evaluation()
{
    ++nse_phase_[first_phase_ ? 0 : 1];
    ++stagnant_evals_[first_phase_ ? 0 : 1];
    if (cfg_.stopping.nse_limit && nse() >= *cfg_.stopping.nse_limit) {
        stop();
    } else if (cfg_.stopping.time_limit
               && seconds_between(start_, std::chrono::steady_clock::now())
                      >= *cfg_.stopping.time_limit) {
        stop();
    }
}

void TwoPhaseOptimizer::stop()
{
    if (!stopped_) {
        stopped_ = true;
        end_ = std::chrono::steady_clock::now();
    }
}

void TwoPhaseOptimizer::note_original_energy(const Conformation& conf, double e_o)
{
    if (e_o < best_e_o_) {
        best_e_o_ = e_o;
        best_conformation_ = conf;
        const auto& target = cfg_.stopping.target_score;
        if (target && !nse_at_success_ && -e_o >= *target - kTargetTolerance) {
            nse_at_success_ = nse();
            stop();
        }
    }
}

double TwoPhaseOptimizer::evaluate(const Conformation& conf, bool auxiliary, PositionChain& chain,
                               EnergyBreakdown& energy)
{
    compute_positions(conf, chain);
    energy = energy_original(seq_, conf, chain);
    if (auxiliary) {
        add_auxiliary_terms(seq_, chain, cfg_.lambda, energy);
    }
    count_evaluation();
    note_original_energy(conf, energy.e_o);
    return auxiliary ? energy.aux->e_x : energy.e_o;
}

void TwoPhaseOptimizer::initialize()
{
    start_ = std::chrono::steady_clock::now();
    phase_start_ = start_;
    first_phase_ = true;
    pop_.assign(cfg_.np, Individual{});
    for (Individual& ind : pop_) {
        ind.conformation = random_conformation(dimension_, rng_);
        ind.auxiliary = true;
        if (!stopped_) {
            ind.fitness = evaluate(ind.conformation, true, ind.chain, ind.energy);
        }
    }
    refresh_bests();
    reset_stagnation();
    record_trace_if_improved();
}

void TwoPhaseOptimizer::refresh_bests()
{
    best_slot_ = best_index(pop_);
    const Individual& b = pop_[best_slot_];
    global_ = {b.conformation, b.fitness, b.auxiliary};
    local_ = global_;
}

const Conformation& TwoPhaseOptimizer::base_vector() const
{
    if (cfg_.base == BaseVector::GlobalBest) {
        return global_.conformation;
    }
    return pop_[best_slot_].conformation;
}

void TwoPhaseOptimizer::generation()
{
    if (stopped_) {
        return;
    }
    const bool auxiliary = first_phase_;
    for (std::size_t i = 0; i < pop_.size(); ++i) {
        Individual& x = pop_[i];
        const auto [f, cr] = jde_parameters(x.f, x.cr, rng_);
        const Conformation& base = base_vector();
        const auto [r1, r2] = draw_donors(pop_.size(), i, rng_);
        de_trial(base, x.conformation, pop_[r1].conformation, pop_[r2].conformation, f, cr, rng_,
                 trial_.conformation);
        trial_.fitness = evaluate(trial_.conformation, auxiliary, trial_.chain, trial_.energy);
        trial_.auxiliary = auxiliary;
        if (stopped_) {
            return;
        }
        if (trial_.fitness > x.fitness) {
            continue;
        }

        temporal_locality_trial(base, trial_.conformation, x.conformation, second_.conformation);
        second_.fitness = evaluate(second_.conformation, auxiliary, second_.chain, second_.energy);
        second_.auxiliary = auxiliary;
        adopt(x, second_.fitness <= trial_.fitness ? second_ : trial_);
        x.f = f;
        x.cr = cr;
        ++accepted_trials_;
        if (stopped_) {
            return;
        }
        if (!auxiliary) {
            local_search(i);
            if (stopped_) {
                return;
            }
        }
    }

    ++generations_;
    best_slot_ = best_index(pop_);
    const Individual& pb = pop_[best_slot_];
    if (pb.fitness <= global_.fitness) {
        global_ = {pb.conformation, pb.fitness, pb.auxiliary};
    }
    record_trace_if_improved();
    reinitialize_step();
}

void TwoPhaseOptimizer::local_search(std::size_t i)
{
    Individual& best = pop_[best_slot_];
    const Conformation& xi = pop_[i].conformation;
    const std::size_t length = seq_.length();
    for (std::size_t pivot = 1; pivot + 1 < length; ++pivot) {
        const double d_theta =
            rng_.uniform() * (best.conformation.theta(pivot - 1) - xi.theta(pivot - 1));
        double d_beta = 0.0;
        if (pivot >= 2) {
            d_beta = rng_.uniform() * (best.conformation.beta(pivot - 2) - xi.beta(pivot - 2));
        }
        if (!local_movement(seq_, best.conformation, best.chain, best.energy, pivot, d_theta,
                            d_beta, move_)) {
            continue;
        }
        ++local_moves_;
        count_evaluation();
        note_original_energy(move_.conformation, move_.breakdown.e_o);
        if (move_.breakdown.e_o <= best.fitness) {
            std::swap(best.conformation, move_.conformation);
            std::swap(best.chain, move_.chain);
            best.energy = move_.breakdown;
            best.fitness = move_.breakdown.e_o;
            best.auxiliary = false;
            ++local_moves_accepted_;
        }
        if (stopped_) {
            return;
        }
    }
}

void TwoPhaseOptimizer::reevaluate_population()
{
    for (Individual& ind : pop_) {
        ind.auxiliary = true;
        ind.fitness = evaluate(ind.conformation, true, ind.chain, ind.energy);
        if (stopped_) {
            return;
        }
    }
}

void TwoPhaseOptimizer::reset_stagnation()
{
    stagnant_evals_[0] = 0;
    stagnant_evals_[1] = 0;
    stagnant_reinits_ = 0;
}

void TwoPhaseOptimizer::switch_phase(bool first)
{
    if (first == first_phase_) {
        return;
    }
    const auto now = std::chrono::steady_clock::now();
    time_phase_[first_phase_ ? 0 : 1] += seconds_between(phase_start_, now);
    phase_start_ = now;
    first_phase_ = first;
    ++phase_switches_;
}

void TwoPhaseOptimizer::reinitialize_step()
{
    const double d = static_cast<double>(dimension_);
    const Individual& pb = pop_[best_slot_];
    if (pb.fitness <= local_.fitness) {
        if (pb.fitness < local_.fitness) {
            reset_stagnation();
        }
        local_ = {pb.conformation, pb.fitness, pb.auxiliary};
    }

    if (first_phase_) {
        if (static_cast<double>(stagnant_evals_[0]) >= cfg_.h_c * d) {
            switch_phase(false);
        }
    } else if (static_cast<double>(stagnant_evals_[1]) >= cfg_.p_b * d) {
        for (Individual& ind : pop_) {
            ind.conformation = component_reinit(local_.conformation, cfg_.c, rng_);
        }
        reevaluate_population();
        if (stopped_) {
            return;
        }
        best_slot_ = best_index(pop_);
        switch_phase(true);
        ++component_reinits_;
        ++stagnant_reinits_;
        trace_reference_ = std::numeric_limits<double>::infinity();
        record_trace_if_improved();
    }

    if (static_cast<double>(stagnant_reinits_) >= cfg_.l_b * d) {
        for (Individual& ind : pop_) {
            ind.conformation = random_conformation(dimension_, rng_);
            ind.f = 0.5;
            ind.cr = 0.9;
        }
        switch_phase(true);
        reevaluate_population();
        if (stopped_) {
            return;
        }
        best_slot_ = best_index(pop_);
        const Individual& b = pop_[best_slot_];
        local_ = {b.conformation, b.fitness, b.auxiliary};
        ++random_reinits_;
        reset_stagnation();
        trace_reference_ = std::numeric_limits<double>::infinity();
        record_trace_if_improved();
    }
}

void TwoPhaseOptimizer::record_trace_if_improved()
{
    const Individual& pb = pop_[best_slot_];
    if (!(pb.fitness < trace_reference_)) {
        return;
    }
    trace_reference_ = pb.fitness;
    TraceEvent ev;
    ev.nse = nse();
    ev.phase = pb.auxiliary ? 1 : 2;
    ev.best_fitness = pb.fitness;
    if (!pb.auxiliary) {
        ev.best_score = -pb.fitness;
    }
    trace_.push_back(ev);
    if (sink_) {
        sink_(ev);
    }
}

RunResult TwoPhaseOptimizer::run()
{
    if (pop_.empty()) {
        initialize();
    }
    while (!stopped_) {
        generation();
    }
    return result();
}

RunResult TwoPhaseOptimizer::result() const
{
    const auto end = stopped_ ? end_ : std::chrono::steady_clock::now();
    RunResult r;
    r.best_conformation = best_conformation_;
    r.best_score = -best_e_o_;
    r.success = nse_at_success_.has_value();
    r.nse_at_success = nse_at_success_;
    r.nse_total = nse();
    r.nse_phase1 = nse_phase_[0];
    r.nse_phase2 = nse_phase_[1];
    r.wall_time = seconds_between(start_, end);
    r.time_phase1 = time_phase_[0];
    r.time_phase2 = time_phase_[1];
    (first_phase_ ? r.time_phase1 : r.time_phase2) += seconds_between(phase_start_, end);
    r.trace = trace_;
    r.generations = generations_;
    r.phase_switches = phase_switches_;
    r.component_reinits = component_reinits_;
    r.random_reinits = random_reinits_;
    return r;
}

RunResult optimize(const AbSequence& seq, const OptimizerConfig& cfg, TraceSink sink)
{
    TwoPhaseOptimizer opt(seq, cfg, std::move(sink));
    return opt.run();
}

} // namespace abfold
