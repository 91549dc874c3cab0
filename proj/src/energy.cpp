#include "abfold/errors.hpp"
#include "abfold/model.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace abfold {

Vec3 direction_from_angles(double theta, double beta)
{
    const double cb = std::cos(beta);
    return {std::cos(theta) * cb, std::sin(theta) * cb, std::sin(beta)};
}

BondAngles angles_from_direction(const Vec3& v, double fallback_theta)
{
    const double len = norm(v);
    if (!(std::abs(len - 1.0) <= 1e-9)) {
        throw DomainError(fmt::format("direction has length {}, expected a unit vector", len));
    }
    const double beta = std::asin(std::clamp(v.z, -1.0, 1.0));
    if (std::cos(beta) > 1e-12) {
        return {wrap_angle(std::atan2(v.y, v.x)), beta};
    }
    return {fallback_theta, beta};
}

BondAngles angles_low_bend(const Vec3& v, const BondAngles& previous)
{
    if (squared_distance(v, direction_from_angles(previous.theta, previous.beta)) <= 1e-24) {
        return previous;
    }
    const BondAngles primary = angles_from_direction(v, previous.theta);
    if (std::cos(primary.theta) >= 0.0) {
        return primary;
    }
    return {wrap_angle(primary.theta + kPi), wrap_angle(kPi - primary.beta)};
}

void compute_positions(const Conformation& conf, PositionChain& out)
{
    const std::size_t n = conf.chain_length();
    out.points.resize(n);
    out.points[0] = {0.0, 0.0, 0.0};
    out.points[1] = {0.0, 1.0, 0.0};
    const double t0 = conf.theta(0);
    out.points[2] = {std::cos(t0), 1.0 + std::sin(t0), 0.0};
    for (std::size_t j = 3; j < n; ++j) {
        out.points[j] = out.points[j - 1] + direction_from_angles(conf.theta(j - 2), conf.beta(j - 3));
    }
}

PositionChain compute_positions(const Conformation& conf)
{
    PositionChain chain;
    compute_positions(conf, chain);
    return chain;
}

double pair_coefficient(MonomerClass a, MonomerClass b)
{
    if (a != b) {
        return -0.5;
    }
    return a == MonomerClass::A ? 1.0 : 0.5;
}

double backbone_bend_energy(const Conformation& conf)
{
    double sum = 0.0;
    for (std::size_t k = 0; k < conf.bond_angle_count(); ++k) {
        sum += 1.0 - std::cos(conf.theta(k));
    }
    return 0.25 * sum;
}

double lennard_jones_energy(const AbSequence& seq, const PositionChain& chain)
{
    const std::size_t n = seq.length();
    double sum = 0.0;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            sum += lennard_jones_term(pair_coefficient(seq[i], seq[j]),
                                      squared_distance(chain[i], chain[j]));
        }
    }
    return sum;
}

namespace {

void check_dimensions(const AbSequence& seq, const Conformation& conf)
{
    if (conf.dimension() != seq.dimension()) {
        throw DomainError(fmt::format("conformation has {} angles, sequence of length {} needs {}",
                                      conf.dimension(), seq.length(), seq.dimension()));
    }
}

} // namespace

EnergyBreakdown energy_original(const AbSequence& seq, const Conformation& conf,
                                const PositionChain& chain)
{
    check_dimensions(seq, conf);
    EnergyBreakdown e;
    e.e_bb = backbone_bend_energy(conf);
    e.e_lj = lennard_jones_energy(seq, chain);
    e.e_o = e.e_bb + e.e_lj;
    e.n_hydrophobic = seq.hydrophobic_count();
    return e;
}

EnergyBreakdown energy_original(const AbSequence& seq, const Conformation& conf)
{
    check_dimensions(seq, conf);
    return energy_original(seq, conf, compute_positions(conf));
}

void add_auxiliary_terms(const AbSequence& seq, const PositionChain& chain, double lambda,
                         EnergyBreakdown& e)
{
    AuxiliaryTerms aux;
    aux.lambda = lambda;
    e.n_hydrophobic = seq.hydrophobic_count();
    e.centroid.reset();
    if (e.n_hydrophobic > 0) {
        Vec3 c;
        for (std::size_t i = 0; i < seq.length(); ++i) {
            if (seq[i] == MonomerClass::A) {
                c += chain[i];
            }
        }
        c = c * (1.0 / static_cast<double>(e.n_hydrophobic));
        if (e.n_hydrophobic > 1) {
            for (std::size_t i = 0; i < seq.length(); ++i) {
                if (seq[i] == MonomerClass::A) {
                    aux.e_hc += distance(chain[i], c);
                }
            }
        }
        e.centroid = c;
    }
    aux.e_x = (e.e_o + aux.e_hc) + aux.lambda;
    e.aux = aux;
}

EnergyBreakdown energy_auxiliary(const AbSequence& seq, const Conformation& conf,
                                 const PositionChain& chain, double lambda)
{
    if (!(lambda >= 0.0)) {
        throw DomainError(fmt::format("lambda must be non-negative, got {}", lambda));
    }
    EnergyBreakdown e = energy_original(seq, conf, chain);
    add_auxiliary_terms(seq, chain, lambda, e);
    return e;
}

EnergyBreakdown energy_auxiliary(const AbSequence& seq, const Conformation& conf, double lambda)
{
    check_dimensions(seq, conf);
    return energy_auxiliary(seq, conf, compute_positions(conf), lambda);
}

} // namespace abfold
