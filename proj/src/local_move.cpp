#include "abfold/model.hpp"

#include <algorithm>
#include <cmath>

namespace abfold {

namespace {

// Point on the intersection circle of the unit spheres around a and b that is
// nearest to `hint`. Returns false when the spheres do not meet.
bool circle_point(const Vec3& a, const Vec3& b, const Vec3& hint, Vec3& out)
{
    const Vec3 ab = b - a;
    const double d = norm(ab);
    if (d > 2.0) {
        return false;
    }
    if (d < 1e-12) {
        const Vec3 w = hint - a;
        const double len = norm(w);
        out = len < 1e-12 ? a + Vec3{1.0, 0.0, 0.0} : a + w * (1.0 / len);
        return true;
    }
    const Vec3 u = ab * (1.0 / d);
    const Vec3 m = a + ab * 0.5;
    const double r = std::sqrt(std::max(0.0, 1.0 - 0.25 * d * d));
    Vec3 w = hint - m;
    w -= u * dot(w, u);
    double len = norm(w);
    if (len < 1e-12) {
        // Hint sits on the axis; any circle point is equally near.
        const Vec3 axis = std::abs(u.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
        w = cross(u, axis);
        len = norm(w);
    }
    out = m + w * (r / len);
    return true;
}

Vec3 unit(const Vec3& v)
{
    return v * (1.0 / norm(v));
}

// Sum of the Lennard-Jones terms that involve monomer m, plus the sum of
// their magnitudes (used to detect cancellation in the incremental update).
double lj_row(const AbSequence& seq, const PositionChain& chain, std::size_t m, double& magnitude)
{
    double sum = 0.0;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (k + 1 < m || k > m + 1) {
            const double t = lennard_jones_term(pair_coefficient(seq[m], seq[k]),
                                                squared_distance(chain[m], chain[k]));
            sum += t;
            magnitude += std::abs(t);
        }
    }
    return sum;
}

} // namespace

bool local_movement(const AbSequence& seq, const Conformation& conf, const PositionChain& chain,
                    const EnergyBreakdown& base, std::size_t pivot, double d_theta,
                    double d_beta, LocalMoveOutcome& out)
{
    const std::size_t n = seq.length();
    out.feasible = false;
    out.moved_count = 0;
    if (pivot < 1 || pivot + 2 > n) {
        return false;
    }

    out.conformation = conf;
    out.chain = chain;
    Conformation& c = out.conformation;
    PositionChain& p = out.chain;

    const std::size_t j = pivot + 1;
    std::array<std::size_t, 3> theta_changed{};
    std::size_t theta_changed_count = 0;

    c.theta(pivot - 1) = wrap_angle(c.theta(pivot - 1) + d_theta);
    theta_changed[theta_changed_count++] = pivot - 1;
    if (pivot >= 2) {
        c.beta(pivot - 2) = wrap_angle(c.beta(pivot - 2) + d_beta);
        p[j] = p[pivot] + direction_from_angles(c.theta(pivot - 1), c.beta(pivot - 2));
    } else {
        const double t = c.theta(0);
        p[j] = p[pivot] + Vec3{std::cos(t), std::sin(t), 0.0};
    }
    out.moved[out.moved_count++] = j;

    if (j + 1 < n) {
        if (j + 2 < n) {
            Vec3 q;
            if (!circle_point(p[j], chain[j + 2], chain[j + 1], q)) {
                return false;
            }
            p[j + 1] = q;
            const BondAngles in = angles_low_bend(unit(p[j + 1] - p[j]),
                                              {conf.theta(pivot), conf.beta(pivot - 1)});
            const BondAngles onward = angles_low_bend(unit(p[j + 2] - p[j + 1]),
                                                  {conf.theta(pivot + 1), conf.beta(pivot)});
            c.theta(pivot) = in.theta;
            c.beta(pivot - 1) = in.beta;
            c.theta(pivot + 1) = onward.theta;
            c.beta(pivot) = onward.beta;
            theta_changed[theta_changed_count++] = pivot;
            theta_changed[theta_changed_count++] = pivot + 1;
        } else {
            p[j + 1] = p[j] + (chain[j + 1] - chain[j]);
        }
        out.moved[out.moved_count++] = j + 1;
    }

    EnergyBreakdown& e = out.breakdown;
    e = EnergyBreakdown{};
    e.n_hydrophobic = base.n_hydrophobic;

    double e_bb = base.e_bb;
    for (std::size_t k = 0; k < theta_changed_count; ++k) {
        const std::size_t t = theta_changed[k];
        e_bb += 0.25 * (std::cos(conf.theta(t)) - std::cos(c.theta(t)));
    }

    // The moved monomers are consecutive, so no pair contains both of them.
    double old_rows = 0.0;
    double new_rows = 0.0;
    double old_magnitude = 0.0;
    double new_magnitude = 0.0;
    for (std::size_t m : out.moved_monomers()) {
        old_rows += lj_row(seq, chain, m, old_magnitude);
        new_rows += lj_row(seq, p, m, new_magnitude);
    }
    double e_lj = base.e_lj + (new_rows - old_rows);
    const double cancelled = std::max(old_magnitude, std::abs(base.e_lj));
    if (!std::isfinite(e_lj) || cancelled > 1e3 * (1.0 + std::abs(e_lj))) {
        e_lj = lennard_jones_energy(seq, p);
        e_bb = backbone_bend_energy(c);
    }

    e.e_bb = e_bb;
    e.e_lj = e_lj;
    e.e_o = e.e_bb + e.e_lj;
    out.feasible = true;
    return true;
}

LocalMoveOutcome local_movement(const AbSequence& seq, const Conformation& conf,
                                const PositionChain& chain, const EnergyBreakdown& base,
                                std::size_t pivot, double d_theta, double d_beta)
{
    LocalMoveOutcome out;
    local_movement(seq, conf, chain, base, pivot, d_theta, d_beta, out);
    return out;
}

} // namespace abfold
