#pragma once

// Three-dimensional AB off-lattice chain: sequences, internal-coordinate
// conformations, Cartesian reconstruction and the energy functions.
//
// Indexing is 0-based throughout. For a chain of L monomers a conformation
// holds D = 2L - 5 angles: bond angles theta[0..L-3] followed by torsions
// beta[0..L-4]. The bond into monomer j (j >= 3) points along
// direction_from_angles(theta[j-2], beta[j-3]); the bond into monomer 2 lies
// in the z = 0 plane and uses theta[0] alone.

#include "abfold/geometry.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abfold {

enum class MonomerClass : unsigned char {
    A, ///< hydrophobic
    B, ///< hydrophilic
};

char to_char(MonomerClass m);

class AbSequence {
public:
    /// Throws InstanceTooSmall when fewer than three residues are given.
    explicit AbSequence(std::vector<MonomerClass> residues, std::string label = {});

    std::size_t length() const noexcept { return residues_.size(); }
    std::size_t dimension() const noexcept { return 2 * residues_.size() - 5; }
    MonomerClass operator[](std::size_t i) const { return residues_[i]; }
    const std::vector<MonomerClass>& residues() const noexcept { return residues_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t hydrophobic_count() const noexcept { return hydrophobic_count_; }
    std::string to_string() const;

    friend bool operator==(const AbSequence& a, const AbSequence& b)
    {
        return a.residues_ == b.residues_;
    }

private:
    std::vector<MonomerClass> residues_;
    std::string label_;
    std::size_t hydrophobic_count_ = 0;
};

/// Parses an A/B string. Case-insensitive, whitespace ignored, lines that
/// start with '>' are skipped (FASTA headers).
AbSequence parse_ab_sequence(std::string_view text, std::string label = {});

/// Maps one-letter amino acid codes onto the A/B alphabet (Kyte-Doolittle
/// style split: I V P L C M A G are hydrophobic, the other twelve are not).
AbSequence kd_transform(std::string_view one_letter, std::string label = {});

struct Conformation {
    std::vector<double> angles;

    Conformation() = default;
    explicit Conformation(std::vector<double> a) : angles(std::move(a)) {}

    std::size_t dimension() const noexcept { return angles.size(); }
    std::size_t chain_length() const noexcept { return (angles.size() + 5) / 2; }
    std::size_t bond_angle_count() const noexcept { return chain_length() - 2; }
    std::size_t torsion_count() const noexcept { return chain_length() - 3; }

    double theta(std::size_t k) const { return angles[k]; }
    double& theta(std::size_t k) { return angles[k]; }
    double beta(std::size_t k) const { return angles[bond_angle_count() + k]; }
    double& beta(std::size_t k) { return angles[bond_angle_count() + k]; }

    friend bool operator==(const Conformation&, const Conformation&) = default;
};

struct PositionChain {
    std::vector<Vec3> points;

    std::size_t size() const noexcept { return points.size(); }
    const Vec3& operator[](std::size_t i) const { return points[i]; }
    Vec3& operator[](std::size_t i) { return points[i]; }
};

struct BondAngles {
    double theta = 0.0;
    double beta = 0.0;
};

/// Unit step (cos t cos b, sin t cos b, sin b).
Vec3 direction_from_angles(double theta, double beta);

/// Inverse of direction_from_angles on the asin branch: beta in
/// [-pi/2, pi/2], theta = atan2(v.y, v.x). A vertical direction has no
/// defined theta, so `fallback_theta` is returned for it. Throws DomainError
/// when |v| differs from 1 by more than 1e-9.
BondAngles angles_from_direction(const Vec3& v, double fallback_theta);

/// Angles for a rebuilt bond. Every direction has two representations,
/// (theta, beta) and (theta + pi, pi - beta); this returns the one with
/// cos(theta) >= 0, which has the lower bending energy. A bond whose direction
/// still matches `previous` within 1e-12 keeps `previous`.
BondAngles angles_low_bend(const Vec3& v, const BondAngles& previous);

/// Cartesian positions of all monomers; bond lengths are 1.
PositionChain compute_positions(const Conformation& conf);
void compute_positions(const Conformation& conf, PositionChain& out);

/// c(A,A) = 1, c(B,B) = 0.5, mixed = -0.5.
double pair_coefficient(MonomerClass a, MonomerClass b);

/// 4 (d^-12 - c d^-6), taking the squared distance.
inline double lennard_jones_term(double coefficient, double squared_dist)
{
    const double inv6 = 1.0 / (squared_dist * squared_dist * squared_dist);
    return 4.0 * (inv6 * inv6 - coefficient * inv6);
}

struct AuxiliaryTerms {
    double e_hc = 0.0;   ///< summed distance of hydrophobic monomers to their centroid
    double lambda = 0.0; ///< phase separation constant
    double e_x = 0.0;    ///< stored as (e_o + e_hc) + lambda
};

struct EnergyBreakdown {
    double e_bb = 0.0;
    double e_lj = 0.0;
    double e_o = 0.0; ///< stored as e_bb + e_lj
    std::optional<AuxiliaryTerms> aux;
    std::size_t n_hydrophobic = 0;
    std::optional<Vec3> centroid;
};

double backbone_bend_energy(const Conformation& conf);
double lennard_jones_energy(const AbSequence& seq, const PositionChain& chain);

/// Original energy E_o = E_bb + E_lj (minimized; reported scores are -E_o).
EnergyBreakdown energy_original(const AbSequence& seq, const Conformation& conf);
EnergyBreakdown energy_original(const AbSequence& seq, const Conformation& conf,
                                const PositionChain& chain);

/// Auxiliary energy E_x = E_o + E_hc + lambda.
EnergyBreakdown energy_auxiliary(const AbSequence& seq, const Conformation& conf, double lambda);
EnergyBreakdown energy_auxiliary(const AbSequence& seq, const Conformation& conf,
                                 const PositionChain& chain, double lambda);

/// Adds E_hc, lambda and E_x to a breakdown that already carries E_o.
void add_auxiliary_terms(const AbSequence& seq, const PositionChain& chain, double lambda,
                         EnergyBreakdown& breakdown);

struct LocalMoveOutcome {
    bool feasible = false;
    Conformation conformation;
    PositionChain chain;
    EnergyBreakdown breakdown;
    std::array<std::size_t, 2> moved{};
    std::size_t moved_count = 0;

    std::span<const std::size_t> moved_monomers() const { return {moved.data(), moved_count}; }
};

/// Rotates the bond pivot -> pivot+1 by (d_theta, d_beta) and rebuilds at
/// most the next monomer so that every other position stays put.
///
/// `pivot` is 0-based in [1, L-2]. The torsion delta is ignored for pivot 1
/// because that bond is confined to the z = 0 plane. When pivot+3 < L the
/// monomer pivot+2 is placed on the circle where the unit spheres around the
/// new pivot+1 and the fixed pivot+3 meet, at the point nearest its old
/// position; if those spheres do not meet the move is infeasible. The
/// returned E_o is updated in O(L) from `base` (only E_bb/E_lj; auxiliary
/// terms are not carried).
LocalMoveOutcome local_movement(const AbSequence& seq, const Conformation& conf,
                                const PositionChain& chain, const EnergyBreakdown& base,
                                std::size_t pivot, double d_theta, double d_beta);

/// Buffer-reusing form of local_movement. Returns out.feasible.
bool local_movement(const AbSequence& seq, const Conformation& conf, const PositionChain& chain,
                    const EnergyBreakdown& base, std::size_t pivot, double d_theta,
                    double d_beta, LocalMoveOutcome& out);

} // namespace abfold
