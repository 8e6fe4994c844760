// hamiltonian.hpp
// Interaction descriptions shared by the closed-form evolutions and the
// brute-force oracle.
//
// Every interaction has the form H = i*hbar*coupling*(T - T^dagger), so that
// exp(-iHt/hbar) = exp(coupling*t*(T - T^dagger)). The forward term T is
//   OnePhoton      a S10                 (modes: a)
//   Raman          c^dagger b S10        (modes: c, b)
//   MPhoton        S10 a^M               (modes: a)
//   ThreePhoton    a^dagger b c          (modes: a, b, c; no atoms)
// where S10 is the collective raising operator summed over every ensemble with
// a nonzero weight. Modes are identified by position, not by label.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dickesim/hilbert.hpp"

namespace dickesim {

enum class Interaction { OnePhoton, Raman, MPhoton, ThreePhoton };

std::string_view to_string(Interaction kind);
std::optional<Interaction> parse_interaction(std::string_view name);

struct HamiltonianSpec {
    Interaction kind = Interaction::OnePhoton;
    int photons = 1;  // M for MPhoton, ignored otherwise
    double coupling = 1.0;
    std::vector<ModeSpec> modes;
    std::vector<int> ensembles;  // atom count per ensemble
    AtomRepresentation representation = AtomRepresentation::Symmetric;
    /// Per-ensemble coupling multiplier; empty means 1 for every ensemble.
    /// A zero weight switches an ensemble off for this interaction.
    std::vector<double> ensemble_weights;

    SpaceConfig config() const;
    double weight(std::size_t ensemble) const;

    /// Throws std::invalid_argument on an inconsistent specification.
    void validate() const;
};

HamiltonianSpec one_photon_spec(int n_atoms, double g, int cutoff = 1,
                                AtomRepresentation rep = AtomRepresentation::Symmetric);
HamiltonianSpec raman_spec(int n_atoms, double f, int cutoff_c = 1, int cutoff_b = 1,
                           AtomRepresentation rep = AtomRepresentation::Symmetric);
HamiltonianSpec m_photon_spec(int photons, int n_atoms, double g, int cutoff,
                              AtomRepresentation rep = AtomRepresentation::Symmetric);
HamiltonianSpec three_photon_spec(double f, int cutoff_a, int cutoff_b, int cutoff_c);

/// Per-ensemble excitation counts of a label (Dicke index or bit weight).
std::vector<int> ensemble_excitations(const SpaceConfig& config, const BasisLabel& label);

/// Integer quantities that the interaction leaves invariant, for one basis label.
std::vector<int> conserved_quantities(const HamiltonianSpec& spec, const BasisLabel& label);

/// Largest photon number each mode can reach from `label` under the
/// interaction, ignoring cutoffs; derived from the conserved quantities.
std::vector<int> max_reachable_occupation(const HamiltonianSpec& spec, const BasisLabel& label);

/// The factorization theta = pi^dagger h - pi h^dagger of the generator
/// coupling*(T - T^dagger), applied to sparse states:
///   OnePhoton    pi^dagger = S,        h = g a
///   Raman        pi^dagger = S,        h = f c^dagger b
///   MPhoton      pi^dagger = g,        h = S a^M
///   ThreePhoton  pi^dagger = f,        h = a^dagger b c
/// with S the weighted collective raising operator.
StateVector apply_h(const HamiltonianSpec& spec, const StateVector& state);
StateVector apply_h_dagger(const HamiltonianSpec& spec, const StateVector& state);
StateVector apply_pi(const HamiltonianSpec& spec, const StateVector& state);
StateVector apply_pi_dagger(const HamiltonianSpec& spec, const StateVector& state);

}  // namespace dickesim
