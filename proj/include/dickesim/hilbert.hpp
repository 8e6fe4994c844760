// hilbert.hpp
// Sparse pure states over truncated boson modes times a register of atomic
// ensembles (symmetric Dicke sector or the full 2^N product space).

#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dickesim {

using Complex = std::complex<double>;

/// Amplitudes with modulus below this are dropped after arithmetic.
inline constexpr double kPruneThreshold = 1e-14;
/// Tolerance used whenever a state is required to be normalized.
inline constexpr double kNormTolerance = 1e-12;

enum class AtomRepresentation { Symmetric, FullProduct };

struct ModeSpec {
    std::string label;
    int cutoff = 0;  // max photon number, dimension cutoff+1

    bool operator==(const ModeSpec&) const = default;
};

/// Modes plus a list of atomic ensembles.
///
/// Most states carry a single ensemble of N atoms. Several ensembles appear in
/// the cascade and chain protocols, where each ensemble keeps its own Dicke
/// index (Symmetric) or its own contiguous block of bits (FullProduct).
class SpaceConfig {
public:
    SpaceConfig() = default;
    SpaceConfig(std::vector<ModeSpec> modes, int n_atoms,
                AtomRepresentation representation = AtomRepresentation::Symmetric);

    static SpaceConfig with_ensembles(std::vector<ModeSpec> modes, std::vector<int> ensembles,
                                      AtomRepresentation representation);

    const std::vector<ModeSpec>& modes() const { return modes_; }
    const std::vector<int>& ensembles() const { return ensembles_; }
    AtomRepresentation representation() const { return representation_; }

    int n_atoms() const;
    std::size_t n_ensembles() const { return ensembles_.size(); }

    /// Index of the mode with this label; throws std::invalid_argument if absent.
    std::size_t mode_index(std::string_view label) const;
    bool has_mode(std::string_view label) const;

    /// First bit of ensemble `x` inside a FullProduct atom bitstring.
    std::size_t ensemble_offset(std::size_t x) const;

    /// Length of BasisLabel::atoms for this configuration.
    std::size_t atom_slots() const;

    /// Total Hilbert-space dimension (saturates at SIZE_MAX).
    std::size_t dimension() const;

    SpaceConfig with_representation(AtomRepresentation representation) const;

    bool operator==(const SpaceConfig&) const = default;

private:
    std::vector<ModeSpec> modes_;
    std::vector<int> ensembles_;
    AtomRepresentation representation_ = AtomRepresentation::Symmetric;
};

/// One basis vector. `atoms` holds one Dicke index m per ensemble in the
/// symmetric representation, or one 0/1 entry per atom in the product one.
/// Ordering is lexicographic by (fock, atoms).
struct BasisLabel {
    std::vector<int> fock;
    std::vector<int> atoms;

    auto operator<=>(const BasisLabel&) const = default;
    bool operator==(const BasisLabel&) const = default;
};

bool conforms(const SpaceConfig& config, const BasisLabel& label);

/// Throws std::out_of_range with a description when `label` does not fit `config`.
void require_conforms(const SpaceConfig& config, const BasisLabel& label);

/// Every label of the configuration in lexicographic order.
std::vector<BasisLabel> enumerate_basis(const SpaceConfig& config);

/// Immutable sparse state vector.
class StateVector {
public:
    using Amplitudes = std::map<BasisLabel, Complex>;

    StateVector() = default;
    explicit StateVector(SpaceConfig config) : config_(std::move(config)) {}

    /// Adopts `amplitudes` after validating labels and pruning tiny entries.
    static StateVector from_amplitudes(SpaceConfig config, Amplitudes amplitudes,
                                       bool leaked = false);

    const SpaceConfig& config() const { return config_; }
    const Amplitudes& amplitudes() const { return amplitudes_; }
    Complex amplitude(const BasisLabel& label) const;

    /// Set when an operation tried to raise a mode past its cutoff.
    bool leaked() const { return leaked_; }
    bool is_zero() const { return amplitudes_.empty(); }
    std::size_t support_size() const { return amplitudes_.size(); }

private:
    SpaceConfig config_;
    Amplitudes amplitudes_;
    bool leaked_ = false;
};

/// Builds a state with exactly the given amplitudes (not normalized).
/// Throws std::out_of_range for bad labels and std::invalid_argument for duplicates.
StateVector make_state(const SpaceConfig& config,
                       std::span<const std::pair<BasisLabel, Complex>> entries);
StateVector make_state(const SpaceConfig& config,
                       std::initializer_list<std::pair<BasisLabel, Complex>> entries);

StateVector basis_state(const SpaceConfig& config, BasisLabel label);

StateVector operator+(const StateVector& x, const StateVector& y);
StateVector operator-(const StateVector& x, const StateVector& y);
StateVector operator*(Complex scale, const StateVector& x);

/// <x|y>, conjugate-linear in x.
Complex inner(const StateVector& x, const StateVector& y);
double norm(const StateVector& x);
StateVector normalize(const StateVector& x);
bool is_normalized(const StateVector& x, double tol = kNormTolerance);

/// |<x|y>|^2 for normalized inputs.
double fidelity(const StateVector& x, const StateVector& y);

enum class BosonAction { Lower, Raise };

/// a or a^dagger on the named mode. Raising past the cutoff drops that
/// component and marks the result as leaked.
StateVector apply_boson(const StateVector& x, std::string_view mode, BosonAction action);

/// Purity Tr(rho^2) of the field state after tracing out every atom.
double mode_purity(const StateVector& x);

}  // namespace dickesim
