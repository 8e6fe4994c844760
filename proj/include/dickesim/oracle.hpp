// oracle.hpp
// Brute-force reference dynamics: explicit Hamiltonian matrices over an
// enumerated basis, exponentiated through Hermitian eigendecomposition.

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "dickesim/hamiltonian.hpp"
#include "dickesim/hilbert.hpp"

namespace dickesim {

/// Default ceiling on the oracle basis size.
inline constexpr std::size_t kDefaultMaxOracleDimension = 4096;
/// Atom-count guard for embed_symmetric.
inline constexpr int kMaxEmbedAtoms = 12;

/// kDefaultMaxOracleDimension, or the value of DICKE_MAX_DIM when set.
std::size_t max_oracle_dimension();

/// H / hbar as a dense matrix over `basis` (lexicographic label order).
struct DenseOperator {
    HamiltonianSpec spec;
    SpaceConfig config;
    std::vector<BasisLabel> basis;
    std::map<BasisLabel, Eigen::Index> index;
    Eigen::MatrixXcd matrix;
};

/// Assembles i*coupling*(T - T^dagger) from boson ladder rules and either
/// per-atom flips (FullProduct) or collective Dicke rules (Symmetric).
/// Throws std::length_error above the dimension guard.
DenseOperator build_hamiltonian(const HamiltonianSpec& spec);

/// max |H - H^dagger| over all elements.
double hermiticity_defect(const DenseOperator& op);

Eigen::VectorXcd to_dense(const DenseOperator& op, const StateVector& state);
StateVector from_dense(const DenseOperator& op, const Eigen::VectorXcd& amplitudes);

/// Throws std::domain_error when some basis label in the support of `state`
/// can reach a photon number above its mode cutoff.
void require_no_leakage(const HamiltonianSpec& spec, const StateVector& state);

/// Eigendecomposition of a DenseOperator, split into the blocks of equal
/// conserved quantities. The block split is checked against the matrix.
class ExactPropagator {
public:
    explicit ExactPropagator(DenseOperator op);

    const DenseOperator& op() const { return op_; }
    std::size_t block_count() const { return blocks_.size(); }

    /// exp(-i H t / hbar) applied to `state`.
    StateVector evolve(const StateVector& state, double t) const;

    /// max |V E V^dagger - H| over all elements.
    double reconstruction_defect() const;

private:
    struct Block {
        std::vector<Eigen::Index> indices;
        Eigen::VectorXd energies;
        Eigen::MatrixXcd vectors;
    };

    DenseOperator op_;
    std::vector<Block> blocks_;
};

StateVector evolve_exact(const DenseOperator& op, const StateVector& state, double t);

/// Max over labels of |x - y| after rotating y onto x's global phase, fixed by
/// the largest-magnitude amplitude of x (first in basis order on ties).
double compare_states(const StateVector& x, const StateVector& y);

/// Symmetric-sector state written out in the atomic product space.
StateVector embed_symmetric(const StateVector& state);

/// <Q_k> for every conserved quantity of the interaction.
std::vector<double> conserved_expectations(const HamiltonianSpec& spec, const StateVector& state);

}  // namespace dickesim
