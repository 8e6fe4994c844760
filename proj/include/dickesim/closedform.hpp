// closedform.hpp
// Analytic evolutions on invariant two-dimensional subspaces.
//
// All atomic amplitudes refer to the normalized Dicke basis |m>^. Rotations
// follow U(t) = exp(coupling*t*(T - T^dagger)) for the forward terms listed in
// hamiltonian.hpp, so an amplitude pair (first, second) with T first = w second
// evolves as first' = first cos - second sin, second' = first sin + second cos.

#pragma once

#include <string>

#include "dickesim/hamiltonian.hpp"
#include "dickesim/hilbert.hpp"

namespace dickesim {

/// Coupling constant (g or f, inverse time) and evolution time.
struct CouplingParams {
    double coupling = 1.0;
    double t = 0.0;

    double angle() const { return coupling * t; }
};

struct AmplitudePair {
    Complex first;
    Complex second;
};

/// Photon-to-ensemble exchange: `c0` multiplies |1>|0;N>^, `c1` multiplies
/// |0>|W_N>. Rotation angle g t sqrt(N). Input must be normalized.
AmplitudePair evolve_one_photon(Complex c0, Complex c1, int n_atoms, CouplingParams params);

/// State-level form on the first mode and one ensemble. Each component must
/// lie in the sector (photons + excitations of that ensemble) <= 1; other
/// ensembles are spectators. Requires the symmetric representation.
StateVector evolve_one_photon(const StateVector& state, CouplingParams params,
                              std::size_t ensemble = 0);

struct RamanAngles {
    double theta;        // f t sqrt((m+1)(N-m)), raising branch
    double theta_prime;  // f t sqrt(m(N-m+1)), lowering branch
};

RamanAngles raman_angles(int m, int n_atoms, CouplingParams params);

/// Raman exchange on modes labeled "c" and "b" in the single-photon sector.
/// Pairs {|01>|m>^, |10>|m+1>^} (|n_c n_b>) rotate by theta_m; the extremal
/// components |10>|0>^ and |01>|N>^ are stationary.
StateVector evolve_raman(const StateVector& state, CouplingParams params, std::size_t ensemble = 0);

/// Result of the general invariant-pair evolution. The c-branch lives on
/// (Phi, raised) with raised = pi^dagger Phi_dagger / |pi^dagger Phi_dagger|; the
/// e-branch lives on (Phi_dagger, lowered) with lowered = pi Phi / |pi Phi|.
/// When pi is a scalar both branches share the pair (Phi, Phi_dagger).
struct PairEvolution {
    Complex phi;
    Complex raised;
    Complex partner;
    Complex lowered;
};

/// Closed-form exp(theta t)(c Phi + e Phi_dagger) for h Phi = A Phi_dagger,
/// h^dagger Phi_dagger = B Phi. `lam` is the eigenvalue of pi pi^dagger and
/// `lam_prime` that of pi^dagger pi on the pair. Zero frequencies give the
/// identity on the affected branch.
PairEvolution general_pair_evolution(Complex c, Complex e, Complex A, Complex B, double lam,
                                     double lam_prime, double t);

/// Residual norms of the side conditions on (Phi, Phi_dagger).
struct PairValidity {
    double h_phi_residual = 0.0;          // |h Phi - A Phi_dagger|
    double h_dag_phi_dag_residual = 0.0;  // |h^dagger Phi_dagger - B Phi|
    double h_phi_dag = 0.0;               // |h Phi_dagger|, strict condition
    double h_dag_phi = 0.0;               // |h^dagger Phi|, strict condition
    double pi_dag_h_phi_dag = 0.0;        // |pi^dagger h Phi_dagger|, composite condition
    double pi_h_dag_phi = 0.0;            // |pi h^dagger Phi|, composite condition
    double eigen_residual = 0.0;          // worst pi pi^dagger / pi^dagger pi eigen residual
    bool leaked = false;                  // an operator raised a mode past its cutoff

    bool strict_conditions_hold(double tol = 1e-10) const {
        return h_phi_dag <= tol && h_dag_phi <= tol;
    }
};

struct PairCoefficients {
    Complex A;
    Complex B;
    double lam = 0.0;
    double lam_prime = 0.0;
    PairValidity validity;
};

/// Computes A, B, lam and lam_prime by applying h, h^dagger, pi and pi^dagger
/// to the (normalized, orthogonal) supplied states. Throws std::domain_error
/// if the pair is not closed (residuals above 1e-10).
PairCoefficients pair_coefficients(const HamiltonianSpec& spec, const StateVector& phi,
                                   const StateVector& phi_dag);

/// c Phi + e Phi_dagger evolved for time t through pair_coefficients and
/// general_pair_evolution, returned as a full state.
StateVector evolve_pair_state(const HamiltonianSpec& spec, const StateVector& phi,
                              const StateVector& phi_dag, Complex c, Complex e, double t);

/// Phi = |2M-p>|0>^, Phi_dagger = |M-p>|1>^ for M-photon absorption, on a mode
/// with cutoff 2M-p.
struct StatePair {
    StateVector phi;
    StateVector phi_dag;
};
StatePair m_photon_pair(int photons, int p, int n_atoms);
HamiltonianSpec m_photon_pair_spec(int photons, int p, int n_atoms, double g);

/// M-photon absorption on (Phi, Phi_dagger); coefficients are computed
/// constructively. Requires 1 <= p <= M and N >= 1.
AmplitudePair evolve_m_photon(int photons, int p, int n_atoms, Complex c, Complex e,
                              CouplingParams params);

/// Phi = |0,1,n>, Phi_dagger = |1,0,n-1> on modes (a, b, c) with cutoffs (1,1,n).
StatePair three_photon_pair(int n);

/// Three-photon parametric exchange, rotation angle f t sqrt(n).
AmplitudePair evolve_three_photon(int n, Complex c, Complex e, CouplingParams params);

/// The literal product (2M-p)(2M-p-1)...(M-p), square-rooted, offered as
/// the M-photon A(p). Used only to document its disagreement with the
/// constructive coefficient.
double literal_m_photon_coefficient(int photons, int p);

}  // namespace dickesim
