// protocols.hpp
// W-state generation, ladder steps, light storage, the two-ensemble cascade
// and the atomic chain, composed from the closed-form evolutions.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dickesim/hilbert.hpp"

namespace dickesim {

struct ScheduleStep {
    std::string interaction;
    std::vector<int> targets;  // ensemble indices the step acts on
    double duration = 0.0;
};

struct Schedule {
    std::vector<ScheduleStep> steps;

    double total_time() const;
};

struct EnsembleChain {
    std::vector<int> sizes;

    int total() const;
    /// Throws std::invalid_argument on an empty chain or a non-positive size.
    void validate() const;
};

using ParamValue = std::variant<int, double, std::vector<int>>;

struct ProtocolResult {
    std::string protocol;
    std::vector<std::pair<std::string, ParamValue>> params;
    Schedule schedule;
    StateVector final_state;
    double fidelity = 0.0;  // against the protocol's target state
    std::optional<double> success_probability;
};

/// |1>|0;N>^ -> |0>|W_N> in time pi/(2 g sqrt(N)). With `disentangle` the
/// rotation runs backwards from |0>|W_N> to |1>|0;N>^.
ProtocolResult prepare_w(int n_atoms, double g, bool disentangle = false);

/// Raman step |m;N> -> |m+direction;N>. The default rotation angle is pi/2;
/// `theta` overrides it and the success probability becomes sin^2(theta).
ProtocolResult ladder_step(int m, int n_atoms, double f, int direction,
                           std::optional<double> theta = std::nullopt);

/// (alpha|1> + beta|0>) x |0;N>^ -> |0> x (alpha W_N + beta |0;N>^).
ProtocolResult store_qubit(Complex alpha, Complex beta, int n_atoms, double g);

/// Storage followed by a reversed quarter rotation; fidelity is measured on
/// the reduced optical state.
ProtocolResult roundtrip_qubit(Complex alpha, Complex beta, int n_atoms, double g);

/// (alpha|01> + beta|10>) x |0;N>^ under the Raman interaction for rotation
/// angle theta0 = f t sqrt(N) (pi/2 by default).
ProtocolResult store_entangled_pair(Complex alpha, Complex beta, int n_atoms, double f,
                                    std::optional<double> theta0 = std::nullopt);

ProtocolResult roundtrip_entangled_pair(Complex alpha, Complex beta, int n_atoms, double f);

/// Photon passed through ensemble 1 (time t1) and then ensemble 2 (time t2).
ProtocolResult cascade(int n1, int n2, double g1, double g2, double t1, double t2);

/// (alpha|01> + beta|10>) x |O> under the Raman interaction whose collective
/// operator is summed over every ensemble of the chain.
ProtocolResult chain_evolution(const EnsembleChain& chain, double f, double t,
                               Complex alpha = 1.0, Complex beta = 0.0);

/// Probability that ensemble x holds one excitation, for every ensemble.
std::vector<double> ensemble_excitation_probabilities(const StateVector& state);

/// <psi| rho_light |psi> for the field state psi given as (fock, amplitude) pairs.
double optical_fidelity(const StateVector& state,
                        const std::vector<std::pair<std::vector<int>, Complex>>& light);

}  // namespace dickesim
