// closedform.cpp

#include "dickesim/closedform.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "dickesim/dicke.hpp"

namespace dickesim {

namespace {

constexpr double kPairTolerance = 1e-10;

void require_unit(Complex a, Complex b, const char* what) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kNormTolerance) {
        throw std::invalid_argument(std::string(what) + ": amplitudes are not normalized");
    }
}

AmplitudePair rotate(Complex first, Complex second, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {first * c - second * s, first * s + second * c};
}

// Where a basis label sits inside a family of invariant pairs.
struct PairSlot {
    BasisLabel first;   // the label that T maps onto `second`
    BasisLabel second;
    bool is_second = false;
    double angle = 0.0;  // zero for stationary labels
};

// Rotates every pair named by `classify`; labels mapping to a zero angle are
// copied unchanged.
StateVector rotate_pairs(const StateVector& state,
                         const std::function<PairSlot(const BasisLabel&)>& classify) {
    struct Accum {
        BasisLabel second;
        Complex first_amp{};
        Complex second_amp{};
        double angle = 0.0;
    };
    std::map<BasisLabel, Accum> pairs;
    StateVector::Amplitudes out;
    for (const auto& [label, amp] : state.amplitudes()) {
        PairSlot slot = classify(label);
        if (slot.angle == 0.0) {
            out[label] += amp;
            continue;
        }
        auto& acc = pairs[slot.first];
        acc.second = slot.second;
        acc.angle = slot.angle;
        (slot.is_second ? acc.second_amp : acc.first_amp) += amp;
    }
    for (const auto& [first, acc] : pairs) {
        const auto r = rotate(acc.first_amp, acc.second_amp, acc.angle);
        out[first] += r.first;
        out[acc.second] += r.second;
    }
    return StateVector::from_amplitudes(state.config(), std::move(out), state.leaked());
}

void require_symmetric(const StateVector& state, const char* what) {
    if (state.config().representation() != AtomRepresentation::Symmetric) {
        throw std::invalid_argument(std::string(what) + ": requires the symmetric representation");
    }
}

}  // namespace

AmplitudePair evolve_one_photon(Complex c0, Complex c1, int n_atoms, CouplingParams params) {
    require_unit(c0, c1, "evolve_one_photon");
    if (n_atoms < 1) {
        throw std::invalid_argument("evolve_one_photon: N must be at least 1");
    }
    return rotate(c0, c1, params.angle() * std::sqrt(static_cast<double>(n_atoms)));
}

StateVector evolve_one_photon(const StateVector& state, CouplingParams params,
                              std::size_t ensemble) {
    require_symmetric(state, "evolve_one_photon");
    const auto& config = state.config();
    if (config.modes().empty() || ensemble >= config.n_ensembles()) {
        throw std::invalid_argument("evolve_one_photon: needs a photon mode and the target ensemble");
    }
    const double angle = params.angle() * std::sqrt(static_cast<double>(config.ensembles()[ensemble]));
    return rotate_pairs(state, [&](const BasisLabel& label) {
        const int n = label.fock[0];
        const int m = label.atoms[ensemble];
        if (n + m > 1) {
            throw std::domain_error(
                "evolve_one_photon: component outside the single-excitation sector");
        }
        PairSlot slot;
        if (n + m == 0) {
            return slot;  // vacuum with ground ensemble is dark
        }
        slot.first = label;
        slot.first.fock[0] = 1;
        slot.first.atoms[ensemble] = 0;
        slot.second = label;
        slot.second.fock[0] = 0;
        slot.second.atoms[ensemble] = 1;
        slot.is_second = (m == 1);
        slot.angle = angle;
        return slot;
    });
}

RamanAngles raman_angles(int m, int n_atoms, CouplingParams params) {
    if (n_atoms < 0 || m < 0 || m > n_atoms) {
        throw std::out_of_range("raman_angles: m must lie in [0, N]");
    }
    const double ft = params.angle();
    return {ft * std::sqrt(static_cast<double>((m + 1) * (n_atoms - m))),
            ft * std::sqrt(static_cast<double>(m * (n_atoms - m + 1)))};
}

StateVector evolve_raman(const StateVector& state, CouplingParams params, std::size_t ensemble) {
    require_symmetric(state, "evolve_raman");
    const auto& config = state.config();
    if (config.modes().size() != 2 || !config.has_mode("c") || !config.has_mode("b")) {
        throw std::invalid_argument("evolve_raman: expects exactly the two modes 'c' and 'b'");
    }
    if (ensemble >= config.n_ensembles()) {
        throw std::invalid_argument("evolve_raman: ensemble index out of range");
    }
    const std::size_t ic = config.mode_index("c");
    const std::size_t ib = config.mode_index("b");
    const int n_atoms = config.ensembles()[ensemble];
    return rotate_pairs(state, [&](const BasisLabel& label) {
        const int nc = label.fock[ic];
        const int nb = label.fock[ib];
        if (nc + nb != 1) {
            throw std::domain_error("evolve_raman: component outside the single-photon sector");
        }
        const int m = label.atoms[ensemble];
        // |01>|m> pairs with |10>|m+1>; a |10>|m'> component belongs to pair m'-1.
        const int pair_m = nb == 1 ? m : m - 1;
        PairSlot slot;
        if (pair_m < 0 || pair_m >= n_atoms) {
            return slot;
        }
        slot.first = label;
        slot.first.fock[ic] = 0;
        slot.first.fock[ib] = 1;
        slot.first.atoms[ensemble] = pair_m;
        slot.second = label;
        slot.second.fock[ic] = 1;
        slot.second.fock[ib] = 0;
        slot.second.atoms[ensemble] = pair_m + 1;
        slot.is_second = (nc == 1);
        slot.angle = raman_angles(pair_m, n_atoms, params).theta;
        return slot;
    });
}

PairEvolution general_pair_evolution(Complex c, Complex e, Complex A, Complex B, double lam,
                                     double lam_prime, double t) {
    constexpr double eps = 1e-12;
    if (lam < -eps || lam_prime < -eps) {
        throw std::domain_error("general_pair_evolution: lam and lam_prime must be non-negative");
    }
    lam = std::max(lam, 0.0);
    lam_prime = std::max(lam_prime, 0.0);

    auto frequency = [&](Complex product) {
        const double scale = std::max(1.0, std::abs(product));
        if (std::abs(product.imag()) > eps * scale || product.real() < -eps * scale) {
            throw std::domain_error(
                "general_pair_evolution: negative or complex product under the square root");
        }
        return std::sqrt(std::max(product.real(), 0.0));
    };
    const double omega = frequency(lam * A * B);
    const double omega_prime = frequency(lam_prime * B * A);

    PairEvolution out{c, Complex{}, e, Complex{}};
    if (omega > 0.0) {
        // pi^dagger Phi_dagger has norm sqrt(lam); the feed coefficient
        // A sqrt(lam) / omega is a pure phase when B = conj(A).
        out.phi = c * std::cos(omega * t);
        out.raised = c * (A * std::sqrt(lam) / omega) * std::sin(omega * t);
    }
    if (omega_prime > 0.0) {
        out.partner = e * std::cos(omega_prime * t);
        out.lowered = -e * (B * std::sqrt(lam_prime) / omega_prime) * std::sin(omega_prime * t);
    }
    return out;
}

PairCoefficients pair_coefficients(const HamiltonianSpec& spec, const StateVector& phi,
                                   const StateVector& phi_dag) {
    spec.validate();
    if (!(phi.config() == spec.config()) || !(phi_dag.config() == spec.config())) {
        throw std::invalid_argument("pair_coefficients: states do not match the interaction space");
    }
    if (!is_normalized(phi) || !is_normalized(phi_dag)) {
        throw std::invalid_argument("pair_coefficients: states must be normalized");
    }
    if (std::abs(inner(phi, phi_dag)) > kNormTolerance) {
        throw std::invalid_argument("pair_coefficients: states must be orthogonal");
    }

    PairCoefficients out;
    auto& v = out.validity;

    const StateVector h_phi = apply_h(spec, phi);
    out.A = inner(phi_dag, h_phi);
    v.h_phi_residual = norm(h_phi - out.A * phi_dag);

    const StateVector hd_phi_dag = apply_h_dagger(spec, phi_dag);
    out.B = inner(phi, hd_phi_dag);
    v.h_dag_phi_dag_residual = norm(hd_phi_dag - out.B * phi);

    const StateVector h_phi_dag = apply_h(spec, phi_dag);
    const StateVector hd_phi = apply_h_dagger(spec, phi);
    v.h_phi_dag = norm(h_phi_dag);
    v.h_dag_phi = norm(hd_phi);
    v.pi_dag_h_phi_dag = norm(apply_pi_dagger(spec, h_phi_dag));
    v.pi_h_dag_phi = norm(apply_pi(spec, hd_phi));

    auto pi_pidag = [&](const StateVector& s) { return apply_pi(spec, apply_pi_dagger(spec, s)); };
    auto pidag_pi = [&](const StateVector& s) { return apply_pi_dagger(spec, apply_pi(spec, s)); };
    const StateVector raise_dag = pi_pidag(phi_dag);
    const StateVector lower_phi = pidag_pi(phi);
    out.lam = inner(phi_dag, raise_dag).real();
    out.lam_prime = inner(phi, lower_phi).real();
    v.eigen_residual = std::max({norm(raise_dag - Complex{out.lam} * phi_dag),
                                 norm(pi_pidag(phi) - Complex{out.lam} * phi),
                                 norm(lower_phi - Complex{out.lam_prime} * phi),
                                 norm(pidag_pi(phi_dag) - Complex{out.lam_prime} * phi_dag)});
    v.leaked = h_phi.leaked() || hd_phi_dag.leaked() || h_phi_dag.leaked() || hd_phi.leaked();

    if (v.h_phi_residual > kPairTolerance || v.h_dag_phi_dag_residual > kPairTolerance) {
        throw std::domain_error("pair_coefficients: h does not map the pair onto itself");
    }
    if (v.pi_dag_h_phi_dag > kPairTolerance || v.pi_h_dag_phi > kPairTolerance) {
        throw std::domain_error("pair_coefficients: composite side conditions fail");
    }
    if (v.eigen_residual > kPairTolerance) {
        throw std::domain_error("pair_coefficients: states are not eigenvectors of pi pi^dagger");
    }
    return out;
}

StateVector evolve_pair_state(const HamiltonianSpec& spec, const StateVector& phi,
                              const StateVector& phi_dag, Complex c, Complex e, double t) {
    const auto coeffs = pair_coefficients(spec, phi, phi_dag);
    const auto evo =
        general_pair_evolution(c, e, coeffs.A, coeffs.B, coeffs.lam, coeffs.lam_prime, t);
    StateVector out = evo.phi * phi + evo.partner * phi_dag;
    if (evo.raised != Complex{}) {
        out = out + evo.raised * normalize(apply_pi_dagger(spec, phi_dag));
    }
    if (evo.lowered != Complex{}) {
        out = out + evo.lowered * normalize(apply_pi(spec, phi));
    }
    return out;
}

StatePair m_photon_pair(int photons, int p, int n_atoms) {
    if (photons < 1 || p < 1 || p > photons) {
        throw std::invalid_argument("m_photon: p must lie in [1, M]");
    }
    if (n_atoms < 1) {
        throw std::invalid_argument("m_photon: N must be at least 1");
    }
    const SpaceConfig config({{"a", 2 * photons - p}}, n_atoms);
    return {basis_state(config, {{2 * photons - p}, {0}}),
            basis_state(config, {{photons - p}, {1}})};
}

HamiltonianSpec m_photon_pair_spec(int photons, int p, int n_atoms, double g) {
    return m_photon_spec(photons, n_atoms, g, 2 * photons - p);
}

AmplitudePair evolve_m_photon(int photons, int p, int n_atoms, Complex c, Complex e,
                              CouplingParams params) {
    const auto pair = m_photon_pair(photons, p, n_atoms);
    const auto spec = m_photon_pair_spec(photons, p, n_atoms, params.coupling);
    const auto coeffs = pair_coefficients(spec, pair.phi, pair.phi_dag);
    const auto evo = general_pair_evolution(c, e, coeffs.A, coeffs.B, coeffs.lam, coeffs.lam_prime,
                                            params.t);
    // pi is the scalar g: the raised direction is sign(g) Phi_dagger and the
    // lowered one sign(g) Phi.
    const double sign = params.coupling < 0.0 ? -1.0 : 1.0;
    return {evo.phi + sign * evo.lowered, evo.partner + sign * evo.raised};
}

StatePair three_photon_pair(int n) {
    if (n < 1) {
        throw std::invalid_argument("three_photon: n must be at least 1");
    }
    const SpaceConfig config({{"a", 1}, {"b", 1}, {"c", n}}, 0);
    return {basis_state(config, {{0, 1, n}, {}}), basis_state(config, {{1, 0, n - 1}, {}})};
}

AmplitudePair evolve_three_photon(int n, Complex c, Complex e, CouplingParams params) {
    if (n < 1) {
        throw std::invalid_argument("evolve_three_photon: n must be at least 1");
    }
    require_unit(c, e, "evolve_three_photon");
    return rotate(c, e, params.angle() * std::sqrt(static_cast<double>(n)));
}

double literal_m_photon_coefficient(int photons, int p) {
    double product = 1.0;
    for (int k = photons - p; k <= 2 * photons - p; ++k) {
        product *= static_cast<double>(k);
    }
    return std::sqrt(product);
}

}  // namespace dickesim
