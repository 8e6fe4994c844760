// protocols.cpp

#include "dickesim/protocols.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "dickesim/closedform.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/hamiltonian.hpp"

namespace dickesim {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

void require_atoms(int n_atoms) {
    if (n_atoms < 1) {
        throw std::invalid_argument("ensembles need at least one atom");
    }
}

void require_qubit(Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("qubit amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    }
}

SpaceConfig photon_config(int n_atoms) { return SpaceConfig({{"a", 1}}, n_atoms); }

SpaceConfig raman_config(std::vector<int> ensembles) {
    return SpaceConfig::with_ensembles({{"c", 1}, {"b", 1}}, std::move(ensembles),
                                       AtomRepresentation::Symmetric);
}

double probability(const StateVector& state, const BasisLabel& label) {
    return std::norm(state.amplitude(label));
}

}  // namespace

double Schedule::total_time() const {
    return std::accumulate(steps.begin(), steps.end(), 0.0,
                           [](double acc, const ScheduleStep& s) { return acc + s.duration; });
}

int EnsembleChain::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

void EnsembleChain::validate() const {
    if (sizes.empty()) {
        throw std::invalid_argument("atomic chain needs at least one ensemble");
    }
    for (int n : sizes) {
        if (n < 1) {
            throw std::invalid_argument("chain ensembles need at least one atom");
        }
    }
}

ProtocolResult prepare_w(int n_atoms, double g, bool disentangle) {
    require_atoms(n_atoms);
    require_positive(g, "g");
    const auto config = photon_config(n_atoms);
    const double t_star = kHalfPi / (g * std::sqrt(n_atoms));
    const auto photon = basis_state(config, {{1}, {0}});
    const auto w_state = basis_state(config, {{0}, {1}});

    ProtocolResult result;
    result.protocol = disentangle ? "disentangle" : "prepare_w";
    result.params = {{"n_atoms", n_atoms}, {"g", g}};
    if (disentangle) {
        result.final_state = evolve_one_photon(w_state, {g, -t_star});
        result.fidelity = fidelity(result.final_state, photon);
        result.schedule.steps.push_back({"one_photon_reversed", {0}, t_star});
    } else {
        result.final_state = evolve_one_photon(photon, {g, t_star});
        result.fidelity = fidelity(result.final_state, w_state);
        result.schedule.steps.push_back({"one_photon", {0}, t_star});
    }
    return result;
}

ProtocolResult ladder_step(int m, int n_atoms, double f, int direction,
                           std::optional<double> theta) {
    require_atoms(n_atoms);
    require_positive(f, "f");
    if (direction != 1 && direction != -1) {
        throw std::invalid_argument("ladder_step: direction must be +1 or -1");
    }
    if (m < 0 || m > n_atoms || m + direction < 0 || m + direction > n_atoms) {
        throw std::out_of_range("ladder_step: m and m + direction must lie in [0, N]");
    }
    const auto config = raman_config({n_atoms});
    const double angle = theta.value_or(kHalfPi);
    const auto rates = raman_angles(m, n_atoms, {f, 1.0});
    // Raising starts from one b photon, lowering from one c photon.
    const double rate = direction > 0 ? rates.theta / f : rates.theta_prime / f;
    const double duration = angle / (f * rate);

    const auto input = direction > 0 ? basis_state(config, {{0, 1}, {m}})
                                     : basis_state(config, {{1, 0}, {m}});
    const auto target = direction > 0 ? basis_state(config, {{1, 0}, {m + 1}})
                                      : basis_state(config, {{0, 1}, {m - 1}});

    ProtocolResult result;
    result.protocol = "ladder_step";
    result.params = {{"m", m},
                     {"n_atoms", n_atoms},
                     {"f", f},
                     {"direction", direction},
                     {"theta", angle}};
    result.final_state = evolve_raman(input, {f, duration});
    result.fidelity = fidelity(result.final_state, target);
    result.success_probability = probability(result.final_state, target.amplitudes().begin()->first);
    result.schedule.steps.push_back({"raman", {0}, duration});
    return result;
}

ProtocolResult store_qubit(Complex alpha, Complex beta, int n_atoms, double g) {
    require_atoms(n_atoms);
    require_positive(g, "g");
    require_qubit(alpha, beta);
    const auto config = photon_config(n_atoms);
    const double t_star = kHalfPi / (g * std::sqrt(n_atoms));
    const auto input = make_state(config, {{{{1}, {0}}, alpha}, {{{0}, {0}}, beta}});
    const auto target = make_state(config, {{{{0}, {1}}, alpha}, {{{0}, {0}}, beta}});

    ProtocolResult result;
    result.protocol = "store_qubit";
    result.params = {{"alpha_re", alpha.real()}, {"alpha_im", alpha.imag()},
                     {"beta_re", beta.real()},   {"beta_im", beta.imag()},
                     {"n_atoms", n_atoms}, {"g", g}};
    result.final_state = evolve_one_photon(input, {g, t_star});
    result.fidelity = fidelity(result.final_state, target);
    result.schedule.steps.push_back({"one_photon", {0}, t_star});
    return result;
}

ProtocolResult roundtrip_qubit(Complex alpha, Complex beta, int n_atoms, double g) {
    ProtocolResult result = store_qubit(alpha, beta, n_atoms, g);
    const double t_star = result.schedule.steps.front().duration;
    result.protocol = "roundtrip_qubit";
    result.final_state = evolve_one_photon(result.final_state, {g, -t_star});
    result.fidelity = optical_fidelity(result.final_state, {{{1}, alpha}, {{0}, beta}});
    result.schedule.steps.push_back({"one_photon_reversed", {0}, t_star});
    return result;
}

ProtocolResult store_entangled_pair(Complex alpha, Complex beta, int n_atoms, double f,
                                    std::optional<double> theta0) {
    require_atoms(n_atoms);
    require_positive(f, "f");
    require_qubit(alpha, beta);
    const auto config = raman_config({n_atoms});
    const double angle = theta0.value_or(kHalfPi);
    const double duration = angle / (f * std::sqrt(n_atoms));
    const auto input = make_state(config, {{{{0, 1}, {0}}, alpha}, {{{1, 0}, {0}}, beta}});
    const auto target = make_state(config, {{{{1, 0}, {1}}, alpha}, {{{1, 0}, {0}}, beta}});

    ProtocolResult result;
    result.protocol = "store_entangled_pair";
    result.params = {{"alpha_re", alpha.real()}, {"alpha_im", alpha.imag()},
                     {"beta_re", beta.real()},   {"beta_im", beta.imag()},
                     {"n_atoms", n_atoms}, {"f", f}, {"theta0", angle}};
    result.final_state = evolve_raman(input, {f, duration});
    result.fidelity = fidelity(result.final_state, target);
    result.schedule.steps.push_back({"raman", {0}, duration});
    return result;
}

ProtocolResult roundtrip_entangled_pair(Complex alpha, Complex beta, int n_atoms, double f) {
    ProtocolResult result = store_entangled_pair(alpha, beta, n_atoms, f);
    const double duration = result.schedule.steps.front().duration;
    result.protocol = "roundtrip_entangled_pair";
    result.final_state = evolve_raman(result.final_state, {f, -duration});
    result.fidelity = optical_fidelity(result.final_state, {{{0, 1}, alpha}, {{1, 0}, beta}});
    result.schedule.steps.push_back({"raman_reversed", {0}, duration});
    return result;
}

ProtocolResult cascade(int n1, int n2, double g1, double g2, double t1, double t2) {
    require_atoms(n1);
    require_atoms(n2);
    require_positive(g1, "g1");
    require_positive(g2, "g2");
    if (t1 < 0.0 || t2 < 0.0) {
        throw std::invalid_argument("cascade: durations must be non-negative");
    }
    const auto config = SpaceConfig::with_ensembles({{"a", 1}}, {n1, n2}, AtomRepresentation::Symmetric);
    const auto input = basis_state(config, {{1}, {0, 0}});

    ProtocolResult result;
    result.protocol = "cascade";
    result.params = {{"n1", n1}, {"n2", n2},
                     {"g1", g1}, {"g2", g2}, {"t1", t1}, {"t2", t2}};
    const auto after_first = evolve_one_photon(input, {g1, t1}, 0);
    result.final_state = evolve_one_photon(after_first, {g2, t2}, 1);
    result.schedule.steps = {{"one_photon", {0}, t1}, {"one_photon", {1}, t2}};

    const double th1 = g1 * t1 * std::sqrt(n1);
    const double th2 = g2 * t2 * std::sqrt(n2);
    const double c1 = std::cos(th1), s1 = std::sin(th1), c2 = std::cos(th2), s2 = std::sin(th2);
    StateVector::Amplitudes formula{{{{1}, {0, 0}}, c1 * c2}, {{{0}, {1, 0}}, s1}, {{{0}, {0, 1}}, c1 * s2}};
    result.fidelity = fidelity(result.final_state,
                               StateVector::from_amplitudes(config, std::move(formula)));
    return result;
}

ProtocolResult chain_evolution(const EnsembleChain& chain, double f, double t, Complex alpha,
                               Complex beta) {
    chain.validate();
    require_positive(f, "f");
    require_qubit(alpha, beta);
    const auto config = raman_config(chain.sizes);
    const std::vector<int> ground(chain.sizes.size(), 0);

    // The chain is the Raman invariant pair with S summed over all ensembles:
    // Phi = |01>|O>, Phi_dagger = |10>|O>.
    HamiltonianSpec spec{Interaction::Raman, 1, f, config.modes(), chain.sizes,
                         AtomRepresentation::Symmetric, {}};
    const auto phi = basis_state(config, {{0, 1}, ground});
    const auto phi_dag = basis_state(config, {{1, 0}, ground});

    ProtocolResult result;
    result.protocol = "chain";
    result.params = {{"sizes", chain.sizes}, {"f", f}, {"t", t},
                     {"alpha_re", alpha.real()}, {"alpha_im", alpha.imag()},
                     {"beta_re", beta.real()},   {"beta_im", beta.imag()}};
    result.final_state = evolve_pair_state(spec, phi, phi_dag, alpha, beta, t);
    result.schedule.steps.push_back({"raman_chain", {}, t});
    for (std::size_t x = 0; x < chain.sizes.size(); ++x) {
        result.schedule.steps.back().targets.push_back(static_cast<int>(x));
    }

    // Target: the chain W state |C^> with amplitude sqrt(N_x/N') per ensemble.
    const double total = chain.total();
    StateVector::Amplitudes target{{{{1, 0}, ground}, beta}};
    for (std::size_t x = 0; x < chain.sizes.size(); ++x) {
        auto excited = ground;
        excited[x] = 1;
        target[{{1, 0}, excited}] = alpha * std::sqrt(chain.sizes[x] / total);
    }
    result.fidelity = fidelity(result.final_state, StateVector::from_amplitudes(config, std::move(target)));
    const double theta0 = f * t * std::sqrt(total);
    result.success_probability = std::norm(alpha) * std::sin(theta0) * std::sin(theta0);
    return result;
}

std::vector<double> ensemble_excitation_probabilities(const StateVector& state) {
    const auto& config = state.config();
    std::vector<double> out(config.n_ensembles(), 0.0);
    for (const auto& [label, amp] : state.amplitudes()) {
        const auto exc = ensemble_excitations(config, label);
        for (std::size_t x = 0; x < exc.size(); ++x) {
            if (exc[x] == 1) {
                out[x] += std::norm(amp);
            }
        }
    }
    return out;
}

double optical_fidelity(const StateVector& state,
                        const std::vector<std::pair<std::vector<int>, Complex>>& light) {
    // sum over atomic labels a of |sum_f conj(psi_f) x(f, a)|^2
    std::map<std::vector<int>, Complex> light_amp(light.begin(), light.end());
    std::map<std::vector<int>, Complex> overlap;
    for (const auto& [label, amp] : state.amplitudes()) {
        auto it = light_amp.find(label.fock);
        if (it != light_amp.end()) {
            overlap[label.atoms] += std::conj(it->second) * amp;
        }
    }
    double total = 0.0;
    for (const auto& [atoms, value] : overlap) {
        total += std::norm(value);
    }
    return total;
}

}  // namespace dickesim
