// hamiltonian.cpp

#include "dickesim/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

#include "dickesim/dicke.hpp"

namespace dickesim {

namespace {

constexpr std::size_t kModeA = 0;
// Raman modes are ordered (c, b).
constexpr std::size_t kModeC = 0;
constexpr std::size_t kModeB = 1;

std::string_view mode_label(const StateVector& state, std::size_t index) {
    if (index >= state.config().modes().size()) {
        throw std::invalid_argument("interaction needs more modes than the state provides");
    }
    return state.config().modes()[index].label;
}

StateVector lower(const StateVector& s, std::size_t mode) {
    return apply_boson(s, mode_label(s, mode), BosonAction::Lower);
}

StateVector raise(const StateVector& s, std::size_t mode) {
    return apply_boson(s, mode_label(s, mode), BosonAction::Raise);
}

// Weighted collective ladder summed over ensembles.
StateVector collective(const HamiltonianSpec& spec, const StateVector& s, bool raising) {
    StateVector out(s.config());
    for (std::size_t x = 0; x < s.config().n_ensembles(); ++x) {
        const double w = spec.weight(x);
        if (w == 0.0) {
            continue;
        }
        StateVector term;
        if (s.config().representation() == AtomRepresentation::Symmetric) {
            term = raising ? apply_S10(s, x) : apply_S01(s, x);
        } else {
            term = raising ? apply_product_S10(s, x) : apply_product_S01(s, x);
        }
        out = out + Complex{w, 0.0} * term;
    }
    if (s.leaked()) {
        out = out + StateVector::from_amplitudes(s.config(), {}, true);
    }
    return out;
}

int active_excitation(const HamiltonianSpec& spec, const std::vector<int>& excitations) {
    int total = 0;
    for (std::size_t x = 0; x < excitations.size(); ++x) {
        if (spec.weight(x) != 0.0) {
            total += excitations[x];
        }
    }
    return total;
}

}  // namespace

std::string_view to_string(Interaction kind) {
    switch (kind) {
        case Interaction::OnePhoton: return "one_photon";
        case Interaction::Raman: return "raman";
        case Interaction::MPhoton: return "m_photon";
        case Interaction::ThreePhoton: return "three_photon";
    }
    return "unknown";
}

std::optional<Interaction> parse_interaction(std::string_view name) {
    for (auto kind : {Interaction::OnePhoton, Interaction::Raman, Interaction::MPhoton,
                      Interaction::ThreePhoton}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

SpaceConfig HamiltonianSpec::config() const {
    return SpaceConfig::with_ensembles(modes, ensembles, representation);
}

double HamiltonianSpec::weight(std::size_t ensemble) const {
    return ensemble_weights.empty() ? 1.0 : ensemble_weights.at(ensemble);
}

void HamiltonianSpec::validate() const {
    const std::size_t needed = kind == Interaction::Raman         ? 2
                               : kind == Interaction::ThreePhoton ? 3
                                                                  : 1;
    if (modes.size() != needed) {
        throw std::invalid_argument(std::string(to_string(kind)) + " needs exactly " +
                                    std::to_string(needed) + " mode(s)");
    }
    if (kind == Interaction::ThreePhoton) {
        if (!ensembles.empty()) {
            throw std::invalid_argument("three_photon interaction takes no atoms");
        }
    } else if (ensembles.empty()) {
        throw std::invalid_argument(std::string(to_string(kind)) + " needs at least one atom");
    }
    if (kind == Interaction::MPhoton && photons < 1) {
        throw std::invalid_argument("m_photon needs M >= 1");
    }
    if (!ensemble_weights.empty() && ensemble_weights.size() != ensembles.size()) {
        throw std::invalid_argument("ensemble_weights must match the ensemble count");
    }
    (void)config();  // validates cutoffs, labels and ensemble sizes
}

HamiltonianSpec one_photon_spec(int n_atoms, double g, int cutoff, AtomRepresentation rep) {
    return {Interaction::OnePhoton, 1, g, {{"a", cutoff}}, {n_atoms}, rep, {}};
}

HamiltonianSpec raman_spec(int n_atoms, double f, int cutoff_c, int cutoff_b,
                           AtomRepresentation rep) {
    return {Interaction::Raman, 1, f, {{"c", cutoff_c}, {"b", cutoff_b}}, {n_atoms}, rep, {}};
}

HamiltonianSpec m_photon_spec(int photons, int n_atoms, double g, int cutoff,
                              AtomRepresentation rep) {
    return {Interaction::MPhoton, photons, g, {{"a", cutoff}}, {n_atoms}, rep, {}};
}

HamiltonianSpec three_photon_spec(double f, int cutoff_a, int cutoff_b, int cutoff_c) {
    return {Interaction::ThreePhoton, 1, f, {{"a", cutoff_a}, {"b", cutoff_b}, {"c", cutoff_c}},
            {}, AtomRepresentation::Symmetric, {}};
}

std::vector<int> ensemble_excitations(const SpaceConfig& config, const BasisLabel& label) {
    if (config.representation() == AtomRepresentation::Symmetric) {
        return label.atoms;
    }
    std::vector<int> out(config.n_ensembles(), 0);
    for (std::size_t x = 0; x < config.n_ensembles(); ++x) {
        const std::size_t begin = config.ensemble_offset(x);
        for (int k = 0; k < config.ensembles()[x]; ++k) {
            out[x] += label.atoms[begin + static_cast<std::size_t>(k)];
        }
    }
    return out;
}

std::vector<int> conserved_quantities(const HamiltonianSpec& spec, const BasisLabel& label) {
    const auto exc = ensemble_excitations(spec.config(), label);
    const int m = active_excitation(spec, exc);
    const auto& n = label.fock;
    std::vector<int> q;
    switch (spec.kind) {
        case Interaction::OnePhoton: q = {n[kModeA] + m}; break;
        case Interaction::Raman: q = {n[kModeB] + m, n[kModeB] + n[kModeC]}; break;
        case Interaction::MPhoton: q = {n[kModeA] + spec.photons * m}; break;
        case Interaction::ThreePhoton: q = {n[0] + n[1], n[0] + n[2]}; break;
    }
    // Switched-off ensembles keep their own excitation.
    for (std::size_t x = 0; x < exc.size(); ++x) {
        if (spec.weight(x) == 0.0) {
            q.push_back(exc[x]);
        }
    }
    return q;
}

std::vector<int> max_reachable_occupation(const HamiltonianSpec& spec, const BasisLabel& label) {
    const auto q = conserved_quantities(spec, label);
    switch (spec.kind) {
        case Interaction::OnePhoton:
        case Interaction::MPhoton:
            return {q[0]};
        case Interaction::Raman:
            // n_c <= n_b + n_c; n_b <= min(n_b + n_c, n_b + m)
            return {q[1], std::min(q[0], q[1])};
        case Interaction::ThreePhoton:
            return {std::min(q[0], q[1]), q[0], q[1]};
    }
    return {};
}

StateVector apply_h(const HamiltonianSpec& spec, const StateVector& s) {
    const Complex c{spec.coupling, 0.0};
    switch (spec.kind) {
        case Interaction::OnePhoton: return c * lower(s, kModeA);
        case Interaction::Raman: return c * raise(lower(s, kModeB), kModeC);
        case Interaction::MPhoton: {
            StateVector out = s;
            for (int k = 0; k < spec.photons; ++k) {
                out = lower(out, kModeA);
            }
            return collective(spec, out, true);
        }
        case Interaction::ThreePhoton: return raise(lower(lower(s, 2), 1), 0);
    }
    throw std::logic_error("apply_h: unknown interaction");
}

StateVector apply_h_dagger(const HamiltonianSpec& spec, const StateVector& s) {
    const Complex c{spec.coupling, 0.0};
    switch (spec.kind) {
        case Interaction::OnePhoton: return c * raise(s, kModeA);
        case Interaction::Raman: return c * raise(lower(s, kModeC), kModeB);
        case Interaction::MPhoton: {
            StateVector out = collective(spec, s, false);
            for (int k = 0; k < spec.photons; ++k) {
                out = raise(out, kModeA);
            }
            return out;
        }
        case Interaction::ThreePhoton: return raise(raise(lower(s, 0), 1), 2);
    }
    throw std::logic_error("apply_h_dagger: unknown interaction");
}

StateVector apply_pi(const HamiltonianSpec& spec, const StateVector& s) {
    switch (spec.kind) {
        case Interaction::OnePhoton:
        case Interaction::Raman: return collective(spec, s, false);
        case Interaction::MPhoton:
        case Interaction::ThreePhoton: return Complex{spec.coupling, 0.0} * s;
    }
    throw std::logic_error("apply_pi: unknown interaction");
}

StateVector apply_pi_dagger(const HamiltonianSpec& spec, const StateVector& s) {
    switch (spec.kind) {
        case Interaction::OnePhoton:
        case Interaction::Raman: return collective(spec, s, true);
        case Interaction::MPhoton:
        case Interaction::ThreePhoton: return Complex{spec.coupling, 0.0} * s;
    }
    throw std::logic_error("apply_pi_dagger: unknown interaction");
}

}  // namespace dickesim
