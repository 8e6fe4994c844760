#include "property_checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "dickesim/closedform.hpp"
#include "dickesim/hamiltonian.hpp"
#include "dickesim/oracle.hpp"

namespace props {

using namespace dickesim;

namespace {

using Evolve = std::function<StateVector(const StateVector&, double)>;

double max_diff(const StateVector& a, const StateVector& b) {
    double out = 0.0;
    for (const auto& [label, amp] : a.amplitudes()) out = std::max(out, std::abs(amp - b.amplitude(label)));
    for (const auto& [label, amp] : b.amplitudes()) out = std::max(out, std::abs(amp - a.amplitude(label)));
    return out;
}

double conservation_drift(const HamiltonianSpec& spec, const StateVector& before, const StateVector& after) {
    const auto q0 = conserved_expectations(spec, before);
    const auto q1 = conserved_expectations(spec, after);
    double out = 0.0;
    for (std::size_t k = 0; k < q0.size(); ++k) out = std::max(out, std::abs(q0[k] - q1[k]));
    return out;
}

CaseResult group_laws(const std::string& family, const HamiltonianSpec& spec, const StateVector& psi0,
                      const Evolve& evolve, Rng& rng) {
    const double t1 = random_uniform(rng, -2.0, 2.0);
    const double t2 = random_uniform(rng, -2.0, 2.0);
    const auto psi1 = evolve(psi0, t1);
    CaseResult r{family};
    r.norm_drift = std::abs(norm(psi1) - 1.0);
    r.composition = max_diff(evolve(psi1, t2), evolve(psi0, t1 + t2));
    r.reversal = max_diff(evolve(psi1, -t1), psi0);
    r.conservation = conservation_drift(spec, psi0, psi1);
    return r;
}

// Evolution confined to span{phi, phi_dag}, driven through amplitude pairs.
Evolve on_pair(const StatePair& pair, std::function<AmplitudePair(Complex, Complex, double)> rotate) {
    return [pair, rotate](const StateVector& s, double t) {
        const auto r = rotate(inner(pair.phi, s), inner(pair.phi_dag, s), t);
        return r.first * pair.phi + r.second * pair.phi_dag;
    };
}

CaseResult one_photon_case(Rng& rng) {
    const int n = random_int(rng, 1, 8);
    const double g = random_uniform(rng, 0.3, 1.5);
    const auto spec = one_photon_spec(n, g);
    const auto psi0 = random_state(rng, spec.config(), {{{1}, {0}}, {{0}, {1}}, {{0}, {0}}});
    return group_laws("one_photon", spec, psi0, [g](const StateVector& s, double t) {
        return evolve_one_photon(s, {g, t});
    }, rng);
}

CaseResult raman_case(Rng& rng) {
    const int n = random_int(rng, 1, 6);
    const double f = random_uniform(rng, 0.3, 1.5);
    const auto spec = raman_spec(n, f);
    std::vector<BasisLabel> support;
    for (int m = 0; m <= n; ++m) {
        support.push_back({{0, 1}, {m}});
        support.push_back({{1, 0}, {m}});
    }
    const auto psi0 = random_state(rng, spec.config(), support);
    return group_laws("raman", spec, psi0, [f](const StateVector& s, double t) { return evolve_raman(s, {f, t}); },
                      rng);
}

struct PairSetup {
    HamiltonianSpec spec;
    StatePair pair;
    int photons = 0, p = 0, n = 0;
};

PairSetup scalar_pi_pair(Rng& rng, bool three_photon) {
    const double g = random_uniform(rng, 0.3, 1.5);
    if (three_photon) {
        const int n = random_int(rng, 1, 4);
        return {three_photon_spec(g, 1, 1, n), three_photon_pair(n), 0, 0, n};
    }
    const int photons = random_int(rng, 1, 3);
    const int p = random_int(rng, 1, photons);
    const int n = random_int(rng, 1, 3);
    return {m_photon_pair_spec(photons, p, n, g), m_photon_pair(photons, p, n), photons, p, n};
}

CaseResult pair_closed_case(Rng& rng) {
    const auto setup = scalar_pi_pair(rng, random_int(rng, 0, 1) == 1);
    const auto psi0 = random_state(rng, setup.pair.phi.config(),
                                   {setup.pair.phi.amplitudes().begin()->first,
                                    setup.pair.phi_dag.amplitudes().begin()->first});
    const auto spec = setup.spec;
    const auto pair = setup.pair;
    return group_laws("pair_closed", spec, psi0, [spec, pair](const StateVector& s, double t) {
        return evolve_pair_state(spec, pair.phi, pair.phi_dag, inner(pair.phi, s), inner(pair.phi_dag, s), t);
    }, rng);
}

// The raised and lowered partners leave span{Phi, Phi_dagger}, so the group law
// is checked through <psi(-t2)|psi(t1)> = <psi(0)|psi(t1 + t2)>.
CaseResult pair_open_case(Rng& rng) {
    const int n = random_int(rng, 1, 6);
    const double g = random_uniform(rng, 0.3, 1.5);
    HamiltonianSpec spec;
    StateVector phi, phi_dag;
    if (random_int(rng, 0, 1) == 0) {
        spec = one_photon_spec(n, g);
        phi = basis_state(spec.config(), {{1}, {0}});
        phi_dag = basis_state(spec.config(), {{0}, {0}});
    } else {
        spec = raman_spec(n, g);
        const int m = random_int(rng, 0, n);
        phi = basis_state(spec.config(), {{0, 1}, {m}});
        phi_dag = basis_state(spec.config(), {{1, 0}, {m}});
    }
    const auto psi0 = random_state(rng, spec.config(),
                                   {phi.amplitudes().begin()->first, phi_dag.amplitudes().begin()->first});
    const Complex c = inner(phi, psi0), e = inner(phi_dag, psi0);
    const auto psi = [&](double t) { return evolve_pair_state(spec, phi, phi_dag, c, e, t); };
    const double t1 = random_uniform(rng, -2.0, 2.0);
    const double t2 = random_uniform(rng, -2.0, 2.0);
    const auto psi1 = psi(t1);
    CaseResult r{"pair_open"};
    r.norm_drift = std::abs(norm(psi1) - 1.0);
    r.composition = std::abs(inner(psi(-t2), psi1) - inner(psi0, psi(t1 + t2)));
    r.reversal = -1.0;
    r.conservation = conservation_drift(spec, psi0, psi1);
    return r;
}

CaseResult m_photon_case(Rng& rng) {
    const auto setup = scalar_pi_pair(rng, false);
    const double g = setup.spec.coupling;
    const auto psi0 = random_state(rng, setup.pair.phi.config(),
                                   {setup.pair.phi.amplitudes().begin()->first,
                                    setup.pair.phi_dag.amplitudes().begin()->first});
    return group_laws("m_photon", setup.spec, psi0,
                      on_pair(setup.pair,
                              [setup, g](Complex c, Complex e, double t) {
                                  return evolve_m_photon(setup.photons, setup.p, setup.n, c, e, {g, t});
                              }),
                      rng);
}

CaseResult three_photon_case(Rng& rng) {
    const auto setup = scalar_pi_pair(rng, true);
    const double f = setup.spec.coupling;
    const auto psi0 = random_state(rng, setup.pair.phi.config(),
                                   {setup.pair.phi.amplitudes().begin()->first,
                                    setup.pair.phi_dag.amplitudes().begin()->first});
    return group_laws("three_photon", setup.spec, psi0,
                      on_pair(setup.pair,
                              [setup, f](Complex c, Complex e, double t) {
                                  return evolve_three_photon(setup.n, c, e, {f, t});
                              }),
                      rng);
}

HamiltonianSpec random_oracle_spec(Rng& rng) {
    const auto rep = random_int(rng, 0, 1) ? AtomRepresentation::FullProduct : AtomRepresentation::Symmetric;
    const double g = random_uniform(rng, 0.3, 1.5);
    switch (random_int(rng, 0, 3)) {
        case 0: return one_photon_spec(random_int(rng, 1, 4), g, random_int(rng, 1, 3), rep);
        case 1: return raman_spec(random_int(rng, 1, 4), g, random_int(rng, 1, 2), random_int(rng, 1, 2), rep);
        case 2: {
            const int photons = random_int(rng, 1, 2);
            return m_photon_spec(photons, random_int(rng, 1, 3), g, random_int(rng, photons, 2 * photons + 1), rep);
        }
        default: return three_photon_spec(g, random_int(rng, 1, 3), random_int(rng, 1, 3), random_int(rng, 1, 3));
    }
}

CaseResult oracle_case(Rng& rng) {
    const auto spec = random_oracle_spec(rng);
    const ExactPropagator prop(build_hamiltonian(spec));
    std::map<std::vector<int>, std::vector<BasisLabel>> sectors;
    for (const auto& label : prop.op().basis) sectors[conserved_quantities(spec, label)].push_back(label);

    std::vector<std::vector<BasisLabel>> safe;
    for (auto& [key, labels] : sectors) {
        try {
            for (const auto& label : labels) require_no_leakage(spec, basis_state(prop.op().config, label));
            safe.push_back(labels);
        } catch (const std::domain_error&) {
        }
    }
    if (safe.empty()) throw std::logic_error("oracle_case: no leak-free sector");
    std::vector<BasisLabel> support = safe[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(safe.size()) - 1))];
    const auto& extra = safe[static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(safe.size()) - 1))];
    for (const auto& label : extra) {
        if (std::find(support.begin(), support.end(), label) == support.end()) support.push_back(label);
    }
    const auto psi0 = random_state(rng, prop.op().config, support);
    return group_laws("oracle", spec, psi0, [&prop](const StateVector& s, double t) { return prop.evolve(s, t); },
                      rng);
}

}  // namespace

Complex random_complex(Rng& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    return {d(rng), d(rng)};
}

double random_uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

StateVector random_state(Rng& rng, const SpaceConfig& config, const std::vector<BasisLabel>& support) {
    std::vector<std::pair<BasisLabel, Complex>> entries;
    for (const auto& label : support) entries.emplace_back(label, random_complex(rng));
    return normalize(make_state(config, entries));
}

const std::vector<std::string>& families() {
    static const std::vector<std::string> names{"one_photon", "raman", "pair_closed", "pair_open",
                                                "m_photon", "three_photon", "oracle"};
    return names;
}

CaseResult run_case(const std::string& family, Rng& rng) {
    if (family == "one_photon") return one_photon_case(rng);
    if (family == "raman") return raman_case(rng);
    if (family == "pair_closed") return pair_closed_case(rng);
    if (family == "pair_open") return pair_open_case(rng);
    if (family == "m_photon") return m_photon_case(rng);
    if (family == "three_photon") return three_photon_case(rng);
    if (family == "oracle") return oracle_case(rng);
    throw std::invalid_argument("unknown property family " + family);
}

Summary run_suite(std::uint32_t seed, int cases) {
    Rng rng(seed);
    Summary s;
    for (int i = 0; i < cases; ++i) {
        const auto r = run_case(families()[static_cast<std::size_t>(i) % families().size()], rng);
        ++s.cases;
        s.norm_drift = std::max(s.norm_drift, r.norm_drift);
        s.composition = std::max(s.composition, r.composition);
        s.reversal = std::max(s.reversal, r.reversal);
        s.conservation = std::max(s.conservation, r.conservation);
    }
    return s;
}

}  // namespace props
