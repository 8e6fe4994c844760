// dicke.cpp

#include "dickesim/dicke.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace dickesim {

namespace {

void require_representation(const StateVector& state, AtomRepresentation rep, const char* what) {
    if (state.config().representation() != rep) {
        throw std::invalid_argument(
            std::string(what) + (rep == AtomRepresentation::Symmetric
                                     ? ": requires the symmetric-sector representation"
                                     : ": requires the full product representation"));
    }
}

// Shift m on one ensemble by `step` with the normalized ladder coefficient.
StateVector collective_ladder(const StateVector& state, std::size_t ensemble, int step) {
    require_representation(state, AtomRepresentation::Symmetric, step > 0 ? "apply_S10" : "apply_S01");
    const auto& config = state.config();
    if (ensemble >= config.n_ensembles()) {
        throw std::out_of_range("collective ladder: ensemble index out of range");
    }
    const int n = config.ensembles()[ensemble];
    StateVector::Amplitudes out;
    for (const auto& [label, amp] : state.amplitudes()) {
        const int m = label.atoms[ensemble];
        const double coeff = step > 0 ? std::sqrt(static_cast<double>((m + 1) * (n - m)))
                                      : std::sqrt(static_cast<double>(m * (n - m + 1)));
        if (coeff == 0.0) {
            continue;
        }
        BasisLabel next = label;
        next.atoms[ensemble] = m + step;
        out[next] += amp * coeff;
    }
    return StateVector::from_amplitudes(config, std::move(out), state.leaked());
}

StateVector product_ladder(const StateVector& state, std::size_t ensemble, int from, int to) {
    require_representation(state, AtomRepresentation::FullProduct, "product ladder");
    const auto& config = state.config();
    const std::size_t begin = config.ensemble_offset(ensemble);
    const std::size_t end = begin + static_cast<std::size_t>(config.ensembles()[ensemble]);
    StateVector::Amplitudes out;
    for (const auto& [label, amp] : state.amplitudes()) {
        for (std::size_t k = begin; k < end; ++k) {
            if (label.atoms[k] != from) {
                continue;
            }
            BasisLabel next = label;
            next.atoms[k] = to;
            out[next] += amp;
        }
    }
    return StateVector::from_amplitudes(config, std::move(out), state.leaked());
}

int weight(const std::vector<int>& bits, std::size_t begin, std::size_t end) {
    int w = 0;
    for (std::size_t k = begin; k < end; ++k) {
        w += bits[k];
    }
    return w;
}

}  // namespace

std::uint64_t dicke_norm_sq(int n_atoms, int m) {
    if (n_atoms < 0 || n_atoms > kMaxBinomialAtoms) {
        throw std::out_of_range("dicke_norm_sq: N must lie in [0, " +
                                std::to_string(kMaxBinomialAtoms) + "]");
    }
    if (m < 0 || m > n_atoms) {
        throw std::out_of_range("dicke_norm_sq: m must lie in [0, N]");
    }
    const int k = m < n_atoms - m ? m : n_atoms - m;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (N-k+i) is divisible by i at every step.
        r = r * static_cast<unsigned>(n_atoms - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(r);
}

StateVector apply_S10(const StateVector& state, std::size_t ensemble) {
    return collective_ladder(state, ensemble, +1);
}

StateVector apply_S01(const StateVector& state, std::size_t ensemble) {
    return collective_ladder(state, ensemble, -1);
}

StateVector apply_product_S10(const StateVector& state, std::size_t ensemble) {
    return product_ladder(state, ensemble, 0, 1);
}

StateVector apply_product_S01(const StateVector& state, std::size_t ensemble) {
    return product_ladder(state, ensemble, 1, 0);
}

StateVector expand_to_product(int m, int n_atoms) {
    if (n_atoms < 0 || n_atoms > kMaxExpandAtoms) {
        throw std::length_error("expand_to_product: N must lie in [0, " +
                                std::to_string(kMaxExpandAtoms) + "]");
    }
    if (m < 0 || m > n_atoms) {
        throw std::out_of_range("expand_to_product: m must lie in [0, N]");
    }
    const SpaceConfig config({}, n_atoms, AtomRepresentation::FullProduct);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dicke_norm_sq(n_atoms, m)));
    StateVector::Amplitudes out;
    const std::uint64_t total = std::uint64_t{1} << n_atoms;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        if (std::popcount(bits) != m) {
            continue;
        }
        BasisLabel label;
        label.atoms.resize(static_cast<std::size_t>(n_atoms));
        // Leftmost atom is the most significant bit.
        for (int k = 0; k < n_atoms; ++k) {
            label.atoms[static_cast<std::size_t>(k)] =
                static_cast<int>((bits >> (n_atoms - 1 - k)) & 1U);
        }
        out.emplace(std::move(label), Complex{amp, 0.0});
    }
    return StateVector::from_amplitudes(config, std::move(out));
}

SectorProjection project_to_sector(const StateVector& state) {
    require_representation(state, AtomRepresentation::FullProduct, "project_to_sector");
    const auto& config = state.config();
    const std::size_t n_ens = config.n_ensembles();

    struct Group {
        Complex sum{};
        double present = 0.0;
        double multiplicity = 1.0;  // product of C(N_x, w_x)
    };
    // Keyed by (fock, per-ensemble excitation weights).
    auto key_of = [&](const BasisLabel& label) {
        BasisLabel key{label.fock, std::vector<int>(n_ens)};
        for (std::size_t x = 0; x < n_ens; ++x) {
            const std::size_t begin = config.ensemble_offset(x);
            key.atoms[x] = weight(label.atoms, begin,
                                  begin + static_cast<std::size_t>(config.ensembles()[x]));
        }
        return key;
    };

    std::map<BasisLabel, Group> groups;
    for (const auto& [label, amp] : state.amplitudes()) {
        auto& g = groups[key_of(label)];
        g.sum += amp;
        g.present += 1.0;
    }
    for (auto& [key, g] : groups) {
        for (std::size_t x = 0; x < n_ens; ++x) {
            g.multiplicity *= static_cast<double>(dicke_norm_sq(config.ensembles()[x], key.atoms[x]));
        }
    }

    // Within a group the symmetric component is the mean amplitude; the residual
    // is the spread around it, counting absent labels as zero amplitude.
    double residual_sq = 0.0;
    for (const auto& [label, amp] : state.amplitudes()) {
        const auto& g = groups.at(key_of(label));
        residual_sq += std::norm(amp - g.sum / g.multiplicity);
    }
    StateVector::Amplitudes projected;
    for (const auto& [key, g] : groups) {
        residual_sq += (g.multiplicity - g.present) * std::norm(g.sum / g.multiplicity);
        projected.emplace(key, g.sum / std::sqrt(g.multiplicity));
    }
    const SpaceConfig sym = config.with_representation(AtomRepresentation::Symmetric);
    return {StateVector::from_amplitudes(sym, std::move(projected), state.leaked()),
            std::sqrt(residual_sq)};
}

StateVector expand_symmetric_state(const StateVector& state, int max_atoms) {
    require_representation(state, AtomRepresentation::Symmetric, "expand_symmetric_state");
    const auto& config = state.config();
    if (config.n_atoms() > max_atoms) {
        throw std::length_error("expand_symmetric_state: " + std::to_string(config.n_atoms()) +
                                " atoms exceed the guard of " + std::to_string(max_atoms));
    }
    const SpaceConfig product = config.with_representation(AtomRepresentation::FullProduct);

    // Cache the per-ensemble expansions.
    std::map<std::pair<int, int>, StateVector> cache;
    auto expansion = [&](int m, int n) -> const StateVector& {
        auto it = cache.find({m, n});
        if (it == cache.end()) {
            it = cache.emplace(std::make_pair(m, n), expand_to_product(m, n)).first;
        }
        return it->second;
    };

    StateVector::Amplitudes out;
    for (const auto& [label, amp] : state.amplitudes()) {
        // Cartesian product of the per-ensemble bitstring expansions.
        std::vector<std::pair<std::vector<int>, Complex>> partial{{{}, amp}};
        for (std::size_t x = 0; x < config.n_ensembles(); ++x) {
            const auto& piece = expansion(label.atoms[x], config.ensembles()[x]);
            std::vector<std::pair<std::vector<int>, Complex>> next;
            next.reserve(partial.size() * piece.support_size());
            for (const auto& [bits, a] : partial) {
                for (const auto& [plabel, pamp] : piece.amplitudes()) {
                    auto joined = bits;
                    joined.insert(joined.end(), plabel.atoms.begin(), plabel.atoms.end());
                    next.emplace_back(std::move(joined), a * pamp);
                }
            }
            partial = std::move(next);
        }
        for (auto& [bits, a] : partial) {
            out[BasisLabel{label.fock, std::move(bits)}] += a;
        }
    }
    return StateVector::from_amplitudes(product, std::move(out), state.leaked());
}

Complex to_unnormalized_coefficient(Complex normalized_amplitude, int n_atoms, int m) {
    // a |m>^ = a / sqrt(C) |m;N>
    return normalized_amplitude / std::sqrt(static_cast<double>(dicke_norm_sq(n_atoms, m)));
}

Complex from_unnormalized_coefficient(Complex coefficient, int n_atoms, int m) {
    return coefficient * std::sqrt(static_cast<double>(dicke_norm_sq(n_atoms, m)));
}

}  // namespace dickesim
