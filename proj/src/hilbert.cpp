// hilbert.cpp

#include "dickesim/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dickesim {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        return std::numeric_limits<std::size_t>::max();
    }
    return a * b;
}

void require_same_config(const StateVector& x, const StateVector& y, const char* what) {
    if (!(x.config() == y.config())) {
        throw std::invalid_argument(std::string(what) + ": configuration mismatch");
    }
}

void accumulate(StateVector::Amplitudes& into, const BasisLabel& label, Complex value) {
    auto [it, inserted] = into.try_emplace(label, value);
    if (!inserted) {
        it->second += value;
    }
}

}  // namespace

SpaceConfig::SpaceConfig(std::vector<ModeSpec> modes, int n_atoms,
                         AtomRepresentation representation)
    : SpaceConfig(with_ensembles(std::move(modes),
                                 n_atoms > 0 ? std::vector<int>{n_atoms} : std::vector<int>{},
                                 representation)) {
    if (n_atoms < 0) {
        throw std::invalid_argument("SpaceConfig: negative atom count");
    }
}

SpaceConfig SpaceConfig::with_ensembles(std::vector<ModeSpec> modes, std::vector<int> ensembles,
                                        AtomRepresentation representation) {
    std::set<std::string> labels;
    for (const auto& mode : modes) {
        if (mode.cutoff < 0) {
            throw std::invalid_argument("SpaceConfig: mode '" + mode.label + "' has negative cutoff");
        }
        if (!labels.insert(mode.label).second) {
            throw std::invalid_argument("SpaceConfig: duplicate mode label '" + mode.label + "'");
        }
    }
    for (int n : ensembles) {
        if (n < 1) {
            throw std::invalid_argument("SpaceConfig: ensembles must hold at least one atom");
        }
    }
    SpaceConfig config;
    config.modes_ = std::move(modes);
    config.ensembles_ = std::move(ensembles);
    config.representation_ = representation;
    return config;
}

int SpaceConfig::n_atoms() const {
    return std::accumulate(ensembles_.begin(), ensembles_.end(), 0);
}

std::size_t SpaceConfig::mode_index(std::string_view label) const {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i].label == label) {
            return i;
        }
    }
    throw std::invalid_argument("unknown mode '" + std::string(label) + "'");
}

bool SpaceConfig::has_mode(std::string_view label) const {
    return std::any_of(modes_.begin(), modes_.end(),
                       [&](const ModeSpec& m) { return m.label == label; });
}

std::size_t SpaceConfig::ensemble_offset(std::size_t x) const {
    if (x >= ensembles_.size()) {
        throw std::out_of_range("ensemble index out of range");
    }
    return static_cast<std::size_t>(
        std::accumulate(ensembles_.begin(), ensembles_.begin() + static_cast<long>(x), 0));
}

std::size_t SpaceConfig::atom_slots() const {
    return representation_ == AtomRepresentation::Symmetric
               ? ensembles_.size()
               : static_cast<std::size_t>(n_atoms());
}

std::size_t SpaceConfig::dimension() const {
    std::size_t dim = 1;
    for (const auto& mode : modes_) {
        dim = saturating_mul(dim, static_cast<std::size_t>(mode.cutoff) + 1);
    }
    for (int n : ensembles_) {
        if (representation_ == AtomRepresentation::Symmetric) {
            dim = saturating_mul(dim, static_cast<std::size_t>(n) + 1);
        } else {
            for (int k = 0; k < n; ++k) {
                dim = saturating_mul(dim, 2);
            }
        }
    }
    return dim;
}

SpaceConfig SpaceConfig::with_representation(AtomRepresentation representation) const {
    SpaceConfig copy = *this;
    copy.representation_ = representation;
    return copy;
}

bool conforms(const SpaceConfig& config, const BasisLabel& label) {
    const auto& modes = config.modes();
    if (label.fock.size() != modes.size() || label.atoms.size() != config.atom_slots()) {
        return false;
    }
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (label.fock[i] < 0 || label.fock[i] > modes[i].cutoff) {
            return false;
        }
    }
    if (config.representation() == AtomRepresentation::Symmetric) {
        for (std::size_t x = 0; x < label.atoms.size(); ++x) {
            if (label.atoms[x] < 0 || label.atoms[x] > config.ensembles()[x]) {
                return false;
            }
        }
    } else {
        for (int bit : label.atoms) {
            if (bit != 0 && bit != 1) {
                return false;
            }
        }
    }
    return true;
}

void require_conforms(const SpaceConfig& config, const BasisLabel& label) {
    if (conforms(config, label)) {
        return;
    }
    std::string text = "basis label (fock:";
    for (int n : label.fock) {
        text += ' ' + std::to_string(n);
    }
    text += "; atoms:";
    for (int a : label.atoms) {
        text += ' ' + std::to_string(a);
    }
    text += ") is outside the configured space";
    throw std::out_of_range(text);
}

std::vector<BasisLabel> enumerate_basis(const SpaceConfig& config) {
    // Odometer over (fock digits, atom digits); the last digit varies fastest,
    // which yields lexicographic order.
    std::vector<int> limits;
    for (const auto& mode : config.modes()) {
        limits.push_back(mode.cutoff);
    }
    if (config.representation() == AtomRepresentation::Symmetric) {
        limits.insert(limits.end(), config.ensembles().begin(), config.ensembles().end());
    } else {
        limits.insert(limits.end(), static_cast<std::size_t>(config.n_atoms()), 1);
    }

    std::vector<BasisLabel> basis;
    basis.reserve(config.dimension());
    std::vector<int> digits(limits.size(), 0);
    const std::size_t n_modes = config.modes().size();
    while (true) {
        BasisLabel label;
        label.fock.assign(digits.begin(), digits.begin() + static_cast<long>(n_modes));
        label.atoms.assign(digits.begin() + static_cast<long>(n_modes), digits.end());
        basis.push_back(std::move(label));

        std::size_t pos = digits.size();
        while (pos > 0) {
            --pos;
            if (digits[pos] < limits[pos]) {
                ++digits[pos];
                break;
            }
            digits[pos] = 0;
            if (pos == 0) {
                return basis;
            }
        }
        if (digits.empty()) {
            return basis;
        }
    }
}

StateVector StateVector::from_amplitudes(SpaceConfig config, Amplitudes amplitudes, bool leaked) {
    StateVector state(std::move(config));
    for (auto& [label, amp] : amplitudes) {
        require_conforms(state.config_, label);
        if (std::abs(amp) >= kPruneThreshold) {
            state.amplitudes_.emplace_hint(state.amplitudes_.end(), label, amp);
        }
    }
    state.leaked_ = leaked;
    return state;
}

Complex StateVector::amplitude(const BasisLabel& label) const {
    auto it = amplitudes_.find(label);
    return it == amplitudes_.end() ? Complex{} : it->second;
}

StateVector make_state(const SpaceConfig& config,
                       std::span<const std::pair<BasisLabel, Complex>> entries) {
    StateVector::Amplitudes amplitudes;
    for (const auto& [label, amp] : entries) {
        require_conforms(config, label);
        if (!amplitudes.emplace(label, amp).second) {
            throw std::invalid_argument("make_state: duplicate basis label");
        }
    }
    return StateVector::from_amplitudes(config, std::move(amplitudes));
}

StateVector make_state(const SpaceConfig& config,
                       std::initializer_list<std::pair<BasisLabel, Complex>> entries) {
    return make_state(config, std::span<const std::pair<BasisLabel, Complex>>(entries.begin(),
                                                                              entries.size()));
}

StateVector basis_state(const SpaceConfig& config, BasisLabel label) {
    return make_state(config, {{std::move(label), Complex{1.0, 0.0}}});
}

StateVector operator+(const StateVector& x, const StateVector& y) {
    require_same_config(x, y, "operator+");
    auto sum = x.amplitudes();
    for (const auto& [label, amp] : y.amplitudes()) {
        accumulate(sum, label, amp);
    }
    return StateVector::from_amplitudes(x.config(), std::move(sum), x.leaked() || y.leaked());
}

StateVector operator-(const StateVector& x, const StateVector& y) {
    return x + Complex{-1.0, 0.0} * y;
}

StateVector operator*(Complex scale, const StateVector& x) {
    auto scaled = x.amplitudes();
    for (auto& [label, amp] : scaled) {
        amp *= scale;
    }
    return StateVector::from_amplitudes(x.config(), std::move(scaled), x.leaked());
}

Complex inner(const StateVector& x, const StateVector& y) {
    require_same_config(x, y, "inner");
    Complex sum{};
    const auto& small = x.support_size() <= y.support_size() ? x : y;
    const auto& large = &small == &x ? y : x;
    for (const auto& [label, amp] : small.amplitudes()) {
        auto it = large.amplitudes().find(label);
        if (it == large.amplitudes().end()) {
            continue;
        }
        sum += &small == &x ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return sum;
}

double norm(const StateVector& x) {
    double sq = 0.0;
    for (const auto& [label, amp] : x.amplitudes()) {
        sq += std::norm(amp);
    }
    return std::sqrt(sq);
}

StateVector normalize(const StateVector& x) {
    const double n = norm(x);
    if (n == 0.0) {
        throw std::domain_error("normalize: zero vector");
    }
    return Complex{1.0 / n, 0.0} * x;
}

bool is_normalized(const StateVector& x, double tol) {
    return std::abs(norm(x) - 1.0) <= tol;
}

double fidelity(const StateVector& x, const StateVector& y) {
    if (!is_normalized(x) || !is_normalized(y)) {
        throw std::invalid_argument("fidelity: inputs must be normalized");
    }
    return std::clamp(std::norm(inner(x, y)), 0.0, 1.0);
}

StateVector apply_boson(const StateVector& x, std::string_view mode, BosonAction action) {
    const std::size_t idx = x.config().mode_index(mode);
    const int cutoff = x.config().modes()[idx].cutoff;
    StateVector::Amplitudes out;
    bool leaked = x.leaked();
    for (const auto& [label, amp] : x.amplitudes()) {
        const int n = label.fock[idx];
        BasisLabel next = label;
        if (action == BosonAction::Lower) {
            if (n == 0) {
                continue;
            }
            next.fock[idx] = n - 1;
            accumulate(out, next, amp * std::sqrt(static_cast<double>(n)));
        } else {
            if (n + 1 > cutoff) {
                leaked = true;
                continue;
            }
            next.fock[idx] = n + 1;
            accumulate(out, next, amp * std::sqrt(static_cast<double>(n + 1)));
        }
    }
    return StateVector::from_amplitudes(x.config(), std::move(out), leaked);
}

double mode_purity(const StateVector& x) {
    // rho_{f,f'} = sum_a x(f,a) conj(x(f',a)); purity = sum |rho_{f,f'}|^2.
    std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, Complex>>> by_atoms;
    for (const auto& [label, amp] : x.amplitudes()) {
        by_atoms[label.atoms].emplace_back(label.fock, amp);
    }
    std::map<std::pair<std::vector<int>, std::vector<int>>, Complex> rho;
    for (const auto& [atoms, column] : by_atoms) {
        for (const auto& [f1, a1] : column) {
            for (const auto& [f2, a2] : column) {
                rho[{f1, f2}] += a1 * std::conj(a2);
            }
        }
    }
    double purity = 0.0;
    for (const auto& [key, value] : rho) {
        purity += std::norm(value);
    }
    return purity;
}

}  // namespace dickesim
