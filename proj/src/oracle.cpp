// oracle.cpp

#include "dickesim/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dickesim/dicke.hpp"

namespace dickesim {

namespace {

using Term = std::pair<BasisLabel, double>;

double falling_sqrt(int n, int k) {
    // sqrt(n (n-1) ... (n-k+1))
    double product = 1.0;
    for (int i = 0; i < k; ++i) {
        product *= static_cast<double>(n - i);
    }
    return std::sqrt(product);
}

// Collective raising on every switched-on ensemble.
void raise_atoms(const HamiltonianSpec& spec, const SpaceConfig& config, const BasisLabel& label,
                 double prefactor, std::vector<Term>& out) {
    for (std::size_t x = 0; x < config.n_ensembles(); ++x) {
        const double w = spec.weight(x) * prefactor;
        if (w == 0.0) {
            continue;
        }
        const int n = config.ensembles()[x];
        if (config.representation() == AtomRepresentation::Symmetric) {
            const int m = label.atoms[x];
            if (m < n) {
                BasisLabel next = label;
                next.atoms[x] = m + 1;
                out.emplace_back(std::move(next), w * std::sqrt(static_cast<double>((m + 1) * (n - m))));
            }
        } else {
            const std::size_t begin = config.ensemble_offset(x);
            for (std::size_t k = begin; k < begin + static_cast<std::size_t>(n); ++k) {
                if (label.atoms[k] == 0) {
                    BasisLabel next = label;
                    next.atoms[k] = 1;
                    out.emplace_back(std::move(next), w);
                }
            }
        }
    }
}

// T |label> for the forward term of the interaction.
std::vector<Term> forward_term(const HamiltonianSpec& spec, const SpaceConfig& config,
                               const BasisLabel& label) {
    std::vector<Term> out;
    const auto& modes = config.modes();
    const auto& n = label.fock;
    switch (spec.kind) {
        case Interaction::OnePhoton: {  // a S10
            if (n[0] < 1) break;
            BasisLabel next = label;
            next.fock[0] -= 1;
            raise_atoms(spec, config, next, std::sqrt(static_cast<double>(n[0])), out);
            break;
        }
        case Interaction::Raman: {  // c^dagger b S10, modes (c, b)
            if (n[1] < 1 || n[0] + 1 > modes[0].cutoff) break;
            BasisLabel next = label;
            next.fock[1] -= 1;
            next.fock[0] += 1;
            raise_atoms(spec, config, next,
                        std::sqrt(static_cast<double>(n[1])) * std::sqrt(static_cast<double>(n[0] + 1)),
                        out);
            break;
        }
        case Interaction::MPhoton: {  // S10 a^M
            if (n[0] < spec.photons) break;
            BasisLabel next = label;
            next.fock[0] -= spec.photons;
            raise_atoms(spec, config, next, falling_sqrt(n[0], spec.photons), out);
            break;
        }
        case Interaction::ThreePhoton: {  // a^dagger b c, modes (a, b, c)
            if (n[1] < 1 || n[2] < 1 || n[0] + 1 > modes[0].cutoff) break;
            BasisLabel next = label;
            next.fock[0] += 1;
            next.fock[1] -= 1;
            next.fock[2] -= 1;
            out.emplace_back(std::move(next), std::sqrt(static_cast<double>((n[0] + 1) * n[1] * n[2])));
            break;
        }
    }
    return out;
}

}  // namespace

std::size_t max_oracle_dimension() {
    if (const char* env = std::getenv("DICKE_MAX_DIM")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return static_cast<std::size_t>(value);
        }
    }
    return kDefaultMaxOracleDimension;
}

DenseOperator build_hamiltonian(const HamiltonianSpec& spec) {
    spec.validate();
    DenseOperator op;
    op.spec = spec;
    op.config = spec.config();
    const std::size_t dim = op.config.dimension();
    if (dim > max_oracle_dimension()) {
        throw std::length_error("build_hamiltonian: dimension " + std::to_string(dim) +
                                " exceeds the oracle guard of " +
                                std::to_string(max_oracle_dimension()));
    }
    op.basis = enumerate_basis(op.config);
    for (std::size_t i = 0; i < op.basis.size(); ++i) {
        op.index.emplace(op.basis[i], static_cast<Eigen::Index>(i));
    }

    const auto size = static_cast<Eigen::Index>(op.basis.size());
    Eigen::MatrixXd forward = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
        for (const auto& [label, value] : forward_term(spec, op.config, op.basis[static_cast<std::size_t>(j)])) {
            forward(op.index.at(label), j) += value;
        }
    }
    // H / hbar = i coupling (T - T^dagger); T is real here.
    const Eigen::MatrixXd antisym = spec.coupling * (forward - forward.transpose());
    op.matrix = Complex{0.0, 1.0} * antisym.cast<Complex>();
    return op;
}

double hermiticity_defect(const DenseOperator& op) {
    return (op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXcd to_dense(const DenseOperator& op, const StateVector& state) {
    if (!(state.config() == op.config)) {
        throw std::invalid_argument("oracle: state basis does not match the Hamiltonian");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(op.basis.size()));
    for (const auto& [label, amp] : state.amplitudes()) {
        v(op.index.at(label)) = amp;
    }
    return v;
}

StateVector from_dense(const DenseOperator& op, const Eigen::VectorXcd& amplitudes) {
    StateVector::Amplitudes out;
    for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
        out.emplace_hint(out.end(), op.basis[static_cast<std::size_t>(i)], amplitudes(i));
    }
    return StateVector::from_amplitudes(op.config, std::move(out));
}

void require_no_leakage(const HamiltonianSpec& spec, const StateVector& state) {
    const auto& modes = state.config().modes();
    for (const auto& [label, amp] : state.amplitudes()) {
        const auto reach = max_reachable_occupation(spec, label);
        for (std::size_t i = 0; i < modes.size(); ++i) {
            if (reach[i] > modes[i].cutoff) {
                throw std::domain_error("oracle: leakage risk, mode '" + modes[i].label +
                                        "' can reach " + std::to_string(reach[i]) +
                                        " photons but the cutoff is " +
                                        std::to_string(modes[i].cutoff));
            }
        }
    }
}

ExactPropagator::ExactPropagator(DenseOperator op) : op_(std::move(op)) {
    std::map<std::vector<int>, std::size_t> block_of;
    std::vector<std::size_t> owner(op_.basis.size());
    for (std::size_t i = 0; i < op_.basis.size(); ++i) {
        const auto q = conserved_quantities(op_.spec, op_.basis[i]);
        auto [it, inserted] = block_of.try_emplace(q, blocks_.size());
        if (inserted) {
            blocks_.emplace_back();
        }
        owner[i] = it->second;
        blocks_[it->second].indices.push_back(static_cast<Eigen::Index>(i));
    }

    const auto& H = op_.matrix;
    for (Eigen::Index j = 0; j < H.cols(); ++j) {
        for (Eigen::Index i = 0; i < H.rows(); ++i) {
            if (owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(j)] &&
                H(i, j) != Complex{}) {
                throw std::logic_error("ExactPropagator: Hamiltonian couples different conserved sectors");
            }
        }
    }

    for (auto& block : blocks_) {
        const auto n = static_cast<Eigen::Index>(block.indices.size());
        Eigen::MatrixXcd sub(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index c = 0; c < n; ++c) {
                sub(r, c) = H(block.indices[static_cast<std::size_t>(r)],
                              block.indices[static_cast<std::size_t>(c)]);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("ExactPropagator: eigendecomposition failed");
        }
        block.energies = solver.eigenvalues();
        block.vectors = solver.eigenvectors();
    }
}

StateVector ExactPropagator::evolve(const StateVector& state, double t) const {
    require_no_leakage(op_.spec, state);
    const Eigen::VectorXcd psi = to_dense(op_, state);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    for (const auto& block : blocks_) {
        const auto n = static_cast<Eigen::Index>(block.indices.size());
        Eigen::VectorXcd sub(n);
        bool any = false;
        for (Eigen::Index r = 0; r < n; ++r) {
            sub(r) = psi(block.indices[static_cast<std::size_t>(r)]);
            any = any || sub(r) != Complex{};
        }
        if (!any) {
            continue;
        }
        Eigen::VectorXcd coeffs = block.vectors.adjoint() * sub;
        for (Eigen::Index k = 0; k < n; ++k) {
            coeffs(k) *= std::exp(Complex{0.0, -block.energies(k) * t});
        }
        const Eigen::VectorXcd evolved = block.vectors * coeffs;
        for (Eigen::Index r = 0; r < n; ++r) {
            out(block.indices[static_cast<std::size_t>(r)]) = evolved(r);
        }
    }
    return from_dense(op_, out);
}

double ExactPropagator::reconstruction_defect() const {
    Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(op_.matrix.rows(), op_.matrix.cols());
    for (const auto& block : blocks_) {
        const Eigen::MatrixXcd sub =
            block.vectors * block.energies.cast<Complex>().asDiagonal() * block.vectors.adjoint();
        for (std::size_t r = 0; r < block.indices.size(); ++r) {
            for (std::size_t c = 0; c < block.indices.size(); ++c) {
                rebuilt(block.indices[r], block.indices[c]) =
                    sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return (rebuilt - op_.matrix).cwiseAbs().maxCoeff();
}

StateVector evolve_exact(const DenseOperator& op, const StateVector& state, double t) {
    return ExactPropagator(op).evolve(state, t);
}

double compare_states(const StateVector& x, const StateVector& y) {
    if (!(x.config() == y.config())) {
        throw std::invalid_argument("compare_states: configuration mismatch");
    }
    Complex align{1.0, 0.0};
    const BasisLabel* pivot = nullptr;
    double best = 0.0;
    for (const auto& [label, amp] : x.amplitudes()) {
        if (std::abs(amp) > best) {
            best = std::abs(amp);
            pivot = &label;
        }
    }
    if (pivot != nullptr) {
        const Complex xa = x.amplitude(*pivot);
        const Complex ya = y.amplitude(*pivot);
        if (ya != Complex{}) {
            align = (xa / std::abs(xa)) / (ya / std::abs(ya));
        }
    }
    double worst = 0.0;
    for (const auto& [label, amp] : x.amplitudes()) {
        worst = std::max(worst, std::abs(amp - align * y.amplitude(label)));
    }
    for (const auto& [label, amp] : y.amplitudes()) {
        if (x.amplitudes().count(label) == 0) {
            worst = std::max(worst, std::abs(amp));
        }
    }
    return worst;
}

StateVector embed_symmetric(const StateVector& state) {
    return expand_symmetric_state(state, kMaxEmbedAtoms);
}

std::vector<double> conserved_expectations(const HamiltonianSpec& spec, const StateVector& state) {
    std::vector<double> out;
    for (const auto& [label, amp] : state.amplitudes()) {
        const auto q = conserved_quantities(spec, label);
        if (out.empty()) {
            out.assign(q.size(), 0.0);
        }
        for (std::size_t k = 0; k < q.size(); ++k) {
            out[k] += std::norm(amp) * q[k];
        }
    }
    return out;
}

}  // namespace dickesim
