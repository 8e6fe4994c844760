// Reference propagator for tests: Kronecker-product operators and a Pade
// matrix exponential. Shares no code with the library oracle.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "dickesim/hilbert.hpp"

namespace ref {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using dickesim::BasisLabel;
using dickesim::Complex;
using dickesim::SpaceConfig;
using dickesim::StateVector;

// Factor dimensions: one per mode (cutoff+1), then 2 per atom. First factor
// is the most significant digit.
struct Space {
    std::vector<int> dims;
    int n_modes = 0;

    explicit Space(const SpaceConfig& config) {
        for (const auto& m : config.modes()) dims.push_back(m.cutoff + 1);
        n_modes = static_cast<int>(dims.size());
        for (int k = 0; k < config.n_atoms(); ++k) dims.push_back(2);
    }
    int size() const {
        int s = 1;
        for (int d : dims) s *= d;
        return s;
    }
    int index(const BasisLabel& label) const {
        int idx = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const int digit = k < label.fock.size() ? label.fock[k] : label.atoms[k - label.fock.size()];
            idx = idx * dims[k] + digit;
        }
        return idx;
    }
    BasisLabel label(int idx) const {
        std::vector<int> digits(dims.size());
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            digits[k] = idx % dims[k];
            idx /= dims[k];
        }
        return {{digits.begin(), digits.begin() + n_modes}, {digits.begin() + n_modes, digits.end()}};
    }
};

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Mat lowering(int cutoff) {
    Mat a = Mat::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline Mat sigma_plus() {
    Mat s = Mat::Zero(2, 2);
    s(1, 0) = 1.0;
    return s;
}

// op acting on factor `slot`, identity elsewhere.
inline Mat on(const Space& space, int slot, const Mat& op) {
    Mat out = Mat::Identity(1, 1);
    for (int k = 0; k < static_cast<int>(space.dims.size()); ++k) {
        out = kron(out, k == slot ? op : Mat::Identity(space.dims[k], space.dims[k]));
    }
    return out;
}

// Sum of sigma_plus over atoms [first, first + count).
inline Mat collective_raise(const Space& space, int first, int count) {
    Mat s = Mat::Zero(space.size(), space.size());
    for (int k = 0; k < count; ++k) s += on(space, space.n_modes + first + k, sigma_plus());
    return s;
}

inline Mat collective_raise(const Space& space) {
    return collective_raise(space, 0, static_cast<int>(space.dims.size()) - space.n_modes);
}

inline Vec to_vec(const Space& space, const StateVector& state) {
    Vec v = Vec::Zero(space.size());
    for (const auto& [label, amp] : state.amplitudes()) v(space.index(label)) = amp;
    return v;
}

inline StateVector from_vec(const SpaceConfig& config, const Space& space, const Vec& v) {
    StateVector::Amplitudes amps;
    for (int i = 0; i < space.size(); ++i) {
        if (std::abs(v(i)) > 1e-14) amps[space.label(i)] = v(i);
    }
    return StateVector::from_amplitudes(config, std::move(amps));
}

// exp(coupling t (T - T^dagger)) v, the propagator of H = i coupling (T - T^dagger).
inline Vec propagate(const Mat& forward, double coupling, double t, const Vec& v) {
    const Mat generator = (coupling * t) * (forward - forward.adjoint());
    return generator.exp() * v;
}

inline double max_abs_diff(const Vec& a, const Vec& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace ref
