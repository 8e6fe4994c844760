// dicke.hpp
// Symmetric Dicke sector algebra in the normalized basis |m>^ = |m;N>/sqrt(C(N,m)).

#pragma once

#include <cstddef>
#include <cstdint>

#include "dickesim/hilbert.hpp"

namespace dickesim {

/// Largest atom count for which binomials are computed exactly.
inline constexpr int kMaxBinomialAtoms = 60;
/// Largest N that expand_to_product will enumerate.
inline constexpr int kMaxExpandAtoms = 20;

/// <m;N|m;N> = C(N,m) for the unnormalized Dicke vector, in exact integer arithmetic.
std::uint64_t dicke_norm_sq(int n_atoms, int m);

/// Collective raising S10 on ensemble `x` of a symmetric-sector state:
/// |m>^ -> sqrt((m+1)(N-m)) |m+1>^.
StateVector apply_S10(const StateVector& state, std::size_t ensemble = 0);
/// Collective lowering S01: |m>^ -> sqrt(m(N-m+1)) |m-1>^.
StateVector apply_S01(const StateVector& state, std::size_t ensemble = 0);

/// Sum of single-atom s10(a) (or s01(a)) over ensemble `x` of a product-space state.
StateVector apply_product_S10(const StateVector& state, std::size_t ensemble = 0);
StateVector apply_product_S01(const StateVector& state, std::size_t ensemble = 0);

/// Normalized |m>^ written out over the 2^N atomic product space (no modes).
StateVector expand_to_product(int m, int n_atoms);

struct SectorProjection {
    StateVector state;     // symmetric-sector coefficients
    double residual_norm;  // norm of the non-symmetric remainder
};

/// Overlaps of a product-space state with every normalized symmetric basis
/// vector (per ensemble), plus the norm of what is left over.
SectorProjection project_to_sector(const StateVector& state);

/// Linear extension of |m>^ -> expand_to_product(m, N) on each ensemble.
/// Throws std::length_error when the total atom count exceeds `max_atoms`.
StateVector expand_symmetric_state(const StateVector& state, int max_atoms);

/// Conversions between an amplitude on |m>^ and the coefficient of the
/// unnormalized |m;N>, the form in which the closed-form solutions are usually written.
Complex to_unnormalized_coefficient(Complex normalized_amplitude, int n_atoms, int m);
Complex from_unnormalized_coefficient(Complex coefficient, int n_atoms, int m);

}  // namespace dickesim
