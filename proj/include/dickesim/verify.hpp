// verify.hpp
// Closed-form versus brute-force comparison matrix.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dickesim/serialize.hpp"

namespace dickesim {

struct VerifyOptions {
    /// Overrides every per-case tolerance when set.
    std::optional<double> tolerance;
    /// Restricts the run to one group: one_photon, raman, general_pair,
    /// m_photon, three_photon or protocols.
    std::optional<std::string> group;
    int max_atoms = 8;
    int time_points = 21;
};

/// Names accepted by VerifyOptions::group.
const std::vector<std::string>& verification_groups();

/// Runs the suite; cases come back ordered by case name.
/// Throws std::invalid_argument for an unknown group.
std::vector<VerificationCase> run_verification(const VerifyOptions& options = {});

}  // namespace dickesim
