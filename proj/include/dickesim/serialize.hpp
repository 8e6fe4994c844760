// serialize.hpp
// JSON and CSV encodings for states, protocol results and verification reports.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dickesim/hilbert.hpp"
#include "dickesim/protocols.hpp"

namespace dickesim {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Round-trip exact text for a double: 17 significant digits.
std::string format_double(double value);

/// Serializes with every floating-point number written by format_double.
std::string dump_json(const Json& value, int indent = 2);

/// {"modes":[...],"n_atoms":N,"atom_representation":"symmetric","amplitudes":[...]}
/// with amplitudes in lexicographic (fock, m) order. Product-space states use
/// "full_product" and a "bits" string per amplitude; several ensembles add an
/// "ensembles" array and make "m" an array.
Json state_to_json(const StateVector& state);
StateVector state_from_json(const Json& json);
StateVector parse_state(const std::string& text);

Json protocol_result_to_json(const ProtocolResult& result);

struct VerificationCase {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string notes;
};

Json report_to_json(const std::vector<VerificationCase>& cases);

/// Short text form of a basis label such as "c0b1_m2", used for CSV columns.
std::string label_name(const SpaceConfig& config, const BasisLabel& label);

}  // namespace dickesim
