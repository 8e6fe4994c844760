// serialize.cpp

#include "dickesim/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace dickesim {

namespace {

void write_string(std::string& out, const std::string& s) {
    // nlohmann handles escaping.
    out += Json(s).dump();
}

void write(std::string& out, const Json& value, int indent, int depth) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* newline = indent > 0 ? "\n" : "";
    switch (value.type()) {
        case Json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            out += newline;
            bool first = true;
            for (const auto& [key, item] : value.items()) {
                if (!first) {
                    out += ',';
                    out += newline;
                }
                first = false;
                out += pad;
                write_string(out, key);
                out += indent > 0 ? ": " : ":";
                write(out, item, indent, depth + 1);
            }
            out += newline;
            out += close_pad;
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::all_of(value.begin(), value.end(),
                                          [](const Json& v) { return v.is_primitive(); });
            out += '[';
            bool first = true;
            for (const auto& item : value) {
                if (!first) {
                    out += flat && indent > 0 ? ", " : ",";
                }
                if (!flat) {
                    out += newline;
                    out += pad;
                }
                first = false;
                write(out, item, indent, depth + 1);
            }
            if (!flat) {
                out += newline;
                out += close_pad;
            }
            out += ']';
            return;
        }
        case Json::value_t::number_float:
            out += format_double(value.get<double>());
            return;
        default:
            out += value.dump();
            return;
    }
}

std::string representation_name(AtomRepresentation rep) {
    return rep == AtomRepresentation::Symmetric ? "symmetric" : "full_product";
}

const Json& require_array(const Json& json, const char* key) {
    if (!json.is_object() || !json.contains(key) || !json.at(key).is_array()) {
        throw ParseError(std::string("field '") + key + "' must be an array");
    }
    return json.at(key);
}

template <typename T>
T require_field(const Json& json, const char* key) {
    if (!json.is_object() || !json.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    try {
        return json.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    if (value == 0.0) {
        return "0.0";  // also folds -0.0
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    std::string text = buf;
    if (text.find_first_of(".e") == std::string::npos) {
        text += ".0";
    }
    return text;
}

std::string dump_json(const Json& value, int indent) {
    std::string out;
    write(out, value, indent, 0);
    return out;
}

Json state_to_json(const StateVector& state) {
    const auto& config = state.config();
    Json json;
    json["modes"] = Json::array();
    for (const auto& mode : config.modes()) {
        json["modes"].push_back({{"label", mode.label}, {"cutoff", mode.cutoff}});
    }
    json["n_atoms"] = config.n_atoms();
    const bool multi = config.n_ensembles() > 1;
    if (multi) {
        json["ensembles"] = config.ensembles();
    }
    json["atom_representation"] = representation_name(config.representation());
    json["amplitudes"] = Json::array();
    for (const auto& [label, amp] : state.amplitudes()) {
        Json entry;
        entry["fock"] = label.fock;
        if (config.representation() == AtomRepresentation::Symmetric) {
            if (multi) {
                entry["m"] = label.atoms;
            } else {
                entry["m"] = label.atoms.empty() ? 0 : label.atoms.front();
            }
        } else {
            std::string bits;
            for (int b : label.atoms) {
                bits += static_cast<char>('0' + b);
            }
            entry["bits"] = bits;
        }
        entry["re"] = amp.real();
        entry["im"] = amp.imag();
        json["amplitudes"].push_back(std::move(entry));
    }
    return json;
}

StateVector state_from_json(const Json& json) {
    std::vector<ModeSpec> modes;
    for (const auto& m : require_array(json, "modes")) {
        modes.push_back({require_field<std::string>(m, "label"), require_field<int>(m, "cutoff")});
    }
    const int n_atoms = require_field<int>(json, "n_atoms");
    const std::string rep_name = require_field<std::string>(json, "atom_representation");
    AtomRepresentation rep;
    if (rep_name == "symmetric") {
        rep = AtomRepresentation::Symmetric;
    } else if (rep_name == "full_product") {
        rep = AtomRepresentation::FullProduct;
    } else {
        throw ParseError("unknown atom_representation '" + rep_name + "'");
    }
    std::vector<int> ensembles;
    if (json.contains("ensembles")) {
        ensembles = require_field<std::vector<int>>(json, "ensembles");
        int total = 0;
        for (int n : ensembles) total += n;
        if (total != n_atoms) {
            throw ParseError("ensembles do not add up to n_atoms");
        }
    } else if (n_atoms > 0) {
        ensembles = {n_atoms};
    } else if (n_atoms < 0) {
        throw ParseError("n_atoms must be non-negative");
    }

    SpaceConfig config;
    try {
        config = SpaceConfig::with_ensembles(std::move(modes), ensembles, rep);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    std::vector<std::pair<BasisLabel, Complex>> entries;
    for (const auto& a : require_array(json, "amplitudes")) {
        BasisLabel label;
        label.fock = require_field<std::vector<int>>(a, "fock");
        if (rep == AtomRepresentation::Symmetric) {
            const Json& m = a.contains("m") ? a.at("m") : Json(0);
            if (m.is_array()) {
                try {
                    label.atoms = m.get<std::vector<int>>();
                } catch (const nlohmann::json::exception&) {
                    throw ParseError("field 'm' must hold integers");
                }
            } else if (m.is_number_integer()) {
                if (!ensembles.empty()) {
                    label.atoms = {m.get<int>()};
                } else if (m.get<int>() != 0) {
                    throw ParseError("m must be 0 without atoms");
                }
            } else {
                throw ParseError("field 'm' has the wrong type");
            }
        } else {
            for (char ch : require_field<std::string>(a, "bits")) {
                if (ch != '0' && ch != '1') {
                    throw ParseError("bits must contain only 0 and 1");
                }
                label.atoms.push_back(ch - '0');
            }
        }
        entries.emplace_back(std::move(label),
                             Complex{require_field<double>(a, "re"), require_field<double>(a, "im")});
    }
    try {
        return make_state(config, entries);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

StateVector parse_state(const std::string& text) {
    Json json;
    try {
        json = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return state_from_json(json);
}

Json protocol_result_to_json(const ProtocolResult& result) {
    Json json;
    json["protocol"] = result.protocol;
    Json params = Json::object();
    for (const auto& [key, value] : result.params) {
        std::visit([&](const auto& v) { params[key] = v; }, value);
    }
    json["params"] = std::move(params);
    json["schedule"] = Json::array();
    for (std::size_t i = 0; i < result.schedule.steps.size(); ++i) {
        const auto& step = result.schedule.steps[i];
        json["schedule"].push_back({{"step", static_cast<int>(i)},
                                    {"interaction", step.interaction},
                                    {"targets", step.targets},
                                    {"duration", step.duration}});
    }
    json["fidelity"] = result.fidelity;
    json["success_probability"] =
        result.success_probability ? Json(*result.success_probability) : Json(nullptr);
    json["final_state"] = state_to_json(result.final_state);
    return json;
}

Json report_to_json(const std::vector<VerificationCase>& cases) {
    Json json = Json::array();
    for (const auto& c : cases) {
        json.push_back({{"case", c.name},
                        {"max_deviation", c.max_deviation},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass},
                        {"notes", c.notes}});
    }
    return json;
}

std::string label_name(const SpaceConfig& config, const BasisLabel& label) {
    std::string out;
    for (std::size_t i = 0; i < config.modes().size(); ++i) {
        out += config.modes()[i].label + std::to_string(label.fock[i]);
    }
    if (!label.atoms.empty()) {
        if (!out.empty()) {
            out += '_';
        }
        if (config.representation() == AtomRepresentation::Symmetric) {
            for (std::size_t x = 0; x < label.atoms.size(); ++x) {
                out += (x == 0 ? "m" : ".m") + std::to_string(label.atoms[x]);
            }
        } else {
            for (int b : label.atoms) {
                out += static_cast<char>('0' + b);
            }
        }
    }
    return out;
}

}  // namespace dickesim
