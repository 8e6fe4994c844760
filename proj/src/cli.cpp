// cli.cpp

#include "dickesim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dickesim/closedform.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/hamiltonian.hpp"
#include "dickesim/protocols.hpp"
#include "dickesim/serialize.hpp"
#include "dickesim/verify.hpp"

namespace dickesim {

namespace {

constexpr int kMaxDumpAtoms = 12;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::optional<std::string> interaction;
    std::optional<std::string> protocol;
    std::optional<int> n_atoms;
    std::vector<int> sizes;
    double coupling = 1.0;
    double coupling2 = 1.0;
    std::optional<double> time;
    std::optional<double> time2;
    double t_start = 0.0;
    std::optional<double> t_end;
    std::optional<int> steps;
    double alpha_re = 1.0, alpha_im = 0.0;
    double beta_re = 0.0, beta_im = 0.0;
    std::optional<int> m;
    std::optional<int> photons;
    std::optional<int> p;
    std::optional<double> theta;
    std::string direction = "up";
    std::optional<std::string> out;
    std::optional<std::string> in;
    std::optional<std::string> format;
    std::optional<double> tolerance;
    bool roundtrip = false;

    Complex alpha() const { return {alpha_re, alpha_im}; }
    Complex beta() const { return {beta_re, beta_im}; }
};

template <typename T>
T need(const std::optional<T>& value, const char* flag) {
    if (!value) {
        throw UsageError(std::string("missing required flag ") + flag);
    }
    return *value;
}

void require_finite(const RunConfig& c) {
    const std::vector<std::pair<const char*, double>> values{
        {"--coupling", c.coupling}, {"--coupling2", c.coupling2}, {"--t-start", c.t_start},
        {"--alpha-re", c.alpha_re}, {"--alpha-im", c.alpha_im},   {"--beta-re", c.beta_re},
        {"--beta-im", c.beta_im}};
    for (const auto& [flag, v] : values) {
        if (!std::isfinite(v)) throw UsageError(std::string(flag) + " must be finite");
    }
    for (const auto& [flag, v] : {std::pair{"--time", c.time}, std::pair{"--time2", c.time2},
                                  std::pair{"--t-end", c.t_end}, std::pair{"--theta", c.theta},
                                  std::pair{"--tolerance", c.tolerance}}) {
        if (v && !std::isfinite(*v)) throw UsageError(std::string(flag) + " must be finite");
    }
}

std::string resolve_format(const RunConfig& c, const std::vector<std::string>& allowed) {
    const std::string format = c.format.value_or(allowed.front());
    for (const auto& a : allowed) {
        if (a == format) return format;
    }
    throw UsageError("format '" + format + "' is not available for command " + c.command);
}

class Output {
public:
    Output(const RunConfig& c, std::ostream& out, std::ostream& err) : out_(out), err_(err) {
        if (c.out) {
            file_.open(*c.out, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file " + *c.out);
        }
    }
    std::ostream& payload() { return file_.is_open() ? static_cast<std::ostream&>(file_) : out_; }
    std::ostream& summary() { return file_.is_open() ? out_ : err_; }

private:
    std::ostream& out_;
    std::ostream& err_;
    std::ofstream file_;
};

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto format = resolve_format(c, {"json", "csv"});
    VerifyOptions options;
    options.tolerance = c.tolerance;
    if (c.tolerance && *c.tolerance < 0.0) throw UsageError("--tolerance must be non-negative");
    if (c.interaction) {
        const auto& groups = verification_groups();
        if (std::find(groups.begin(), groups.end(), *c.interaction) == groups.end()) {
            throw UsageError("unknown interaction '" + *c.interaction + "'");
        }
        options.group = c.interaction;
    }
    const auto cases = run_verification(options);

    Output sink(c, out, err);
    if (format == "json") {
        sink.payload() << dump_json(report_to_json(cases)) << '\n';
    } else {
        sink.payload() << "case,max_deviation,tolerance,pass,notes\n";
        for (const auto& v : cases) {
            sink.payload() << v.name << ',' << format_double(v.max_deviation) << ','
                           << format_double(v.tolerance) << ',' << (v.pass ? "true" : "false") << ','
                           << csv_quote(v.notes) << '\n';
        }
    }
    std::size_t passed = 0;
    for (const auto& v : cases) {
        if (v.pass) {
            ++passed;
        } else {
            sink.summary() << "FAIL " << v.name << " deviation " << format_double(v.max_deviation)
                           << " > " << format_double(v.tolerance) << '\n';
        }
    }
    sink.summary() << passed << '/' << cases.size() << " cases passed\n";
    return passed == cases.size() ? kExitSuccess : kExitVerificationFailed;
}

int parse_direction(const std::string& s) {
    if (s == "up" || s == "+1" || s == "1") return 1;
    if (s == "down" || s == "-1") return -1;
    throw UsageError("direction must be up or down");
}

ProtocolResult run_protocol(const RunConfig& c) {
    const std::string& name = need(c.protocol, "--protocol");
    if (name == "prepare_w" || name == "disentangle") {
        return prepare_w(need(c.n_atoms, "--n-atoms"), c.coupling, name == "disentangle");
    }
    if (name == "ladder_step") {
        return ladder_step(need(c.m, "--m"), need(c.n_atoms, "--n-atoms"), c.coupling,
                           parse_direction(c.direction), c.theta);
    }
    if (name == "store_qubit") {
        const int n = need(c.n_atoms, "--n-atoms");
        return c.roundtrip ? roundtrip_qubit(c.alpha(), c.beta(), n, c.coupling)
                           : store_qubit(c.alpha(), c.beta(), n, c.coupling);
    }
    if (name == "store_entangled_pair") {
        const int n = need(c.n_atoms, "--n-atoms");
        return c.roundtrip ? roundtrip_entangled_pair(c.alpha(), c.beta(), n, c.coupling)
                           : store_entangled_pair(c.alpha(), c.beta(), n, c.coupling, c.theta);
    }
    if (name == "cascade") {
        if (c.sizes.size() != 2) throw UsageError("cascade needs --sizes n1,n2");
        return cascade(c.sizes[0], c.sizes[1], c.coupling, c.coupling2, need(c.time, "--time"),
                       need(c.time2, "--time2"));
    }
    if (name == "chain") {
        if (c.sizes.empty()) throw UsageError("chain needs --sizes");
        return chain_evolution(EnsembleChain{c.sizes}, c.coupling, need(c.time, "--time"), c.alpha(),
                               c.beta());
    }
    throw UsageError("unknown protocol '" + name + "'");
}

int cmd_protocol(const RunConfig& c, std::ostream& out, std::ostream& err) {
    resolve_format(c, {"json"});
    const auto result = run_protocol(c);
    Output sink(c, out, err);
    sink.payload() << dump_json(protocol_result_to_json(result)) << '\n';
    sink.summary() << result.protocol << ": fidelity " << format_double(result.fidelity);
    if (result.success_probability) {
        sink.summary() << ", success_probability " << format_double(*result.success_probability);
    }
    sink.summary() << '\n';
    return kExitSuccess;
}

struct SweepModel {
    StatePair pair;
    std::function<AmplitudePair(double)> evolve;
};

SweepModel sweep_model(const RunConfig& c) {
    const std::string& name = need(c.interaction, "--interaction");
    const auto kind = parse_interaction(name);
    if (!kind) throw UsageError("unknown interaction '" + name + "'");
    const Complex a = c.alpha(), b = c.beta();
    const double g = c.coupling;
    switch (*kind) {
        case Interaction::OnePhoton: {
            const int n = need(c.n_atoms, "--n-atoms");
            const auto config = one_photon_spec(n, g).config();
            return {{basis_state(config, {{1}, {0}}), basis_state(config, {{0}, {1}})},
                    [=](double t) { return evolve_one_photon(a, b, n, {g, t}); }};
        }
        case Interaction::Raman: {
            const int n = need(c.n_atoms, "--n-atoms");
            const int m = c.m.value_or(0);
            if (m < 0 || m >= n) throw UsageError("raman sweep needs 0 <= m < n-atoms");
            const auto config = raman_spec(n, g).config();
            StatePair pair{basis_state(config, {{0, 1}, {m}}), basis_state(config, {{1, 0}, {m + 1}})};
            return {pair, [=](double t) {
                        const auto s = evolve_raman(a * pair.phi + b * pair.phi_dag, {g, t});
                        return AmplitudePair{inner(pair.phi, s), inner(pair.phi_dag, s)};
                    }};
        }
        case Interaction::MPhoton: {
            const int n = need(c.n_atoms, "--n-atoms");
            const int photons = need(c.photons, "--photons");
            const int p = need(c.p, "--p");
            return {m_photon_pair(photons, p, n),
                    [=](double t) { return evolve_m_photon(photons, p, n, a, b, {g, t}); }};
        }
        case Interaction::ThreePhoton: {
            const int n = need(c.photons, "--photons");
            return {three_photon_pair(n), [=](double t) { return evolve_three_photon(n, a, b, {g, t}); }};
        }
    }
    throw UsageError("unsupported interaction");
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
    resolve_format(c, {"csv"});
    const int steps = need(c.steps, "--steps");
    const double t_end = need(c.t_end, "--t-end");
    if (steps < 2) throw UsageError("--steps must be at least 2");
    if (!(t_end > c.t_start)) throw UsageError("empty time range");
    const auto model = sweep_model(c);

    Output sink(c, out, err);
    auto& os = sink.payload();
    const auto& config = model.pair.phi.config();
    os << "t," << label_name(config, model.pair.phi.amplitudes().begin()->first) << ','
       << label_name(config, model.pair.phi_dag.amplitudes().begin()->first) << ",norm\n";
    for (int k = 0; k < steps; ++k) {
        const double t = c.t_start + (t_end - c.t_start) * k / (steps - 1);
        const auto r = model.evolve(t);
        const double p1 = std::norm(r.first), p2 = std::norm(r.second);
        os << format_double(t) << ',' << format_double(p1) << ',' << format_double(p2) << ','
           << format_double(std::sqrt(p1 + p2)) << '\n';
    }
    return kExitSuccess;
}

int cmd_state(const RunConfig& c, std::ostream& out, std::ostream& err) {
    resolve_format(c, {"json"});
    StateVector state;
    if (c.in) {
        std::ifstream file(*c.in, std::ios::binary);
        if (!file) throw UsageError("cannot read " + *c.in);
        std::stringstream text;
        text << file.rdbuf();
        state = parse_state(text.str());
    } else {
        const int n = need(c.n_atoms, "--n-atoms");
        const int m = need(c.m, "--m");
        if (n > kMaxDumpAtoms) {
            throw UsageError("expansion is limited to " + std::to_string(kMaxDumpAtoms) + " atoms");
        }
        state = expand_to_product(m, n);
    }
    Output sink(c, out, err);
    sink.payload() << dump_json(state_to_json(state)) << '\n';
    return kExitSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Dicke-state dynamics simulator", "dickesim"};
    app.add_option("--command", c.command, "verify | protocol | sweep | state")
        ->required()
        ->check(CLI::IsMember({"verify", "protocol", "sweep", "state"}));
    app.add_option("--interaction", c.interaction,
                   "one_photon | raman | m_photon | three_photon (verify also: general_pair, protocols)");
    app.add_option("--protocol", c.protocol,
                   "prepare_w | disentangle | ladder_step | store_qubit | store_entangled_pair | cascade | chain");
    app.add_option("--n-atoms", c.n_atoms, "number of atoms N");
    app.add_option("--sizes", c.sizes, "ensemble sizes, comma separated")->delimiter(',');
    app.add_option("--coupling", c.coupling, "coupling constant g or f");
    app.add_option("--coupling2", c.coupling2, "second-ensemble coupling for cascade");
    app.add_option("--time", c.time, "interaction time");
    app.add_option("--time2", c.time2, "second-ensemble time for cascade");
    app.add_option("--t-start", c.t_start, "sweep start time");
    app.add_option("--t-end", c.t_end, "sweep end time");
    app.add_option("--steps", c.steps, "sweep grid points (>= 2)");
    app.add_option("--alpha-re", c.alpha_re);
    app.add_option("--alpha-im", c.alpha_im);
    app.add_option("--beta-re", c.beta_re);
    app.add_option("--beta-im", c.beta_im);
    app.add_option("--m", c.m, "Dicke excitation number");
    app.add_option("--photons", c.photons, "M for m_photon, pump photons n for three_photon");
    app.add_option("--p", c.p, "pair index p for m_photon");
    app.add_option("--theta", c.theta, "rotation angle override");
    app.add_option("--direction", c.direction, "up | down");
    app.add_flag("--roundtrip", c.roundtrip, "store then retrieve");
    app.add_option("--in", c.in, "input state file");
    app.add_option("--out", c.out, "output file");
    app.add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tolerance", c.tolerance, "override verification tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        require_finite(c);
        if (c.command == "verify") return cmd_verify(c, out, err);
        if (c.command == "protocol") return cmd_protocol(c, out, err);
        if (c.command == "sweep") return cmd_sweep(c, out, err);
        return cmd_state(c, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace dickesim
