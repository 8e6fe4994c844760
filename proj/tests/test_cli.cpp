#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dickesim/cli.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/protocols.hpp"
#include "dickesim/serialize.hpp"

using namespace dickesim;
using Catch::Approx;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "dickesim");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "dickesim_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header) {
    std::istringstream in(text);
    std::getline(in, header);
    std::vector<std::vector<double>> rows;
    for (std::string line; std::getline(in, line);) {
        std::vector<double> row;
        std::istringstream cells(line);
        for (std::string cell; std::getline(cells, cell, ',');) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("format_double", "[serialize]") {
    CHECK(format_double(1.0) == "1.0");
    CHECK(format_double(0.0) == "0.0");
    CHECK(format_double(-0.0) == "0.0");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(1e300) == "1.0000000000000001e+300");
    CHECK(std::stod(format_double(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("state JSON layout", "[serialize]") {
    const auto state = basis_state(SpaceConfig({{"a", 1}}, 4), {{1}, {0}});
    CHECK(dump_json(state_to_json(state), 0) ==
          R"({"modes":[{"label":"a","cutoff":1}],"n_atoms":4,"atom_representation":"symmetric",)"
          R"("amplitudes":[{"fock":[1],"m":0,"re":1.0,"im":0.0}]})");
}

TEST_CASE("state JSON round trips", "[serialize]") {
    const std::vector<StateVector> states{
        make_state(SpaceConfig({{"c", 1}, {"b", 2}}, 3),
                   {{{{0, 1}, {2}}, Complex{0.6, -0.1}}, {{{1, 0}, {3}}, Complex{0.1, 0.2}}}),
        expand_to_product(2, 4),
        make_state(SpaceConfig::with_ensembles({{"a", 1}}, {2, 3}, AtomRepresentation::Symmetric),
                   {{{{1}, {0, 0}}, 0.3}, {{{0}, {1, 0}}, Complex{0.0, 0.4}}}),
    };
    for (const auto& s : states) {
        const auto text = dump_json(state_to_json(s));
        const auto back = parse_state(text);
        CHECK(back.config() == s.config());
        CHECK(back.amplitudes() == s.amplitudes());
        CHECK(dump_json(state_to_json(back)) == text);
    }
}

TEST_CASE("state JSON errors", "[serialize]") {
    CHECK_THROWS_AS(parse_state("{not json"), ParseError);
    CHECK_THROWS_AS(parse_state(R"({"modes":[],"n_atoms":1})"), ParseError);
    CHECK_THROWS_AS(parse_state(R"({"modes":[],"n_atoms":1,"atom_representation":"dense","amplitudes":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_state(R"({"modes":[{"label":"a","cutoff":1}],"n_atoms":1,)"
                                R"("atom_representation":"symmetric","amplitudes":[{"fock":[2],"m":0,"re":1.0,"im":0.0}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_state(R"({"modes":"a","n_atoms":1,"atom_representation":"symmetric","amplitudes":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_state(R"({"modes":[],"n_atoms":2,"atom_representation":"full_product",)"
                                R"("amplitudes":[{"fock":[],"bits":"12","re":1.0,"im":0.0}]})"),
                    ParseError);
}

TEST_CASE("protocol result JSON", "[serialize]") {
    const auto json = protocol_result_to_json(prepare_w(4, 1.0));
    CHECK(json["protocol"] == "prepare_w");
    CHECK(json["params"]["n_atoms"] == 4);
    CHECK(json["schedule"][0]["duration"].get<double>() == Approx(std::numbers::pi / 4.0));
    CHECK(json["success_probability"].is_null());
    CHECK(json.contains("final_state"));
}

TEST_CASE("report JSON keys", "[serialize]") {
    const auto json = report_to_json({{"x", 1e-13, 1e-10, true, "note"}});
    CHECK(dump_json(json, 0) ==
          R"([{"case":"x","max_deviation":1e-13,"tolerance":1e-10,"pass":true,"notes":"note"}])");
}

TEST_CASE("cli verify", "[cli]") {
    const auto ok = run({"--command", "verify"});
    CHECK(ok.code == kExitSuccess);
    const auto report = Json::parse(ok.out);
    REQUIRE(report.is_array());
    CHECK(report.size() > 50);
    bool has_notes = false;
    std::string previous;
    for (const auto& c : report) {
        CHECK(c["pass"] == true);
        CHECK(c["case"].get<std::string>() > previous);
        previous = c["case"].get<std::string>();
        if (previous.rfind("m_photon/", 0) == 0) has_notes = !c["notes"].get<std::string>().empty();
    }
    CHECK(has_notes);

    CHECK(run({"--command", "verify", "--tolerance", "1e-16"}).code == kExitVerificationFailed);
    CHECK(run({"--command", "verify", "--interaction", "photonic"}).code == kExitUsage);
    CHECK(run({"--command", "verify", "--interaction", "three_photon"}).code == kExitSuccess);
    CHECK(run({"--command", "verify", "--tolerance", "nan"}).code == kExitUsage);

    const auto path = scratch("report.json");
    const auto to_file = run({"--command", "verify", "--interaction", "raman", "--out", path.string()});
    CHECK(to_file.code == kExitSuccess);
    CHECK(to_file.out.find("cases passed") != std::string::npos);
    const auto again = scratch("report2.json");
    run({"--command", "verify", "--interaction", "raman", "--out", again.string()});
    CHECK(slurp(path) == slurp(again));
}

TEST_CASE("cli protocol", "[cli]") {
    const auto w = run({"--command", "protocol", "--protocol", "prepare_w", "--n-atoms", "4", "--coupling", "1"});
    REQUIRE(w.code == kExitSuccess);
    const auto json = Json::parse(w.out);
    CHECK(json["fidelity"].get<double>() == Approx(1.0).margin(1e-12));
    CHECK(json["schedule"][0]["duration"].get<double>() == Approx(std::numbers::pi / 4.0));
    CHECK(w.err.find("fidelity") != std::string::npos);

    const auto chain = run({"--command", "protocol", "--protocol", "chain", "--sizes", "1,1,1", "--coupling", "1",
                            "--time", format_double(std::numbers::pi / (2.0 * std::sqrt(3.0)))});
    REQUIRE(chain.code == kExitSuccess);
    const auto state = state_from_json(Json::parse(chain.out)["final_state"]);
    for (double p : ensemble_excitation_probabilities(state)) CHECK(p == Approx(1.0 / 3.0).margin(1e-12));

    CHECK(run({"--command", "protocol", "--protocol", "prepare_w"}).code == kExitUsage);
    CHECK(run({"--command", "protocol", "--protocol", "teleport", "--n-atoms", "2"}).code == kExitUsage);
    CHECK(run({"--command", "protocol", "--protocol", "ladder_step", "--n-atoms", "3", "--m", "0", "--direction",
               "down"})
              .code == kExitUsage);
    CHECK(run({"--command", "protocol", "--protocol", "store_qubit", "--n-atoms", "2", "--alpha-re", "1",
               "--beta-re", "1"})
              .code == kExitUsage);
    CHECK(run({"--command", "protocol", "--protocol", "prepare_w", "--n-atoms", "2", "--format", "csv"}).code ==
          kExitUsage);

    for (const std::vector<std::string> args :
         {std::vector<std::string>{"--protocol", "disentangle", "--n-atoms", "3"},
          {"--protocol", "ladder_step", "--n-atoms", "3", "--m", "1", "--theta", "0.7"},
          {"--protocol", "store_qubit", "--n-atoms", "2", "--alpha-re", "0.6", "--beta-im", "0.8", "--roundtrip"},
          {"--protocol", "store_entangled_pair", "--n-atoms", "2", "--alpha-re", "0.6", "--beta-re", "0.8"},
          {"--protocol", "cascade", "--sizes", "2,3", "--time", "0.3", "--time2", "0.4", "--coupling2", "0.5"}}) {
        std::vector<std::string> full{"--command", "protocol"};
        full.insert(full.end(), args.begin(), args.end());
        const auto r = run(full);
        CHECK(r.code == kExitSuccess);
        CHECK(Json::parse(r.out).contains("final_state"));
    }
}

TEST_CASE("cli sweep", "[cli]") {
    const auto r = run({"--command", "sweep", "--interaction", "one_photon", "--n-atoms", "4", "--t-start", "0",
                        "--t-end", format_double(std::numbers::pi), "--steps", "201"});
    REQUIRE(r.code == kExitSuccess);
    std::string header;
    const auto rows = parse_csv(r.out, header);
    CHECK(header == "t,a1_m0,a0_m1,norm");
    REQUIRE(rows.size() == 201);
    for (const auto& row : rows) {
        CHECK(row[1] == Approx(std::pow(std::cos(row[0] * 2.0), 2)).margin(1e-12));
        CHECK(row[3] == Approx(1.0).margin(1e-12));
    }

    CHECK(run({"--command", "sweep", "--interaction", "one_photon", "--n-atoms", "4", "--t-end", "1", "--steps", "1"})
              .code == kExitUsage);
    CHECK(run({"--command", "sweep", "--interaction", "one_photon", "--n-atoms", "4", "--t-start", "1", "--t-end",
               "1", "--steps", "5"})
              .code == kExitUsage);

    const auto one = run({"--command", "sweep", "--interaction", "one_photon", "--n-atoms", "1", "--coupling", "0.7",
                          "--t-end", "5", "--steps", "40"});
    const auto raman = run({"--command", "sweep", "--interaction", "raman", "--n-atoms", "1", "--m", "0",
                            "--coupling", "0.7", "--t-end", "5", "--steps", "40"});
    std::string h1, h2;
    const auto a = parse_csv(one.out, h1);
    const auto b = parse_csv(raman.out, h2);
    CHECK(h2 == "t,c0b1_m0,c1b0_m1,norm");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].size() == b[i].size());
        for (std::size_t k = 0; k < a[i].size(); ++k) CHECK(a[i][k] == Approx(b[i][k]).margin(1e-15));
    }

    for (const std::vector<std::string> args :
         {std::vector<std::string>{"--interaction", "m_photon", "--n-atoms", "2", "--photons", "2", "--p", "1"},
          {"--interaction", "three_photon", "--photons", "3"}}) {
        std::vector<std::string> full{"--command", "sweep", "--t-end", "2", "--steps", "11"};
        full.insert(full.end(), args.begin(), args.end());
        const auto s = run(full);
        REQUIRE(s.code == kExitSuccess);
        std::string h;
        for (const auto& row : parse_csv(s.out, h)) CHECK(row.back() == Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("cli state", "[cli]") {
    const auto dump = run({"--command", "state", "--m", "1", "--n-atoms", "3"});
    REQUIRE(dump.code == kExitSuccess);
    const auto json = Json::parse(dump.out);
    REQUIRE(json["amplitudes"].size() == 3);
    for (const auto& a : json["amplitudes"]) CHECK(a["re"].get<double>() == Approx(1.0 / std::sqrt(3.0)));

    const auto first = scratch("w3.json");
    const auto second = scratch("w3_copy.json");
    CHECK(run({"--command", "state", "--m", "1", "--n-atoms", "3", "--out", first.string()}).code == kExitSuccess);
    CHECK(run({"--command", "state", "--in", first.string(), "--out", second.string()}).code == kExitSuccess);
    CHECK(slurp(first) == slurp(second));

    const auto broken = scratch("broken.json");
    std::ofstream(broken) << "{\"modes\": [";
    const auto bad = run({"--command", "state", "--in", broken.string()});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("parse error") != std::string::npos);

    CHECK(run({"--command", "state", "--m", "1", "--n-atoms", "13"}).code == kExitUsage);
    CHECK(run({"--command", "state", "--in", scratch("missing.json").string()}).code == kExitUsage);
}

TEST_CASE("cli usage errors", "[cli]") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"--command", "dance"}).code == kExitUsage);
    CHECK(run({"--command", "verify", "--bogus"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitSuccess);
}
