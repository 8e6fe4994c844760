#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "dickesim/dicke.hpp"
#include "dickesim/oracle.hpp"
#include "property_checks.hpp"

using namespace dickesim;

namespace {

constexpr std::uint32_t kSeed = 20240601;

std::vector<BasisLabel> whole_basis(const SpaceConfig& config) { return enumerate_basis(config); }

}  // namespace

TEST_CASE("group laws hold for every evolution family", "[properties]") {
    props::Rng rng(kSeed);
    for (const auto& family : props::families()) {
        for (int i = 0; i < 40; ++i) {
            const auto r = props::run_case(family, rng);
            INFO(family << " case " << i);
            CHECK(r.norm_drift < 1e-12);
            CHECK(r.composition < 1e-12);
            CHECK(r.reversal < 1e-12);
            CHECK(r.conservation < 1e-11);
        }
    }
}

TEST_CASE("inner product is positive and normalize is idempotent", "[properties]") {
    props::Rng rng(kSeed + 1);
    for (int i = 0; i < 200; ++i) {
        const SpaceConfig config({{"a", props::random_int(rng, 0, 3)}, {"b", props::random_int(rng, 0, 2)}},
                                 props::random_int(rng, 0, 4));
        auto basis = whole_basis(config);
        std::shuffle(basis.begin(), basis.end(), rng);
        basis.resize(static_cast<std::size_t>(props::random_int(rng, 1, static_cast<int>(basis.size()))));
        const auto x = props::random_complex(rng) * props::random_state(rng, config, basis);
        const Complex xx = inner(x, x);
        CHECK(xx.imag() == 0.0);
        CHECK(xx.real() >= 0.0);
        const auto once = normalize(x);
        const auto twice = normalize(once);
        for (const auto& [label, amp] : once.amplitudes()) CHECK(std::abs(amp - twice.amplitude(label)) < 1e-12);
    }
}

TEST_CASE("random symmetric states: ladder and embedding commute", "[properties]") {
    props::Rng rng(kSeed + 2);
    for (int i = 0; i < 60; ++i) {
        const int n = props::random_int(rng, 1, 8);
        const SpaceConfig config({}, n);
        const auto x = props::random_state(rng, config, whole_basis(config));
        const auto up = embed_symmetric(apply_S10(x));
        const auto up_product = apply_product_S10(embed_symmetric(x));
        for (const auto& label : enumerate_basis(up_product.config())) {
            CHECK(std::abs(up.amplitude(label) - up_product.amplitude(label)) < 1e-12);
        }
        const auto back = project_to_sector(embed_symmetric(x));
        CHECK(back.residual_norm < 1e-12);
        for (const auto& [label, amp] : x.amplitudes()) CHECK(std::abs(amp - back.state.amplitude(label)) < 1e-12);
    }
}

TEST_CASE("property suite summary", "[properties]") {
    const auto s = props::run_suite(kSeed + 3, 210);
    CHECK(s.cases == 210);
    CHECK(s.norm_drift < 1e-12);
    CHECK(s.composition < 1e-12);
    CHECK(s.reversal < 1e-12);
    CHECK(s.conservation < 1e-11);
}
