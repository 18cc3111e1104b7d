#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "dopplerkey/scenario.hpp"

using namespace dopplerkey;

TEST_CASE("defaults are valid and finalized kappas drive sigma_v") {
    const ScenarioConfig cfg = finalize(default_scenario());
    REQUIRE_NOTHROW(validate(cfg));
    REQUIRE(cfg.alice.sigma_v == Catch::Approx(std::sqrt(670.0)).epsilon(1e-15));
    REQUIRE(cfg.bob.sigma_v == Catch::Approx(std::sqrt(670.0)).epsilon(1e-15));
    REQUIRE(cfg.eve.sigma_v == Catch::Approx(std::sqrt(200.0)).epsilon(1e-15));
    REQUIRE(cfg.noise_var == Catch::Approx(std::pow(10.0, 0.1)).epsilon(1e-15));
    REQUIRE(cfg.power == 10.0);
}

TEST_CASE("kappa of zero keeps a node deterministic") {
    ScenarioConfig cfg = default_scenario();
    cfg.kappa_a = 0.0;
    cfg = finalize(cfg);
    REQUIRE(cfg.alice.sigma_v == 0.0);
    cfg.kappa_a.reset();
    cfg.alice.sigma_v = 12.5;
    cfg = finalize(cfg);
    REQUIRE(cfg.alice.sigma_v == 12.5);  // without kappa the explicit value stands
}

TEST_CASE("config files override defaults field by field") {
    std::istringstream ini(R"([scenario]
n_pilots = 37
kappa_a = 0.25
master_seed = 99
trials = 1234

[quantizer]
normalized_step = 0.5
levels = 4

[eve]
position = 1000 2000 3000
sigma_v = 7.5
)");
    const ScenarioConfig cfg = parse_config(ini);
    REQUIRE(cfg.n_pilots == 37);
    REQUIRE(cfg.master_seed == 99);
    REQUIRE(cfg.trials == 1234);
    REQUIRE(cfg.alice.sigma_v == Catch::Approx(std::sqrt(0.25 * 6700.0)).epsilon(1e-15));
    REQUIRE(cfg.quantizer.normalized_step == 0.5);
    REQUIRE(cfg.quantizer.step == 0.0);
    REQUIRE(cfg.quantizer.levels == 4);
    REQUIRE(cfg.eve.position.x == 1000.0);
    REQUIRE(cfg.eve.position.z == 3000.0);
    REQUIRE(cfg.eve.sigma_v == 7.5);
    // Untouched fields keep their defaults.
    REQUIRE(cfg.f_c == 1e9);
    REQUIRE(cfg.bob.position.x == 1e5);
}

TEST_CASE("an absolute quantizer step displaces the normalized default") {
    std::istringstream ini("[quantizer]\nstep = 3.5e-13\n");
    const ScenarioConfig cfg = parse_config(ini);
    REQUIRE(cfg.quantizer.step == 3.5e-13);
    REQUIRE(cfg.quantizer.normalized_step == 0.0);
}

TEST_CASE("malformed configs are rejected") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        REQUIRE_THROWS_AS(parse_config(in), config_error);
    };
    reject("[scenario]\nbogus_key = 1\n");
    reject("[bogus_section]\nx = 1\n");
    reject("[scenario]\npower = not_a_number\n");
    reject("[scenario]\npower = -3\n");
    reject("[scenario]\nn_pilots = 0\n");
    reject("[alice]\nposition = 1 2\n");
    reject("[alice]\nposition = 1 2 3 4\n");
    reject("[quantizer]\nstep = 1e-13\nnormalized_step = 0.5\n");
    reject("[quantizer]\nlevels = 1\n");
    reject("[scenario]\nkappa_a = -0.5\n");
    REQUIRE_THROWS_AS(load_config("/nonexistent/path/config.ini"), config_error);
}

TEST_CASE("canonical text is stable and drives the hash") {
    const ScenarioConfig cfg = finalize(default_scenario());
    const std::string text = canonical_text(cfg);
    REQUIRE(text.find("f_c = 1000000000\n") != std::string::npos);
    REQUIRE(text.find("quantizer.levels = 2") != std::string::npos);
    REQUIRE(text.find("alice.v_det = 6700 0 0") != std::string::npos);
    REQUIRE(canonical_text(cfg) == text);

    const std::string h = config_hash(cfg);
    REQUIRE(h.size() == 16);
    REQUIRE(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    REQUIRE(config_hash(cfg) == h);

    ScenarioConfig other = cfg;
    other.master_seed += 1;
    REQUIRE(config_hash(other) != h);
    other = cfg;
    other.eve.position.y += 1.0;
    REQUIRE(config_hash(other) != h);
}

TEST_CASE("round trip: canonical values survive a config file") {
    ScenarioConfig cfg = finalize(default_scenario());
    cfg.n_pilots = 42;
    cfg.kappa_b = 0.37;
    cfg = finalize(cfg);
    std::ostringstream ini;
    ini << "[scenario]\nn_pilots = 42\nkappa_b = 0.37\n";
    std::istringstream in(ini.str());
    const ScenarioConfig loaded = parse_config(in);
    REQUIRE(config_hash(loaded) == config_hash(cfg));
}

TEST_CASE("derived laws from the scenario") {
    const ScenarioConfig cfg = finalize(default_scenario());
    const NpsdsLaw law = npsds_law_from(cfg);
    REQUIRE(law.lambda == Catch::Approx(7.731946346025538).epsilon(1e-12));
    REQUIRE(law.mean() == Catch::Approx(6.509452396212877e-13).epsilon(1e-12));
    const EveThetaRatios r = eve_theta_ratios(cfg);
    REQUIRE(r.ae == Catch::Approx(3.9998086952347545).epsilon(1e-9));
    REQUIRE(r.be == Catch::Approx(9.0002624806717).epsilon(1e-9));
}

TEST_CASE("validation rejects inconsistent scenarios") {
    auto expect_bad = [](auto&& mutate) {
        ScenarioConfig cfg = finalize(default_scenario());
        mutate(cfg);
        REQUIRE_THROWS_AS(validate(cfg), config_error);
    };
    expect_bad([](ScenarioConfig& c) { c.f_c = 0.0; });
    expect_bad([](ScenarioConfig& c) { c.symbol_period = -1e-6; });
    expect_bad([](ScenarioConfig& c) { c.n_pilots = 0; });
    expect_bad([](ScenarioConfig& c) { c.n_durations = 0; });
    expect_bad([](ScenarioConfig& c) { c.power = 0.0; });
    expect_bad([](ScenarioConfig& c) { c.noise_var = -0.1; });
    expect_bad([](ScenarioConfig& c) { c.trials = 0; });
    expect_bad([](ScenarioConfig& c) { c.quantizer.levels = 1; });
    expect_bad([](ScenarioConfig& c) { c.kappa_a = -1.0; });
}
