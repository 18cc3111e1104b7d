#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <vector>

#include "dopplerkey/rng.hpp"
#include "dopplerkey/stats.hpp"

using namespace dopplerkey;

TEST_CASE("stream derivation is deterministic and stream-sensitive") {
    REQUIRE(derive_stream_seed(42, 7) == derive_stream_seed(42, 7));
    REQUIRE(derive_stream_seed(42, 7) != derive_stream_seed(42, 8));
    REQUIRE(derive_stream_seed(42, 7) != derive_stream_seed(43, 7));
    // Single-bit master changes should flip roughly half the output bits.
    int flips = 0;
    for (int b = 0; b < 64; ++b) {
        const std::uint64_t d =
            derive_stream_seed(42, 7) ^ derive_stream_seed(42ULL ^ (1ULL << b), 7);
        for (int k = 0; k < 64; ++k) flips += (d >> k) & 1;
    }
    const double avg = flips / 64.0;
    REQUIRE(avg > 24.0);
    REQUIRE(avg < 40.0);
}

TEST_CASE("identical streams replay identical variates") {
    RandomStream a(99, 5);
    RandomStream b(99, 5);
    for (int i = 0; i < 100; ++i) {
        REQUIRE(a.uniform() == b.uniform());
        REQUIRE(a.normal() == b.normal());
        REQUIRE(a.exponential(3.0) == b.exponential(3.0));
    }
    RandomStream c(99, 6);
    bool any_diff = false;
    RandomStream a2(99, 5);
    for (int i = 0; i < 10; ++i) any_diff |= (a2.uniform() != c.uniform());
    REQUIRE(any_diff);
}

TEST_CASE("uniform moments and support") {
    RandomStream rng(2024, 1);
    const int n = 100000;
    std::vector<double> u(n);
    for (auto& x : u) {
        x = rng.uniform();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
    }
    REQUIRE(sample_mean(u) == Catch::Approx(0.5).margin(0.005));
    REQUIRE(sample_variance(u) == Catch::Approx(1.0 / 12.0).epsilon(0.02));
    const double ks = ks_statistic(u, [](double x) { return x; });
    REQUIRE(ks < 0.01);
}

TEST_CASE("normal moments") {
    RandomStream rng(2024, 2);
    const int n = 200000;
    std::vector<double> z(n);
    for (auto& x : z) x = rng.normal();
    REQUIRE(sample_mean(z) == Catch::Approx(0.0).margin(0.01));
    REQUIRE(sample_variance(z) == Catch::Approx(1.0).epsilon(0.02));
    const double ks = ks_statistic(z, [](double x) { return normal_cdf(x); });
    REQUIRE(ks < 0.01);
}

TEST_CASE("exponential moments and domain") {
    RandomStream rng(2024, 3);
    const int n = 100000;
    std::vector<double> e(n);
    for (auto& x : e) {
        x = rng.exponential(5.0);
        REQUIRE(x >= 0.0);
    }
    REQUIRE(sample_mean(e) == Catch::Approx(5.0).epsilon(0.02));
    REQUIRE(sample_variance(e) == Catch::Approx(25.0).epsilon(0.03));
    RandomStream bad(1, 1);
    REQUIRE_THROWS_AS(bad.exponential(0.0), std::domain_error);
    REQUIRE_THROWS_AS(bad.exponential(-1.0), std::domain_error);
}
