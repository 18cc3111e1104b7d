#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "dopplerkey/stats.hpp"

using namespace dopplerkey;

TEST_CASE("normal cdf basics") {
    REQUIRE(normal_cdf(0.0) == Catch::Approx(0.5).margin(1e-16));
    REQUIRE(normal_cdf(1.96) == Catch::Approx(0.9750021048517795).margin(1e-12));
    for (double x : {0.3, 1.1, 2.7, 4.0})
        REQUIRE(normal_cdf(-x) == Catch::Approx(1.0 - normal_cdf(x)).margin(1e-15));
    REQUIRE(normal_cdf(5.0) - normal_cdf(0.0) ==
            Catch::Approx(0.4999997133484281).margin(1e-15));
}

TEST_CASE("normal pdf integrates to the cdf") {
    const double a = -1.3, b = 2.1;
    const double integral = integrate_panels([](double x) { return normal_pdf(x); }, a, b, 8);
    REQUIRE(integral == Catch::Approx(normal_cdf(b) - normal_cdf(a)).margin(1e-13));
}

TEST_CASE("log cosh is exact for small and safe for large arguments") {
    REQUIRE(log_cosh(0.0) == Catch::Approx(0.0).margin(1e-16));
    REQUIRE(log_cosh(1.0) == Catch::Approx(std::log(std::cosh(1.0))).margin(1e-14));
    REQUIRE(log_cosh(-1.0) == log_cosh(1.0));
    // cosh(800) overflows double; the log-domain form must not.
    REQUIRE(log_cosh(800.0) == Catch::Approx(800.0 - std::log(2.0)).margin(1e-12));
}

TEST_CASE("Gauss-Legendre nodes and weights") {
    const GaussLegendre gl = GaussLegendre::make(16);
    double wsum = 0.0;
    for (std::size_t i = 0; i < gl.weights.size(); ++i) {
        wsum += gl.weights[i];
        REQUIRE(gl.nodes[i] == Catch::Approx(-gl.nodes[gl.nodes.size() - 1 - i]).margin(1e-14));
    }
    REQUIRE(wsum == Catch::Approx(2.0).margin(1e-14));
    // Degree-31 polynomial exactness on 16 points: x^30 over [-1, 1].
    double moment = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        moment += gl.weights[i] * std::pow(gl.nodes[i], 30);
    REQUIRE(moment == Catch::Approx(2.0 / 31.0).margin(1e-13));
}

TEST_CASE("composite and adaptive integration") {
    REQUIRE(integrate_panels([](double x) { return x * x; }, 0.0, 1.0, 4) ==
            Catch::Approx(1.0 / 3.0).margin(1e-15));
    REQUIRE(integrate_panels([](double x) { return std::sin(x); }, 0.0, kPi, 4) ==
            Catch::Approx(2.0).margin(1e-13));
    const double v = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0,
                                        1e-12, 1e-15);
    REQUIRE(v == Catch::Approx(std::exp(1.0) - 1.0).margin(1e-12));
}

TEST_CASE("KS statistic on hand-checked samples") {
    REQUIRE(ks_statistic({0.5}, [](double x) { return x; }) == Catch::Approx(0.5));
    REQUIRE(ks_statistic({0.25, 0.75}, [](double x) { return x; }) == Catch::Approx(0.25));
    // A sample exactly at uniform quantiles (2i+1)/2n has KS = 1/2n.
    std::vector<double> s;
    const int n = 50;
    for (int i = 0; i < n; ++i) s.push_back((2.0 * i + 1.0) / (2.0 * n));
    REQUIRE(ks_statistic(s, [](double x) { return x; }) ==
            Catch::Approx(1.0 / (2.0 * n)).margin(1e-12));
    REQUIRE_THROWS_AS(ks_statistic({}, [](double x) { return x; }), std::domain_error);
}

TEST_CASE("moment helpers") {
    REQUIRE(sample_mean({1.0, 2.0, 3.0}) == Catch::Approx(2.0));
    REQUIRE(sample_variance({1.0, 2.0, 3.0}) == Catch::Approx(1.0));
    REQUIRE_THROWS_AS(sample_mean({}), std::domain_error);
    REQUIRE_THROWS_AS(sample_variance({1.0}), std::domain_error);
}
