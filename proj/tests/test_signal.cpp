#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "dopplerkey/geometry.hpp"
#include "dopplerkey/signal.hpp"

using namespace dopplerkey;

TEST_CASE("alternating BPSK pilots") {
    const ComplexFrame f = bpsk_pilots(4, 1.0, PilotPattern::alternating);
    REQUIRE(f.samples.size() == 4);
    REQUIRE(f.samples[0] == std::complex<double>(1.0, 0.0));
    REQUIRE(f.samples[1] == std::complex<double>(-1.0, 0.0));
    REQUIRE(f.samples[2] == std::complex<double>(1.0, 0.0));
    REQUIRE(f.samples[3] == std::complex<double>(-1.0, 0.0));
    const ComplexFrame g = bpsk_pilots(3, 10.0, PilotPattern::alternating);
    for (const auto& s : g.samples) REQUIRE(std::norm(s) == Catch::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("random-sign pilots have constant modulus and balanced signs") {
    RandomStream rng(31, 1);
    const ComplexFrame f = bpsk_pilots(100000, 4.0, PilotPattern::random_sign, &rng);
    double sum = 0.0;
    for (const auto& s : f.samples) {
        REQUIRE(std::norm(s) == Catch::Approx(4.0).epsilon(1e-15));
        sum += s.real();
    }
    REQUIRE(sum / static_cast<double>(f.samples.size()) == Catch::Approx(0.0).margin(0.03));
    REQUIRE_THROWS_AS(bpsk_pilots(10, 4.0, PilotPattern::random_sign, nullptr),
                      std::domain_error);
}

TEST_CASE("pilot argument validation") {
    REQUIRE_THROWS_AS(bpsk_pilots(0, 1.0, PilotPattern::alternating), std::domain_error);
    REQUIRE_THROWS_AS(bpsk_pilots(4, 0.0, PilotPattern::alternating), std::domain_error);
    REQUIRE_THROWS_AS(bpsk_pilots(4, 1.0, PilotPattern::alternating, nullptr, 0.0),
                      std::domain_error);
}

TEST_CASE("link factory ties gain to distance") {
    const LinkModel l = make_link(100.0, 2.0, 0.5, 300.0);
    REQUIRE(l.zeta == Catch::Approx(1e-4).epsilon(1e-15));
    REQUIRE(l.noise_var == 0.5);
    REQUIRE(l.doppler_cyclic == 300.0);
    const LinkModel unit = make_link(50.0, 0.0, 0.0, 0.0);
    REQUIRE(unit.zeta == 1.0);
    REQUIRE_THROWS_AS(make_link(0.0, 2.0, 0.5, 300.0), std::domain_error);
    REQUIRE_THROWS_AS(make_link(10.0, -1.0, 0.5, 300.0), std::domain_error);
    REQUIRE_THROWS_AS(make_link(10.0, 1.0, -0.5, 300.0), std::domain_error);
}

TEST_CASE("identity link is exact passthrough") {
    RandomStream rng(31, 2);
    const ComplexFrame x = bpsk_pilots(16, 10.0, PilotPattern::alternating);
    LinkModel id;  // zeta 1, no Doppler, no noise
    const ComplexFrame y = apply_link(x, id, rng);
    for (std::size_t i = 0; i < x.samples.size(); ++i) REQUIRE(y.samples[i] == x.samples[i]);
}

TEST_CASE("noise-free rotation preserves modulus and applies the expected phase") {
    RandomStream rng(31, 3);
    const ComplexFrame x = bpsk_pilots(64, 10.0, PilotPattern::alternating);
    LinkModel l;
    l.zeta = 0.5;
    l.doppler_cyclic = 12500.0;  // f_D * T = 0.0125
    const ComplexFrame y = apply_link(x, l, rng);
    for (std::size_t i = 0; i < y.samples.size(); ++i) {
        REQUIRE(std::abs(y.samples[i]) ==
                Catch::Approx(0.5 * std::abs(x.samples[i])).epsilon(1e-12));
        const double expected = 2.0 * kPi * l.doppler_cyclic * x.symbol_period *
                                static_cast<double>(i);
        const std::complex<double> ratio = y.samples[i] / (l.zeta * x.samples[i]);
        REQUIRE(std::arg(ratio) ==
                Catch::Approx(std::remainder(expected, 2.0 * kPi)).margin(1e-9));
    }
}

TEST_CASE("opposite Doppler signs rotate conjugately") {
    RandomStream rng(31, 4);
    const ComplexFrame x = bpsk_pilots(32, 1.0, PilotPattern::alternating);
    LinkModel fwd, rev;
    fwd.doppler_cyclic = 40000.0;
    rev.doppler_cyclic = -40000.0;
    const ComplexFrame yf = apply_link(x, fwd, rng);
    const ComplexFrame yr = apply_link(x, rev, rng);
    for (std::size_t i = 0; i < x.samples.size(); ++i)
        REQUIRE(yf.samples[i] == std::conj(yr.samples[i]));
}

TEST_CASE("link noise is circular with the configured variance") {
    RandomStream rng(31, 5);
    const int n = 200000;
    ComplexFrame x;
    x.symbol_period = 1e-6;
    x.samples.assign(n, {0.0, 0.0});
    LinkModel l;
    l.noise_var = 1.2589254117941673;
    const ComplexFrame y = apply_link(x, l, rng);
    double vr = 0.0, vi = 0.0, cross = 0.0;
    for (const auto& s : y.samples) {
        vr += s.real() * s.real();
        vi += s.imag() * s.imag();
        cross += s.real() * s.imag();
    }
    vr /= n;
    vi /= n;
    cross /= n;
    REQUIRE(vr == Catch::Approx(l.noise_var / 2.0).epsilon(0.02));
    REQUIRE(vi == Catch::Approx(l.noise_var / 2.0).epsilon(0.02));
    REQUIRE(cross == Catch::Approx(0.0).margin(0.01));
}

TEST_CASE("empirical SNR matches power over noise variance") {
    RandomStream rng(31, 6);
    const int n = 50000;
    ComplexFrame x;
    x.symbol_period = 1e-6;
    x.samples.assign(n, {std::sqrt(10.0), 0.0});
    LinkModel l;
    l.noise_var = 1.2589254117941673;
    l.doppler_cyclic = 1000.0;
    const ComplexFrame y = apply_link(x, l, rng);
    double noise_power = 0.0;
    for (std::size_t i = 0; i < y.samples.size(); ++i) {
        const double phase = 2.0 * kPi * l.doppler_cyclic * x.symbol_period *
                             static_cast<double>(i);
        const std::complex<double> clean =
            x.samples[i] * std::complex<double>(std::cos(phase), std::sin(phase));
        noise_power += std::norm(y.samples[i] - clean);
    }
    noise_power /= n;
    const double snr = 10.0 / noise_power;
    REQUIRE(snr == Catch::Approx(10.0 / l.noise_var).epsilon(0.02));
    REQUIRE_THROWS_AS(apply_link(ComplexFrame{}, l, rng), std::domain_error);
}
