#pragma once

// Baseband pilot frames and the Doppler-rotating noisy link.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dopplerkey/rng.hpp"
#include "dopplerkey/stats.hpp"

namespace dopplerkey {

struct ComplexFrame {
    std::vector<std::complex<double>> samples;
    double symbol_period = 0.0;  // s
};

enum class PilotPattern { alternating, random_sign };

// BPSK pilot frame with per-symbol energy `power`: symbols are +/- sqrt(P).
inline ComplexFrame bpsk_pilots(int n, double power, PilotPattern pattern,
                                RandomStream* rng = nullptr, double symbol_period = 1e-6) {
    if (n < 1) throw std::domain_error("pilot frame needs at least one symbol");
    if (!(power > 0.0)) throw std::domain_error("pilot power must be positive");
    if (!(symbol_period > 0.0)) throw std::domain_error("symbol period must be positive");
    if (pattern == PilotPattern::random_sign && rng == nullptr)
        throw std::domain_error("random-sign pilots need a random stream");
    const double amp = std::sqrt(power);
    ComplexFrame f;
    f.symbol_period = symbol_period;
    f.samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        bool positive = pattern == PilotPattern::alternating ? (i % 2 == 0)
                                                             : (rng->uniform() < 0.5);
        f.samples.emplace_back(positive ? amp : -amp, 0.0);
    }
    return f;
}

// Flat-fading link: gain, Doppler rotation and circular AWGN.
struct LinkModel {
    double zeta = 1.0;           // amplitude gain
    double pl_exponent = 0.0;    // path-loss exponent
    double distance = 0.0;       // m; 0 means "not modelled"
    double noise_var = 0.0;      // total complex noise variance sigma^2
    double doppler_cyclic = 0.0; // Hz
};

inline LinkModel make_link(double distance, double pl_exponent, double noise_var,
                           double doppler_cyclic) {
    if (!(distance > 0.0)) throw std::domain_error("link distance must be positive");
    if (pl_exponent < 0.0) throw std::domain_error("path-loss exponent must be >= 0");
    if (noise_var < 0.0) throw std::domain_error("noise variance must be >= 0");
    LinkModel l;
    l.distance = distance;
    l.pl_exponent = pl_exponent;
    l.zeta = std::pow(distance, -pl_exponent);
    l.noise_var = noise_var;
    l.doppler_cyclic = doppler_cyclic;
    return l;
}

// y_i = zeta * x_i * exp(j 2 pi f_D i T) + eps_i with circular Gaussian eps.
inline ComplexFrame apply_link(const ComplexFrame& x, const LinkModel& link, RandomStream& rng) {
    if (x.samples.empty()) throw std::domain_error("cannot transmit an empty frame");
    ComplexFrame y;
    y.symbol_period = x.symbol_period;
    y.samples.reserve(x.samples.size());
    const double step = 2.0 * kPi * link.doppler_cyclic * x.symbol_period;
    const double noise_scale = std::sqrt(link.noise_var / 2.0);
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
        const double phase = step * static_cast<double>(i);
        const std::complex<double> rot(std::cos(phase), std::sin(phase));
        std::complex<double> v = link.zeta * x.samples[i] * rot;
        if (noise_scale > 0.0)
            v += std::complex<double>(noise_scale * rng.normal(), noise_scale * rng.normal());
        y.samples.push_back(v);
    }
    return y;
}

}  // namespace dopplerkey
