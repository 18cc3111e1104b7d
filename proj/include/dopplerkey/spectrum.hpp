#pragma once

// Discrete spectrum of a pilot frame, the noiseless power-spectral-density
// shift laws for BPSK pilots, and the ML estimator fed by exponentially
// distributed spectral samples.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dopplerkey/rng.hpp"
#include "dopplerkey/signal.hpp"
#include "dopplerkey/stats.hpp"

namespace dopplerkey {

struct PowerSpectrum {
    std::vector<double> samples;
    double bin_spacing = 0.0;  // Hz
};

// Direct (unnormalized) DFT: X_k = sum_i x_i exp(-j 2 pi k i / N).
inline ComplexFrame dft(const ComplexFrame& x) {
    if (x.samples.empty()) throw std::domain_error("DFT of an empty frame");
    const std::size_t n = x.samples.size();
    ComplexFrame out;
    out.symbol_period = x.symbol_period;
    out.samples.assign(n, {0.0, 0.0});
    const double base = -2.0 * kPi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double ang = base * static_cast<double>(k) * static_cast<double>(i);
            acc += x.samples[i] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out.samples[k] = acc;
    }
    return out;
}

inline PowerSpectrum power_spectrum(const ComplexFrame& x) {
    const ComplexFrame X = dft(x);
    PowerSpectrum s;
    s.samples.reserve(X.samples.size());
    for (const auto& v : X.samples) s.samples.push_back(std::norm(v));
    s.bin_spacing = x.symbol_period > 0.0
                        ? 1.0 / (static_cast<double>(X.samples.size()) * x.symbol_period)
                        : 0.0;
    return s;
}

// Noiseless spectral-density shift produced by a cyclic Doppler f_D on BPSK
// pilots, split into the exact sinc law and its small-f_D quadratic limit.
struct NpsdsValue {
    double signal_part = 0.0;
    double noise_part = 0.0;
    double theta() const { return signal_part + noise_part; }
};

inline double sinc_normalized(double x) {
    if (x == 0.0) return 1.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

struct NpsdsLawPair {
    NpsdsValue exact;
    NpsdsValue quadratic;
};

inline NpsdsLawPair theoretical_npsds_bpsk(double doppler_cyclic, double power,
                                           double symbol_period, double noise_var = 0.0) {
    if (!(power > 0.0)) throw std::domain_error("power must be positive");
    if (!(symbol_period > 0.0)) throw std::domain_error("symbol period must be positive");
    if (noise_var < 0.0) throw std::domain_error("noise variance must be >= 0");
    const double fdt = std::fabs(doppler_cyclic) * symbol_period;
    NpsdsLawPair out;
    const double s = sinc_normalized(1.0 - fdt);
    out.exact.signal_part = power * symbol_period / 2.0 * s * s;
    out.quadratic.signal_part = power * symbol_period * symbol_period * symbol_period / 2.0 *
                                doppler_cyclic * doppler_cyclic;
    out.exact.noise_part = noise_var;
    out.quadratic.noise_part = noise_var;
    return out;
}

// N iid exponential spectral observations with mean theta.
inline PowerSpectrum sample_npsds_exponential(double theta, int n, RandomStream& rng) {
    if (!(theta > 0.0)) throw std::domain_error("spectral mean must be positive");
    if (n < 1) throw std::domain_error("need at least one spectral sample");
    PowerSpectrum s;
    s.samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.samples.push_back(rng.exponential(theta));
    return s;
}

// ML estimate under the iid exponential model: the sample mean.
inline double ml_estimate(const PowerSpectrum& s) {
    if (s.samples.empty()) throw std::domain_error("ML estimate of an empty spectrum");
    double acc = 0.0;
    for (double v : s.samples) acc += v;
    return acc / static_cast<double>(s.samples.size());
}

// Log-likelihood of the iid exponential model at a candidate mean theta.
inline double exp_log_likelihood(const PowerSpectrum& s, double theta) {
    if (!(theta > 0.0)) throw std::domain_error("candidate mean must be positive");
    if (s.samples.empty()) throw std::domain_error("log-likelihood of an empty spectrum");
    double acc = 0.0;
    for (double v : s.samples) acc += -std::log(theta) - v / theta;
    return acc;
}

}  // namespace dopplerkey
