#pragma once

// Closed-form performance laws: achievable key rate, the noncentral
// distribution of the spectral shift, the truncated-normal estimator law,
// quantizer bin probabilities and the key-match probability integral.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dopplerkey/errors.hpp"
#include "dopplerkey/geometry.hpp"
#include "dopplerkey/stats.hpp"

namespace dopplerkey {

// ----- Key rate --------------------------------------------------------------

// Rate contributed by a Doppler source with differential entropy h (nats,
// velocity units) once scaled onto the carrier: R = h + log(f_c / c).
inline double key_rate(double entropy_nats, double carrier_hz) {
    if (!(carrier_hz > 0.0)) throw std::domain_error("carrier frequency must be positive");
    return entropy_nats + std::log(carrier_hz / kSpeedOfLight);
}

// Gaussian maximizer: h = 0.5 log(2 pi e sigma_d^2).
inline double max_key_rate(double sigma_d_sq, double carrier_hz) {
    if (!(sigma_d_sq > 0.0)) throw std::domain_error("Doppler variance must be positive");
    return key_rate(0.5 * std::log(2.0 * kPi * std::exp(1.0) * sigma_d_sq), carrier_hz);
}

// ----- Spectral-shift distribution -------------------------------------------

// Theta = sigma_theta_sq * (Z + sqrt(lambda))^2 with Z standard normal:
// a scaled noncentral chi-square with one degree of freedom.
struct NpsdsLaw {
    double sigma_theta_sq = 0.0;
    double lambda = 0.0;

    double mean() const { return sigma_theta_sq * (1.0 + lambda); }
};

inline NpsdsLaw make_npsds_law(double power, double symbol_period, double doppler_cyclic_mean,
                               double sigma_fd_sq) {
    if (!(power > 0.0)) throw std::domain_error("power must be positive");
    if (!(symbol_period > 0.0)) throw std::domain_error("symbol period must be positive");
    if (!(sigma_fd_sq > 0.0)) throw std::domain_error("Doppler variance must be positive");
    NpsdsLaw law;
    law.sigma_theta_sq =
        power * symbol_period * symbol_period * symbol_period / 2.0 * sigma_fd_sq;
    law.lambda = doppler_cyclic_mean * doppler_cyclic_mean / sigma_fd_sq;
    return law;
}

inline double npsds_pdf(double theta, const NpsdsLaw& law) {
    if (!(law.sigma_theta_sq > 0.0)) throw std::domain_error("law scale must be positive");
    if (theta <= 0.0) return 0.0;
    const double w = theta / law.sigma_theta_sq;
    const double log_p = -0.5 * (w + law.lambda) + log_cosh(std::sqrt(law.lambda * w)) -
                         0.5 * std::log(2.0 * kPi * law.sigma_theta_sq * theta);
    return std::exp(log_p);
}

inline double npsds_cdf(double theta, const NpsdsLaw& law) {
    if (!(law.sigma_theta_sq > 0.0)) throw std::domain_error("law scale must be positive");
    if (theta <= 0.0) return 0.0;
    const double r = std::sqrt(theta / law.sigma_theta_sq);
    const double s = std::sqrt(law.lambda);
    return normal_cdf(r - s) - normal_cdf(-r - s);
}

// Quantile by bisection on the CDF.
inline double npsds_quantile(double p, const NpsdsLaw& law) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile level must be in (0, 1)");
    double lo = 0.0;
    double hi = law.sigma_theta_sq;
    while (npsds_cdf(hi, law) < p) {
        hi *= 2.0;
        if (!std::isfinite(hi)) throw numerical_error("quantile bracket diverged");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (npsds_cdf(mid, law) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Draw one Theta from the law.
inline double sample_npsds_law(const NpsdsLaw& law, RandomStream& rng) {
    const double z = rng.normal() + std::sqrt(law.lambda);
    return law.sigma_theta_sq * z * z;
}

// ----- ML estimator law -------------------------------------------------------

// For N iid exponential samples with mean theta_t the sample mean is
// Gamma(N, theta_t / N); for moderate N it is well approximated by a normal
// with matching moments truncated to the physical support [0, inf).
inline double estimator_pdf(double theta_hat, double theta_t, int n) {
    if (!(theta_t > 0.0)) throw std::domain_error("true shift must be positive");
    if (n < 1) throw std::domain_error("need at least one spectral sample");
    if (theta_hat < 0.0) return 0.0;
    const double s = theta_t / std::sqrt(static_cast<double>(n));
    const double z = 1.0 - normal_cdf(-theta_t / s);
    return normal_pdf((theta_hat - theta_t) / s) / (s * z);
}

inline double estimator_cdf(double theta_hat, double theta_t, int n) {
    if (!(theta_t > 0.0)) throw std::domain_error("true shift must be positive");
    if (n < 1) throw std::domain_error("need at least one spectral sample");
    if (theta_hat <= 0.0) return 0.0;
    const double s = theta_t / std::sqrt(static_cast<double>(n));
    const double lo = normal_cdf(-theta_t / s);
    return (normal_cdf((theta_hat - theta_t) / s) - lo) / (1.0 - lo);
}

// ----- Quantizer bin probabilities -------------------------------------------

// P{ the peer's estimate falls in bin l } given our estimate theta_hat_ab.
// Conditioned on both estimates being unbiased around the same true shift,
// the peer's estimate is normal around theta_hat_ab with variance
// 2 theta_t^2 / N.
inline double bin_probability(long long l, double delta, double theta_hat_ab, double theta_t,
                              int n) {
    if (!(delta > 0.0)) throw std::domain_error("quantizer step must be positive");
    if (!(theta_t > 0.0)) throw std::domain_error("true shift must be positive");
    if (n < 1) throw std::domain_error("need at least one spectral sample");
    const double s = std::sqrt(2.0 / static_cast<double>(n)) * theta_t;
    const double a = static_cast<double>(l) * delta;
    const double b = a + delta;
    return normal_cdf((b - theta_hat_ab) / s) - normal_cdf((a - theta_hat_ab) / s);
}

// ----- Key-match probability ---------------------------------------------------

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int gauss_points = 16;
    int start_panels = 16;
    int max_panels = 4096;
    double normal_span = 10.0;  // Gaussian factors truncated at +/- span sigma
    double chi_tail = 6.4;      // sqrt(lambda) + chi_tail covers 1 - ~1e-10 of Theta mass
};

namespace detail {

// Probability that both independent estimates (each truncated-normal around
// the true shift w, in units of sigma_theta_sq) land in the same bin of
// width delta_w, summed over all bins that carry mass.
inline double same_bin_probability(double w, double delta_w, int n, double span) {
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double s = w / sqrt_n;
    if (!(s > 0.0)) return 1.0;
    const double znorm = 1.0 - normal_cdf(-sqrt_n);
    const long long lo =
        std::max(0LL, static_cast<long long>(std::floor((w - span * s) / delta_w)));
    const long long hi = static_cast<long long>(std::floor((w + span * s) / delta_w));
    double acc = 0.0;
    for (long long l = lo; l <= hi; ++l) {
        const double a = std::max(static_cast<double>(l) * delta_w, 0.0);
        const double b = static_cast<double>(l + 1) * delta_w;
        const double q = (normal_cdf((b - w) / s) - normal_cdf((a - w) / s)) / znorm;
        acc += q * q;
    }
    return acc;
}

}  // namespace detail

// P{ Alice and Bob quantize to the same index } for step delta, marginalized
// over the spectral-shift law.  Scale-free inside: with w = theta /
// sigma_theta_sq and the substitution w = u^2 the outer integral runs over
// the folded-normal density of u around sqrt(lambda).
inline double key_match_probability(double delta, const NpsdsLaw& law, int n,
                                    const QuadratureSpec& quad = {}) {
    if (!(delta > 0.0)) throw std::domain_error("quantizer step must be positive");
    if (n < 1) throw std::domain_error("need at least one spectral sample");
    if (!(law.sigma_theta_sq > 0.0)) throw std::domain_error("law scale must be positive");
    const double delta_w = delta / law.sigma_theta_sq;
    const double sl = std::sqrt(law.lambda);
    const double u_max = sl + quad.chi_tail;
    const double norm_c = std::sqrt(2.0 / kPi);
    auto integrand = [&](double u) {
        const double dens =
            norm_c * std::exp(-0.5 * (u * u + law.lambda) + log_cosh(sl * u));
        return dens * detail::same_bin_probability(u * u, delta_w, n, quad.normal_span);
    };
    const double p = integrate_adaptive(integrand, 0.0, u_max, quad.rel_tol, quad.abs_tol,
                                        quad.start_panels, quad.max_panels, quad.gauss_points);
    if (!(p >= 0.0 && p <= 1.0 + 1e-9))
        throw numerical_error("key-match probability left [0, 1]");
    return std::min(p, 1.0);
}

struct KdrPoint {
    double gamma = 0.0;
    int n = 0;
    double delta = 0.0;
    double kdr = 0.0;
};

// Theoretical key-disagreement rate 1 - P_c over a grid of normalized steps
// (delta = gamma * E{Theta}) and pilot counts.
inline std::vector<KdrPoint> theoretical_kdr_curve(const std::vector<double>& gamma_grid,
                                                   const std::vector<int>& n_set,
                                                   const NpsdsLaw& law,
                                                   const QuadratureSpec& quad = {}) {
    std::vector<KdrPoint> out;
    out.reserve(gamma_grid.size() * n_set.size());
    for (double g : gamma_grid) {
        if (!(g > 0.0)) throw std::domain_error("normalized step must be positive");
        for (int n : n_set) {
            KdrPoint p;
            p.gamma = g;
            p.n = n;
            p.delta = g * law.mean();
            p.kdr = 1.0 - key_match_probability(p.delta, law, n, quad);
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace dopplerkey
