#pragma once

// Shared numerics: Gaussian helpers, log-domain cosh, Gauss-Legendre
// quadrature and a Kolmogorov-Smirnov distance.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "dopplerkey/errors.hpp"

namespace dopplerkey {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730951;

inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

// log(cosh(x)) without overflow for large |x|.
inline double log_cosh(double x) {
    const double a = std::fabs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - 0.6931471805599453;
}

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on the Legendre recurrence.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendre& get(int n) {
        static GaussLegendre cache16 = make(16);
        static GaussLegendre cache32 = make(32);
        if (n == 16) return cache16;
        if (n == 32) return cache32;
        thread_local GaussLegendre other;
        other = make(n);
        return other;
    }

    static GaussLegendre make(int n) {
        if (n < 2) throw numerical_error("Gauss-Legendre order must be >= 2");
        GaussLegendre gl;
        gl.nodes.resize(static_cast<std::size_t>(n));
        gl.weights.resize(static_cast<std::size_t>(n));
        const int m = (n + 1) / 2;
        for (int i = 0; i < m; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / pp;
                x -= dx;
                if (std::fabs(dx) < 1e-15) break;
            }
            gl.nodes[static_cast<std::size_t>(i)] = -x;
            gl.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
            const double w = 2.0 / ((1.0 - x * x) * pp * pp);
            gl.weights[static_cast<std::size_t>(i)] = w;
            gl.weights[static_cast<std::size_t>(n - 1 - i)] = w;
        }
        return gl;
    }
};

// Composite Gauss-Legendre integration of f over [a, b] with equal panels.
template <typename F>
double integrate_panels(F&& f, double a, double b, int panels, int order = 16) {
    const GaussLegendre& gl = GaussLegendre::get(order);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double acc = 0.0;
        for (std::size_t k = 0; k < gl.nodes.size(); ++k)
            acc += gl.weights[k] * f(mid + 0.5 * h * gl.nodes[k]);
        total += acc * 0.5 * h;
    }
    return total;
}

// Panel-doubling wrapper: refine until successive estimates agree.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol, double abs_tol,
                          int start_panels = 8, int max_panels = 4096, int order = 16) {
    double prev = integrate_panels(f, a, b, start_panels, order);
    for (int panels = start_panels * 2; panels <= max_panels; panels *= 2) {
        const double cur = integrate_panels(f, a, b, panels, order);
        const double gap = std::fabs(cur - prev);
        if (gap <= std::max(abs_tol, rel_tol * std::fabs(cur))) {
            if (!std::isfinite(cur)) throw numerical_error("integral is not finite");
            return cur;
        }
        prev = cur;
    }
    throw numerical_error("quadrature did not converge within panel budget");
}

// Two-sided KS distance between a sample and a reference CDF.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::domain_error("KS statistic needs a non-empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i + 1) / n));
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    }
    return d;
}

inline double sample_mean(const std::vector<double>& v) {
    if (v.empty()) throw std::domain_error("mean of empty sample");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double sample_variance(const std::vector<double>& v) {
    if (v.size() < 2) throw std::domain_error("variance needs at least two samples");
    const double m = sample_mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

}  // namespace dopplerkey
