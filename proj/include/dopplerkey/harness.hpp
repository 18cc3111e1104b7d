#pragma once

// Monte Carlo experiment harness.  Every experiment returns an in-memory
// table (already formatted, so CSV bytes are reproducible) plus a JSON
// metadata block, and is deterministic in (config, master_seed) regardless
// of the number of worker threads: each trial draws from its own counter
// derived stream and reductions run in fixed order.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "dopplerkey/analytic.hpp"
#include "dopplerkey/errors.hpp"
#include "dopplerkey/keygen.hpp"
#include "dopplerkey/scenario.hpp"

namespace dopplerkey {

struct ExperimentResult {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json metadata;
    double runtime_seconds = 0.0;
};

namespace detail {

// Stream-index layout: experiment ordinal | sub-series | trial.
constexpr std::uint64_t stream_index(unsigned ordinal, unsigned sub, std::uint64_t item) {
    return (static_cast<std::uint64_t>(ordinal) << 56) |
           (static_cast<std::uint64_t>(sub) << 40) | item;
}

constexpr unsigned kStreamNpsds = 1;
constexpr unsigned kStreamEstimator = 2;
constexpr unsigned kStreamMse = 3;
constexpr unsigned kStreamKdr = 4;

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Static range split; trial results land in preallocated slots so the
// outcome does not depend on scheduling.
template <typename F>
void parallel_for(std::int64_t total, int threads, F&& fn) {
    threads = resolve_threads(threads);
    if (total <= 0) return;
    if (threads > total) threads = static_cast<int>(total);
    if (threads == 1) {
        for (std::int64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    std::mutex err_mutex;
    std::exception_ptr first_error;
    const std::int64_t chunk = (total + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::int64_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline std::string fmt_int(std::int64_t v) { return std::to_string(v); }

struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    int bins = 0;
    std::vector<std::int64_t> counts;
    std::int64_t overflow = 0;

    Histogram(double lo_, double hi_, int bins_)
        : lo(lo_), hi(hi_), bins(bins_), counts(static_cast<std::size_t>(bins_), 0) {}

    void add(double x) {
        if (x < lo || x >= hi) {
            ++overflow;
            return;
        }
        const int b = static_cast<int>((x - lo) / (hi - lo) * bins);
        ++counts[static_cast<std::size_t>(std::min(b, bins - 1))];
    }

    double bin_low(int b) const { return lo + (hi - lo) * b / bins; }
    double bin_high(int b) const { return lo + (hi - lo) * (b + 1) / bins; }
    double width() const { return (hi - lo) / bins; }
};

}  // namespace detail

// ----- Experiment 1: achievable key rate over the mobility grid -----------------

inline std::vector<double> linspace_grid(double lo, double hi, int count) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        g.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return g;
}

inline ExperimentResult exp_key_rate_surface(const ScenarioConfig& cfg,
                                             const std::vector<double>& grid_a,
                                             const std::vector<double>& grid_b) {
    const auto t0 = std::chrono::steady_clock::now();
    const double speed_a = norm(cfg.alice.v_det);
    const double speed_b = norm(cfg.bob.v_det);
    if (!(speed_a > 0.0) || !(speed_b > 0.0))
        throw config_error("key-rate surface needs deterministic motion for both nodes");
    ExperimentResult res;
    res.name = "key_rate_surface";
    res.columns = {"kappa_a", "kappa_b", "sigma_d_sq", "key_rate_nats", "config_hash"};
    const std::string hash = config_hash(cfg);
    double rate_max = -1e300;
    double rate_min = 1e300;
    for (double ka : grid_a) {
        if (!(ka > 0.0)) throw std::domain_error("kappa grid values must be positive");
        for (double kb : grid_b) {
            if (!(kb > 0.0)) throw std::domain_error("kappa grid values must be positive");
            const double sd2 = ka * speed_a + kb * speed_b;
            const double rate = max_key_rate(sd2, cfg.f_c);
            rate_max = std::max(rate_max, rate);
            rate_min = std::min(rate_min, rate);
            res.rows.push_back({detail::fmt_g17(ka), detail::fmt_g17(kb),
                                detail::fmt_g17(sd2), detail::fmt_g17(rate), hash});
        }
    }
    res.metadata["rate_max_nats"] = rate_max;
    res.metadata["rate_min_nats"] = rate_min;
    res.metadata["grid_a"] = grid_a.size();
    res.metadata["grid_b"] = grid_b.size();
    res.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ----- Experiment 2: spectral-shift density vs mobility --------------------------

inline ExperimentResult exp_npsds_pdf(const ScenarioConfig& cfg,
                                      const std::vector<double>& kappa_set,
                                      std::int64_t trials, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    if (trials < 1) throw config_error("trials must be >= 1");
    const double f_ab = relative_doppler(cfg.alice, cfg.bob, cfg.f_c).f_nominal;
    const double speed_sum = norm(cfg.alice.v_det) + norm(cfg.bob.v_det);
    const double scale = cfg.f_c / kSpeedOfLight;

    std::vector<NpsdsLaw> laws;
    laws.reserve(kappa_set.size());
    for (double kappa : kappa_set) {
        if (!(kappa > 0.0)) throw config_error("kappa values must be positive");
        laws.push_back(make_npsds_law(cfg.power, cfg.symbol_period, scale * f_ab,
                                      scale * scale * kappa * speed_sum));
    }

    // Shared grid so the mode location is comparable across kappa.
    double theta_hi = 0.0;
    for (const auto& law : laws) theta_hi = std::max(theta_hi, npsds_quantile(0.999, law));
    const int bins = 80;

    ExperimentResult res;
    res.name = "npsds_pdf";
    res.columns = {"kappa",           "bin_low",         "bin_high", "count",
                   "empirical_density", "analytic_density", "config_hash"};
    const std::string hash = config_hash(cfg);
    res.metadata["bins"] = bins;
    res.metadata["theta_max"] = theta_hi;
    res.metadata["trials"] = trials;
    nlohmann::json per_kappa = nlohmann::json::array();

    for (std::size_t ki = 0; ki < kappa_set.size(); ++ki) {
        const NpsdsLaw& law = laws[ki];
        std::vector<double> sample(static_cast<std::size_t>(trials));
        detail::parallel_for(trials, threads, [&](std::int64_t i) {
            RandomStream rng(cfg.master_seed,
                             detail::stream_index(detail::kStreamNpsds,
                                                  static_cast<unsigned>(ki),
                                                  static_cast<std::uint64_t>(i)));
            sample[static_cast<std::size_t>(i)] = sample_npsds_law(law, rng);
        });

        detail::Histogram hist(0.0, theta_hi, bins);
        double mean = 0.0;
        for (double x : sample) {
            hist.add(x);
            mean += x;
        }
        mean /= static_cast<double>(trials);
        const double ks =
            ks_statistic(sample, [&](double x) { return npsds_cdf(x, law); });

        int mode_bin = 0;
        for (int b = 1; b < bins; ++b)
            if (hist.counts[static_cast<std::size_t>(b)] >
                hist.counts[static_cast<std::size_t>(mode_bin)])
                mode_bin = b;

        for (int b = 0; b < bins; ++b) {
            const double mid = 0.5 * (hist.bin_low(b) + hist.bin_high(b));
            const double dens = static_cast<double>(hist.counts[static_cast<std::size_t>(b)]) /
                                (static_cast<double>(trials) * hist.width());
            res.rows.push_back({detail::fmt_g17(kappa_set[ki]), detail::fmt_g17(hist.bin_low(b)),
                                detail::fmt_g17(hist.bin_high(b)),
                                detail::fmt_int(hist.counts[static_cast<std::size_t>(b)]),
                                detail::fmt_g17(dens), detail::fmt_g17(npsds_pdf(mid, law)),
                                hash});
        }
        per_kappa.push_back({{"kappa", kappa_set[ki]},
                             {"lambda", law.lambda},
                             {"sigma_theta_sq", law.sigma_theta_sq},
                             {"mean_sample", mean},
                             {"mean_analytic", law.mean()},
                             {"ks", ks},
                             {"mode_bin", mode_bin},
                             {"overflow", hist.overflow}});
    }
    res.metadata["per_kappa"] = per_kappa;
    res.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ----- Experiment 3: estimator histograms ----------------------------------------

inline ExperimentResult exp_estimator_hist(const ScenarioConfig& cfg, double theta_t,
                                           const std::vector<int>& n_set, std::int64_t trials,
                                           int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!(theta_t > 0.0)) throw config_error("theta_t must be positive");
    if (trials < 1) throw config_error("trials must be >= 1");
    const EveThetaRatios ratios = eve_theta_ratios(cfg);
    const char* links[4] = {"ab", "ba", "ae", "be"};
    const double centers[4] = {theta_t, theta_t, ratios.ae * theta_t, ratios.be * theta_t};

    int n_min = n_set.front();
    for (int n : n_set) {
        if (n < 1) throw config_error("n_pilots values must be >= 1");
        n_min = std::min(n_min, n);
    }
    double center_max = 0.0;
    for (double c : centers) center_max = std::max(center_max, c);
    const double upper = center_max * (1.0 + 5.0 / std::sqrt(static_cast<double>(n_min)));
    const int bins = 120;

    ExperimentResult res;
    res.name = "estimator_hist";
    res.columns = {"n_pilots", "link",              "bin_low",          "bin_high",
                   "count",    "empirical_density", "analytic_density", "config_hash"};
    const std::string hash = config_hash(cfg);
    res.metadata["bins"] = bins;
    res.metadata["upper"] = upper;
    res.metadata["theta_t"] = theta_t;
    res.metadata["trials"] = trials;
    res.metadata["ratio_ae"] = ratios.ae;
    res.metadata["ratio_be"] = ratios.be;
    nlohmann::json per_series = nlohmann::json::array();

    for (std::size_t ni = 0; ni < n_set.size(); ++ni) {
        const int n = n_set[ni];
        std::vector<std::vector<double>> sample(
            4, std::vector<double>(static_cast<std::size_t>(trials)));
        detail::parallel_for(trials, threads, [&](std::int64_t i) {
            RandomStream rng(cfg.master_seed,
                             detail::stream_index(detail::kStreamEstimator,
                                                  static_cast<unsigned>(ni),
                                                  static_cast<std::uint64_t>(i)));
            for (int link = 0; link < 4; ++link) {
                double acc = 0.0;
                for (int k = 0; k < n; ++k) acc += rng.exponential(centers[link]);
                sample[static_cast<std::size_t>(link)][static_cast<std::size_t>(i)] =
                    acc / static_cast<double>(n);
            }
        });
        for (int link = 0; link < 4; ++link) {
            const auto& s = sample[static_cast<std::size_t>(link)];
            detail::Histogram hist(0.0, upper, bins);
            double mean = 0.0;
            for (double x : s) {
                hist.add(x);
                mean += x;
            }
            mean /= static_cast<double>(trials);
            double var = 0.0;
            for (double x : s) var += (x - mean) * (x - mean);
            var /= static_cast<double>(trials - 1);
            const double ks = ks_statistic(
                s, [&](double x) { return estimator_cdf(x, centers[link], n); });
            for (int b = 0; b < bins; ++b) {
                const double mid = 0.5 * (hist.bin_low(b) + hist.bin_high(b));
                const double dens =
                    static_cast<double>(hist.counts[static_cast<std::size_t>(b)]) /
                    (static_cast<double>(trials) * hist.width());
                res.rows.push_back(
                    {detail::fmt_int(n), links[link], detail::fmt_g17(hist.bin_low(b)),
                     detail::fmt_g17(hist.bin_high(b)),
                     detail::fmt_int(hist.counts[static_cast<std::size_t>(b)]),
                     detail::fmt_g17(dens),
                     detail::fmt_g17(estimator_pdf(mid, centers[link], n)), hash});
            }
            per_series.push_back({{"n_pilots", n},
                                  {"link", links[link]},
                                  {"center", centers[link]},
                                  {"mean_sample", mean},
                                  {"std_sample", std::sqrt(var)},
                                  {"ks", ks},
                                  {"overflow", hist.overflow}});
        }
    }
    res.metadata["per_series"] = per_series;
    res.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ----- Experiment 4: estimator MSE vs pilot count ---------------------------------

inline ExperimentResult exp_mse(const ScenarioConfig& cfg, double theta_t, int n_min, int n_max,
                                std::int64_t trials, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!(theta_t > 0.0)) throw config_error("theta_t must be positive");
    if (n_min < 1 || n_max < n_min) throw config_error("bad n_pilots range");
    if (trials < 1) throw config_error("trials must be >= 1");
    const EveThetaRatios ratios = eve_theta_ratios(cfg);
    const double centers[4] = {theta_t, theta_t, ratios.ae * theta_t, ratios.be * theta_t};

    ExperimentResult res;
    res.name = "mse";
    res.columns = {"n_pilots",       "mse_ab",      "mse_ba",      "mse_ae",
                   "mse_be",         "analytic_legit", "analytic_ae", "analytic_be",
                   "config_hash"};
    const std::string hash = config_hash(cfg);
    res.metadata["theta_t"] = theta_t;
    res.metadata["trials"] = trials;

    for (int n = n_min; n <= n_max; ++n) {
        std::vector<std::array<double, 4>> sq(static_cast<std::size_t>(trials));
        detail::parallel_for(trials, threads, [&](std::int64_t i) {
            RandomStream rng(cfg.master_seed,
                             detail::stream_index(detail::kStreamMse,
                                                  static_cast<unsigned>(n),
                                                  static_cast<std::uint64_t>(i)));
            for (int link = 0; link < 4; ++link) {
                double acc = 0.0;
                for (int k = 0; k < n; ++k) acc += rng.exponential(centers[link]);
                const double est = acc / static_cast<double>(n);
                sq[static_cast<std::size_t>(i)][static_cast<std::size_t>(link)] =
                    (est - theta_t) * (est - theta_t);
            }
        });
        double mse[4] = {0.0, 0.0, 0.0, 0.0};
        for (const auto& row : sq)
            for (int link = 0; link < 4; ++link)
                mse[static_cast<std::size_t>(link)] += row[static_cast<std::size_t>(link)];
        for (double& m : mse) m /= static_cast<double>(trials);
        const double nn = static_cast<double>(n);
        const double an_legit = theta_t * theta_t / nn;
        const double an_ae = centers[2] * centers[2] / nn +
                             (centers[2] - theta_t) * (centers[2] - theta_t);
        const double an_be = centers[3] * centers[3] / nn +
                             (centers[3] - theta_t) * (centers[3] - theta_t);
        res.rows.push_back({detail::fmt_int(n), detail::fmt_g17(mse[0]),
                            detail::fmt_g17(mse[1]), detail::fmt_g17(mse[2]),
                            detail::fmt_g17(mse[3]), detail::fmt_g17(an_legit),
                            detail::fmt_g17(an_ae), detail::fmt_g17(an_be), hash});
    }
    res.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ----- Experiment 5: key disagreement rate ----------------------------------------

inline ExperimentResult exp_kdr(const ScenarioConfig& cfg, const std::vector<double>& gamma_grid,
                                const std::vector<int>& n_set, std::int64_t durations,
                                int threads, const QuadratureSpec& quad = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    if (durations < 1) throw config_error("n_durations must be >= 1");
    const NpsdsLaw law = npsds_law_from(cfg);
    const double mean_theta = law.mean();
    const int levels = cfg.quantizer.levels;

    ExperimentResult res;
    res.name = "kdr";
    res.columns = {"gamma",        "n_pilots",     "delta",        "kdr_ab_index",
                   "kdr_ab_symbol", "kdr_ae_index", "kdr_be_index", "kdr_theory",
                   "config_hash"};
    const std::string hash = config_hash(cfg);
    res.metadata["durations"] = durations;
    res.metadata["mean_theta"] = mean_theta;
    res.metadata["lambda"] = law.lambda;

    for (std::size_t ni = 0; ni < n_set.size(); ++ni) {
        const int n = n_set[ni];
        if (n < 1) throw config_error("n_pilots values must be >= 1");
        ScenarioConfig run_cfg = cfg;
        run_cfg.n_pilots = n;
        std::vector<double> est_ab(static_cast<std::size_t>(durations));
        std::vector<double> est_ba(static_cast<std::size_t>(durations));
        std::vector<double> est_ae(static_cast<std::size_t>(durations));
        std::vector<double> est_be(static_cast<std::size_t>(durations));
        detail::parallel_for(durations, threads, [&](std::int64_t i) {
            RandomStream rng(cfg.master_seed,
                             detail::stream_index(detail::kStreamKdr,
                                                  static_cast<unsigned>(ni),
                                                  static_cast<std::uint64_t>(i)));
            const DurationRecord rec = run_key_duration(run_cfg, i, rng);
            est_ab[static_cast<std::size_t>(i)] = rec.theta_hat_ab;
            est_ba[static_cast<std::size_t>(i)] = rec.theta_hat_ba;
            est_ae[static_cast<std::size_t>(i)] = rec.theta_hat_ae;
            est_be[static_cast<std::size_t>(i)] = rec.theta_hat_be;
        });
        for (double g : gamma_grid) {
            if (!(g > 0.0)) throw config_error("gamma values must be positive");
            const double delta = g * mean_theta;
            const KeyStream ks_ab = build_key_stream(NodeId::bob, est_ab, delta, levels);
            const KeyStream ks_ba = build_key_stream(NodeId::alice, est_ba, delta, levels);
            const KeyStream ks_ae = build_key_stream(NodeId::eve, est_ae, delta, levels);
            const KeyStream ks_be = build_key_stream(NodeId::eve, est_be, delta, levels);
            const double theory = 1.0 - key_match_probability(delta, law, n, quad);
            res.rows.push_back({detail::fmt_g17(g), detail::fmt_int(n),
                                detail::fmt_g17(delta),
                                detail::fmt_g17(index_kdr(ks_ab, ks_ba)),
                                detail::fmt_g17(kdr(ks_ab, ks_ba)),
                                detail::fmt_g17(index_kdr(ks_ae, ks_ba)),
                                detail::fmt_g17(index_kdr(ks_be, ks_ba)),
                                detail::fmt_g17(theory), hash});
        }
    }
    res.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ----- Experiment 6: pilot-exchange timing ----------------------------------------

inline ExperimentResult exp_appendix_timing(const ScenarioConfig& cfg, double alpha,
                                            double v_max,
                                            const std::vector<double>& distance_grid) {
    const auto t0 = std::chrono::steady_clock::now();
    constexpr double kReferenceBound = 5000.0;  // m/s^2, published companion figure
    ExperimentResult res;
    res.name = "timing";
    res.columns = {"distance_m",          "delta_t_s",
                   "accel_bound_m_s2",    "feasible",
                   "reference_bound_m_s2", "within_reference_bound",
                   "config_hash"};
    const std::string hash = config_hash(cfg);
    for (double d : distance_grid) {
        if (!(d > 0.0)) throw config_error("distances must be positive");
        SpacecraftState a = cfg.alice;
        SpacecraftState b = cfg.bob;
        a.position = {0.0, 0.0, 0.0};
        b.position = {d, 0.0, 0.0};
        const TimingCheck tc = timing_feasibility(a, b, alpha, v_max);
        res.rows.push_back({detail::fmt_g17(d), detail::fmt_g17(tc.delta_t),
                            detail::fmt_g17(tc.accel_bound), tc.feasible ? "1" : "0",
                            detail::fmt_g17(kReferenceBound),
                            kReferenceBound <= tc.accel_bound ? "1" : "0", hash});
    }
    // Carrier-scaled Doppler sanity figure: 1000 m/s at 2 GHz.
    const double doppler = cyclic_from_nominal(1000.0, 2e9);
    res.metadata["doppler_check"] = {{"radial_speed_m_s", 1000.0},
                                     {"carrier_hz", 2e9},
                                     {"doppler_hz", doppler},
                                     {"reference_hz", 6000.0},
                                     {"relative_gap", std::fabs(doppler - 6000.0) / 6000.0}};
    res.metadata["alpha"] = alpha;
    res.metadata["v_max"] = v_max;
    res.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ----- Output ---------------------------------------------------------------------

inline std::string to_csv_string(const ExperimentResult& res) {
    std::string out;
    for (std::size_t c = 0; c < res.columns.size(); ++c) {
        if (c) out += ',';
        out += res.columns[c];
    }
    out += '\n';
    for (const auto& row : res.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

#ifndef DOPPLERKEY_BUILD_ID
#define DOPPLERKEY_BUILD_ID "unknown"
#endif

inline void write_result(const ExperimentResult& res, const ScenarioConfig& cfg,
                         const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw io_error("cannot create output directory '" + out_dir.string() + "'");
    const std::filesystem::path csv_path = out_dir / (res.name + ".csv");
    {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw io_error("cannot open '" + csv_path.string() + "' for writing");
        f << to_csv_string(res);
        if (!f) throw io_error("failed writing '" + csv_path.string() + "'");
    }
    nlohmann::json side;
    side["experiment"] = res.name;
    side["csv"] = csv_path.filename().string();
    side["rows"] = res.rows.size();
    side["master_seed"] = cfg.master_seed;
    side["config_hash"] = config_hash(cfg);
    side["config"] = canonical_text(cfg);
    side["runtime_seconds"] = res.runtime_seconds;
    side["build"] = DOPPLERKEY_BUILD_ID;
    side["metadata"] = res.metadata;
    const std::filesystem::path json_path = out_dir / (res.name + ".json");
    std::ofstream jf(json_path, std::ios::binary);
    if (!jf) throw io_error("cannot open '" + json_path.string() + "' for writing");
    jf << side.dump(2) << '\n';
    if (!jf) throw io_error("failed writing '" + json_path.string() + "'");
}

// ----- Named dispatch ---------------------------------------------------------------

struct ExperimentOptions {
    std::filesystem::path out_dir = "results";
    int threads = 0;                 // 0 = hardware concurrency
    std::int64_t trials_override = 0;  // 0 = use config
    double theta_t = 5.0;            // center for estimator/mse experiments
    double alpha = 1.0;              // timing overhead factor
    double v_max = 1000.0;           // timing velocity tolerance, m/s
};

inline const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {"key-rate", "npsds-pdf", "estimator",
                                                   "mse",      "kdr",       "timing"};
    return names;
}

inline ExperimentResult run_named_experiment(const std::string& name,
                                             const ScenarioConfig& cfg,
                                             const ExperimentOptions& opts) {
    const std::int64_t trials =
        opts.trials_override > 0 ? opts.trials_override : cfg.trials;
    const std::int64_t durations =
        opts.trials_override > 0 ? opts.trials_override : cfg.n_durations;
    if (name == "key-rate") {
        return exp_key_rate_surface(cfg, linspace_grid(0.02, 1.0, 50),
                                    linspace_grid(0.02, 1.0, 50));
    }
    if (name == "npsds-pdf") {
        return exp_npsds_pdf(cfg, {0.1, 0.25, 0.5, 0.8}, trials, opts.threads);
    }
    if (name == "estimator") {
        return exp_estimator_hist(cfg, opts.theta_t, {10, 20, 50}, trials, opts.threads);
    }
    if (name == "mse") {
        const std::int64_t mse_trials =
            opts.trials_override > 0 ? opts.trials_override
                                     : std::min<std::int64_t>(cfg.trials, 20000);
        return exp_mse(cfg, opts.theta_t, 1, 50, mse_trials, opts.threads);
    }
    if (name == "kdr") {
        return exp_kdr(cfg, {0.25, 0.5, 1.0, 2.0, 3.0}, {10, 20, 50}, durations,
                       opts.threads);
    }
    if (name == "timing") {
        return exp_appendix_timing(cfg, opts.alpha, opts.v_max,
                                   {3.8e6, 1.9e7, 3.8e7, 7.6e7, 3.8e8});
    }
    throw config_error("unknown experiment '" + name + "'");
}

}  // namespace dopplerkey
