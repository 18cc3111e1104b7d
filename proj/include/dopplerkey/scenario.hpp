#pragma once

// Scenario description: three spacecraft, waveform and quantizer parameters,
// RNG seeding, INI-style config files, canonical serialization and hashing,
// and the per-duration key-generation step shared by the simulation
// experiments.

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dopplerkey/analytic.hpp"
#include "dopplerkey/errors.hpp"
#include "dopplerkey/geometry.hpp"
#include "dopplerkey/keygen.hpp"
#include "dopplerkey/spectrum.hpp"

namespace dopplerkey {

struct ScenarioConfig {
    double f_c = 1e9;             // carrier, Hz
    double symbol_period = 1e-6;  // s
    int n_pilots = 20;
    std::int64_t n_durations = 100000;
    double power = 10.0;                     // linear (10 dB)
    double noise_var = 1.2589254117941673;   // linear (1 dB)
    QuantizerConfig quantizer{0.0, 1.0, 2};
    SpacecraftState alice;
    SpacecraftState bob;
    SpacecraftState eve;
    std::optional<double> kappa_a = 0.1;  // overrides alice.sigma_v when set
    std::optional<double> kappa_b = 0.1;  // overrides bob.sigma_v when set
    std::uint64_t master_seed = 424242;
    std::int64_t trials = 100000;
};

inline ScenarioConfig default_scenario() {
    ScenarioConfig cfg;
    cfg.alice.id = NodeId::alice;
    cfg.alice.position = {0.0, 0.0, 0.0};
    cfg.alice.v_det = {6700.0, 0.0, 0.0};
    cfg.alice.a_max = 1000.0;

    cfg.bob.id = NodeId::bob;
    cfg.bob.position = {1e5, 0.0, 0.0};
    const double ang = 10.0 * kPi / 180.0;
    cfg.bob.v_det = {6700.0 * std::cos(ang), 6700.0 * std::sin(ang), 0.0};
    cfg.bob.a_max = 1000.0;

    cfg.eve.id = NodeId::eve;
    cfg.eve.position = {96691.0, 314088.0, 0.0};
    const double diag = std::sqrt(0.5);
    cfg.eve.v_det = {2000.0 * diag, 2000.0 * diag, 0.0};
    cfg.eve.sigma_v = std::sqrt(0.1 * 2000.0);
    cfg.eve.a_max = 1000.0;
    return cfg;
}

// Apply kappa overrides so sigma_v always reflects the effective mobility.
inline ScenarioConfig finalize(ScenarioConfig cfg) {
    if (cfg.kappa_a)
        cfg.alice.sigma_v = sigma_v_for_kappa(norm(cfg.alice.v_det), *cfg.kappa_a);
    if (cfg.kappa_b) cfg.bob.sigma_v = sigma_v_for_kappa(norm(cfg.bob.v_det), *cfg.kappa_b);
    return cfg;
}

inline void validate(const ScenarioConfig& cfg) {
    if (!(cfg.f_c > 0.0)) throw config_error("f_c must be positive");
    if (!(cfg.symbol_period > 0.0)) throw config_error("symbol_period must be positive");
    if (cfg.n_pilots < 1) throw config_error("n_pilots must be >= 1");
    if (cfg.n_durations < 1) throw config_error("n_durations must be >= 1");
    if (!(cfg.power > 0.0)) throw config_error("power must be positive");
    if (cfg.noise_var < 0.0) throw config_error("noise_var must be >= 0");
    if (cfg.trials < 1) throw config_error("trials must be >= 1");
    if (cfg.alice.sigma_v < 0.0 || cfg.bob.sigma_v < 0.0 || cfg.eve.sigma_v < 0.0)
        throw config_error("sigma_v must be >= 0");
    if (cfg.kappa_a && *cfg.kappa_a < 0.0) throw config_error("kappa_a must be >= 0");
    if (cfg.kappa_b && *cfg.kappa_b < 0.0) throw config_error("kappa_b must be >= 0");
    if (cfg.kappa_a && !(norm(cfg.alice.v_det) > 0.0))
        throw config_error("kappa_a needs alice.v_det to be non-zero");
    if (cfg.kappa_b && !(norm(cfg.bob.v_det) > 0.0))
        throw config_error("kappa_b needs bob.v_det to be non-zero");
    validate(cfg.quantizer);
}

// ----- Config files -----------------------------------------------------------

namespace detail {

inline Vec3 parse_vec3(const std::string& text, const std::string& key) {
    std::istringstream iss(text);
    Vec3 v;
    if (!(iss >> v.x >> v.y >> v.z))
        throw config_error("expected three numbers for " + key + ", got '" + text + "'");
    std::string rest;
    if (iss >> rest) throw config_error("trailing content after " + key + ": '" + rest + "'");
    return v;
}

inline double parse_double(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size()) throw config_error("");
        return v;
    } catch (...) {
        throw config_error("expected a number for " + key + ", got '" + text + "'");
    }
}

inline std::int64_t parse_int(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(text, &pos);
        if (pos != text.size()) throw config_error("");
        return v;
    } catch (...) {
        throw config_error("expected an integer for " + key + ", got '" + text + "'");
    }
}

inline std::uint64_t parse_uint(const std::string& text, const std::string& key) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(text, &pos);
        if (pos != text.size()) throw config_error("");
        return v;
    } catch (...) {
        throw config_error("expected an unsigned integer for " + key + ", got '" + text + "'");
    }
}

inline void load_state(const boost::property_tree::ptree& sec, const std::string& name,
                       SpacecraftState& st) {
    for (const auto& kv : sec) {
        const std::string key = name + "." + kv.first;
        const std::string val = kv.second.get_value<std::string>();
        if (kv.first == "position")
            st.position = parse_vec3(val, key);
        else if (kv.first == "v_det")
            st.v_det = parse_vec3(val, key);
        else if (kv.first == "sigma_v")
            st.sigma_v = parse_double(val, key);
        else if (kv.first == "a_max")
            st.a_max = parse_double(val, key);
        else
            throw config_error("unknown key '" + key + "'");
    }
}

}  // namespace detail

// Parse an INI-style config; every key is optional and defaults to the
// baseline scenario.  Unknown sections or keys are rejected.
inline ScenarioConfig parse_config(std::istream& in, const std::string& origin = "<stream>") {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw config_error(origin + ": " + e.message());
    }
    ScenarioConfig cfg = default_scenario();
    bool quant_step_seen = false;
    for (const auto& sec : tree) {
        if (sec.first == "scenario") {
            for (const auto& kv : sec.second) {
                const std::string val = kv.second.get_value<std::string>();
                if (kv.first == "f_c")
                    cfg.f_c = detail::parse_double(val, kv.first);
                else if (kv.first == "symbol_period")
                    cfg.symbol_period = detail::parse_double(val, kv.first);
                else if (kv.first == "n_pilots")
                    cfg.n_pilots = static_cast<int>(detail::parse_int(val, kv.first));
                else if (kv.first == "n_durations")
                    cfg.n_durations = detail::parse_int(val, kv.first);
                else if (kv.first == "power")
                    cfg.power = detail::parse_double(val, kv.first);
                else if (kv.first == "noise_var")
                    cfg.noise_var = detail::parse_double(val, kv.first);
                else if (kv.first == "kappa_a")
                    cfg.kappa_a = detail::parse_double(val, kv.first);
                else if (kv.first == "kappa_b")
                    cfg.kappa_b = detail::parse_double(val, kv.first);
                else if (kv.first == "master_seed")
                    cfg.master_seed = detail::parse_uint(val, kv.first);
                else if (kv.first == "trials")
                    cfg.trials = detail::parse_int(val, kv.first);
                else
                    throw config_error("unknown key 'scenario." + kv.first + "'");
            }
        } else if (sec.first == "quantizer") {
            for (const auto& kv : sec.second) {
                const std::string val = kv.second.get_value<std::string>();
                if (kv.first == "step") {
                    cfg.quantizer.step = detail::parse_double(val, kv.first);
                    if (!quant_step_seen) cfg.quantizer.normalized_step = 0.0;
                    quant_step_seen = true;
                } else if (kv.first == "normalized_step") {
                    cfg.quantizer.normalized_step = detail::parse_double(val, kv.first);
                    if (!quant_step_seen) cfg.quantizer.step = 0.0;
                    quant_step_seen = true;
                } else if (kv.first == "levels") {
                    cfg.quantizer.levels = static_cast<int>(detail::parse_int(val, kv.first));
                } else {
                    throw config_error("unknown key 'quantizer." + kv.first + "'");
                }
            }
        } else if (sec.first == "alice") {
            detail::load_state(sec.second, sec.first, cfg.alice);
        } else if (sec.first == "bob") {
            detail::load_state(sec.second, sec.first, cfg.bob);
        } else if (sec.first == "eve") {
            detail::load_state(sec.second, sec.first, cfg.eve);
        } else {
            throw config_error("unknown section '[" + sec.first + "]'");
        }
    }
    validate(cfg);
    cfg = finalize(cfg);
    return cfg;
}

inline ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

// ----- Canonical serialization and hashing --------------------------------------

namespace detail {

inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void emit_state(std::ostringstream& os, const char* name, const SpacecraftState& s) {
    os << name << ".position = " << fmt_g17(s.position.x) << ' ' << fmt_g17(s.position.y)
       << ' ' << fmt_g17(s.position.z) << '\n';
    os << name << ".v_det = " << fmt_g17(s.v_det.x) << ' ' << fmt_g17(s.v_det.y) << ' '
       << fmt_g17(s.v_det.z) << '\n';
    os << name << ".sigma_v = " << fmt_g17(s.sigma_v) << '\n';
    os << name << ".a_max = " << fmt_g17(s.a_max) << '\n';
}

}  // namespace detail

// Fixed-order, full-precision dump; input to the config hash and echoed in
// result sidecars.
inline std::string canonical_text(const ScenarioConfig& cfg) {
    std::ostringstream os;
    os << "f_c = " << detail::fmt_g17(cfg.f_c) << '\n';
    os << "symbol_period = " << detail::fmt_g17(cfg.symbol_period) << '\n';
    os << "n_pilots = " << cfg.n_pilots << '\n';
    os << "n_durations = " << cfg.n_durations << '\n';
    os << "power = " << detail::fmt_g17(cfg.power) << '\n';
    os << "noise_var = " << detail::fmt_g17(cfg.noise_var) << '\n';
    os << "kappa_a = " << (cfg.kappa_a ? detail::fmt_g17(*cfg.kappa_a) : "none") << '\n';
    os << "kappa_b = " << (cfg.kappa_b ? detail::fmt_g17(*cfg.kappa_b) : "none") << '\n';
    os << "master_seed = " << cfg.master_seed << '\n';
    os << "trials = " << cfg.trials << '\n';
    os << "quantizer.step = " << detail::fmt_g17(cfg.quantizer.step) << '\n';
    os << "quantizer.normalized_step = " << detail::fmt_g17(cfg.quantizer.normalized_step)
       << '\n';
    os << "quantizer.levels = " << cfg.quantizer.levels << '\n';
    detail::emit_state(os, "alice", cfg.alice);
    detail::emit_state(os, "bob", cfg.bob);
    detail::emit_state(os, "eve", cfg.eve);
    return os.str();
}

inline std::string config_hash(const ScenarioConfig& cfg) {
    const std::string text = canonical_text(cfg);
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a 64
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ----- Derived laws -------------------------------------------------------------

// Spectral-shift law of the legitimate link implied by the deterministic
// geometry and the stochastic mobility.
inline NpsdsLaw npsds_law_from(const ScenarioConfig& cfg) {
    const DopplerObservation obs = relative_doppler(cfg.alice, cfg.bob, cfg.f_c);
    const double sigma_d_sq = sigma_d_squared(cfg.alice, cfg.bob);
    if (!(sigma_d_sq > 0.0)) throw config_error("legitimate link needs stochastic mobility");
    const double scale = cfg.f_c / kSpeedOfLight;
    return make_npsds_law(cfg.power, cfg.symbol_period, obs.f_cyclic,
                          scale * scale * sigma_d_sq);
}

// Ratio of an eavesdropper link's nominal shift to the legitimate one,
// expressed on the spectral scale (squared Doppler ratio).
struct EveThetaRatios {
    double ae = 0.0;
    double be = 0.0;
};

inline EveThetaRatios eve_theta_ratios(const ScenarioConfig& cfg) {
    const double f_ab = relative_doppler(cfg.alice, cfg.bob, cfg.f_c).f_nominal;
    const double f_ae = relative_doppler(cfg.alice, cfg.eve, cfg.f_c).f_nominal;
    const double f_be = relative_doppler(cfg.bob, cfg.eve, cfg.f_c).f_nominal;
    if (f_ab == 0.0) throw config_error("legitimate link has zero nominal Doppler");
    EveThetaRatios r;
    r.ae = (f_ae / f_ab) * (f_ae / f_ab);
    r.be = (f_be / f_ab) * (f_be / f_ab);
    return r;
}

// ----- Per-duration simulation step ----------------------------------------------

struct DurationRecord {
    std::int64_t t = 0;
    double theta_true = 0.0;     // legitimate-link spectral shift
    double theta_hat_ab = 0.0;   // Bob's estimate of the A->B link
    double theta_hat_ba = 0.0;   // Alice's estimate of the B->A link
    double theta_hat_ae = 0.0;   // Eve's estimate of the A->E link
    double theta_hat_be = 0.0;   // Eve's estimate of the B->E link
};

namespace detail {

inline double quadratic_theta(double f_cyclic, double power, double symbol_period) {
    return power * symbol_period * symbol_period * symbol_period / 2.0 * f_cyclic * f_cyclic;
}

inline double estimate_from_theta(double theta, int n, RandomStream& rng) {
    if (theta <= 0.0) {
        // Degenerate (measure-zero) draw: keep the stream advance so results
        // stay reproducible, then report the exact zero.
        for (int i = 0; i < n; ++i) rng.uniform();
        return 0.0;
    }
    return ml_estimate(sample_npsds_exponential(theta, n, rng));
}

}  // namespace detail

// One key-generation duration: fresh stochastic velocities for all three
// nodes, quadratic-law spectral shifts per link, and one ML estimate per
// observation direction.  The RNG consumption order is fixed.
inline DurationRecord run_key_duration(const ScenarioConfig& cfg, std::int64_t t,
                                       RandomStream& rng) {
    const Vec3 va = cfg.alice.v_det + draw_stochastic_velocity(cfg.alice, rng);
    const Vec3 vb = cfg.bob.v_det + draw_stochastic_velocity(cfg.bob, rng);
    const Vec3 ve = cfg.eve.v_det + draw_stochastic_velocity(cfg.eve, rng);

    const DopplerObservation f_ab = relative_doppler(cfg.alice, cfg.bob, cfg.f_c, &va, &vb);
    const DopplerObservation f_ae = relative_doppler(cfg.alice, cfg.eve, cfg.f_c, &va, &ve);
    const DopplerObservation f_be = relative_doppler(cfg.bob, cfg.eve, cfg.f_c, &vb, &ve);

    DurationRecord rec;
    rec.t = t;
    rec.theta_true = detail::quadratic_theta(f_ab.f_cyclic, cfg.power, cfg.symbol_period);
    const double theta_ae = detail::quadratic_theta(f_ae.f_cyclic, cfg.power, cfg.symbol_period);
    const double theta_be = detail::quadratic_theta(f_be.f_cyclic, cfg.power, cfg.symbol_period);

    rec.theta_hat_ab = detail::estimate_from_theta(rec.theta_true, cfg.n_pilots, rng);
    rec.theta_hat_ba = detail::estimate_from_theta(rec.theta_true, cfg.n_pilots, rng);
    rec.theta_hat_ae = detail::estimate_from_theta(theta_ae, cfg.n_pilots, rng);
    rec.theta_hat_be = detail::estimate_from_theta(theta_be, cfg.n_pilots, rng);
    return rec;
}

}  // namespace dopplerkey
