#pragma once

// Spacecraft kinematics: relative Doppler between nodes, the stochastic
// mobility model, the eavesdropper's linear observability system and the
// pilot-exchange timing bound.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "dopplerkey/errors.hpp"
#include "dopplerkey/rng.hpp"
#include "dopplerkey/stats.hpp"
#include "dopplerkey/vec3.hpp"

namespace dopplerkey {

constexpr double kSpeedOfLight = 299792458.0;  // m/s, exact

enum class NodeId { alice = 0, bob = 1, eve = 2 };

inline const char* node_name(NodeId id) {
    switch (id) {
        case NodeId::alice: return "alice";
        case NodeId::bob: return "bob";
        case NodeId::eve: return "eve";
    }
    return "?";
}

struct SpacecraftState {
    NodeId id = NodeId::alice;
    Vec3 position;        // m
    Vec3 v_det;           // deterministic velocity component, m/s
    double sigma_v = 0.0; // std dev of each stochastic velocity axis, m/s
    double a_max = 0.0;   // maximum acceleration magnitude, m/s^2
};

// Relative Doppler in velocity units (m/s) plus its carrier-scaled forms.
struct DopplerObservation {
    double f_nominal = 0.0;  // m/s
    double f_cyclic = 0.0;   // Hz, (f_c / c) * f_nominal
    double omega = 0.0;      // rad/s, 2*pi*f_cyclic
    NodeId from = NodeId::alice;
    NodeId to = NodeId::bob;
};

inline double cyclic_from_nominal(double f_nominal, double carrier_hz) {
    return carrier_hz / kSpeedOfLight * f_nominal;
}

// Doppler of the link m -> k projected on a canonical line-of-sight axis.
//
// The axis points from the lower-numbered node of the pair to the other one,
// so swapping the arguments flips the sign exactly (bitwise), not just up to
// rounding.  For m below k this equals the textbook
// (v_m - v_k) . (p_m - p_k) / |p_m - p_k|.
inline DopplerObservation relative_doppler(const SpacecraftState& m, const SpacecraftState& k,
                                           double carrier_hz,
                                           const Vec3* v_m_override = nullptr,
                                           const Vec3* v_k_override = nullptr) {
    if (!(carrier_hz > 0.0)) throw std::domain_error("carrier frequency must be positive");
    if (m.id == k.id) throw std::domain_error("relative Doppler needs two distinct nodes");
    const bool m_first = static_cast<int>(m.id) < static_cast<int>(k.id);
    const SpacecraftState& first = m_first ? m : k;
    const SpacecraftState& second = m_first ? k : m;
    const Vec3 sep = first.position - second.position;
    const double d = norm(sep);
    if (!(d > 0.0)) throw std::domain_error("nodes are co-located; line of sight undefined");
    const Vec3 axis = sep / d;
    const Vec3 vm = v_m_override ? *v_m_override : m.v_det;
    const Vec3 vk = v_k_override ? *v_k_override : k.v_det;
    const Vec3 rel = m_first ? (vm - vk) : (vk - vm);
    DopplerObservation obs;
    obs.f_nominal = m_first ? dot(rel, axis) : -dot(rel, axis);
    obs.f_cyclic = cyclic_from_nominal(obs.f_nominal, carrier_hz);
    obs.omega = 2.0 * kPi * obs.f_cyclic;
    obs.from = m.id;
    obs.to = k.id;
    return obs;
}

// One stochastic velocity draw: independent zero-mean Gaussian per axis.
inline Vec3 draw_stochastic_velocity(const SpacecraftState& s, RandomStream& rng) {
    return {s.sigma_v * rng.normal(), s.sigma_v * rng.normal(), s.sigma_v * rng.normal()};
}

// Advance a node by one mobility step of length dt: position integrates the
// deterministic velocity plus a fresh stochastic component.  Returns the new
// state and the realized total velocity.
inline std::pair<SpacecraftState, Vec3> brownian_step(const SpacecraftState& s, double dt,
                                                      RandomStream& rng) {
    if (!(dt > 0.0)) throw std::domain_error("mobility step must be positive");
    const Vec3 realized = s.v_det + draw_stochastic_velocity(s, rng);
    SpacecraftState out = s;
    out.position += realized * dt;
    return {out, realized};
}

// kappa = sigma_v^2 / |v_det|; undefined for a node without deterministic motion.
inline double mobility_constant(const SpacecraftState& s) {
    const double speed = norm(s.v_det);
    if (!(speed > 0.0)) throw std::domain_error("mobility constant needs |v_det| > 0");
    return s.sigma_v * s.sigma_v / speed;
}

inline double sigma_v_for_kappa(double speed, double kappa) {
    if (!(speed > 0.0)) throw std::domain_error("speed must be positive");
    if (kappa < 0.0) throw std::domain_error("kappa must be non-negative");
    return std::sqrt(kappa * speed);
}

// Variance of the pairwise nominal Doppler when both nodes move stochastically.
inline double sigma_d_squared(const SpacecraftState& a, const SpacecraftState& b) {
    return a.sigma_v * a.sigma_v + b.sigma_v * b.sigma_v;
}

// ----- Eavesdropper observability ------------------------------------------
//
// Eve measures the two Doppler values f_ae, f_be and tries to solve for the
// twelve unknowns (p_a, v_a, p_b, v_b).  Writing her own measurement model
// with the unknown positions multiplied through by the link distances yields
// two linear equations in those unknowns.

struct EveSystem {
    std::array<std::array<double, 12>, 2> matrix{};
    std::array<double, 2> rhs{};
    int rank = 0;
};

inline EveSystem eve_observability_system(const SpacecraftState& a, const SpacecraftState& b,
                                          const SpacecraftState& e, double f_ae_nominal,
                                          double f_be_nominal) {
    const Vec3 ra = a.position - e.position;
    const Vec3 rb = b.position - e.position;
    const double da = norm(ra);
    const double db = norm(rb);
    if (!(da > 0.0) || !(db > 0.0))
        throw std::domain_error("eavesdropper is co-located with a legitimate node");
    EveSystem sys;
    const Vec3 ve = e.v_det;
    // Row 0: [ (p_a - p_e)^T  -v_e^T  0  0 ] acting on (v_a, p_a, v_b, p_b)
    sys.matrix[0] = {ra.x, ra.y, ra.z, -ve.x, -ve.y, -ve.z, 0, 0, 0, 0, 0, 0};
    sys.matrix[1] = {0, 0, 0, 0, 0, 0, rb.x, rb.y, rb.z, -ve.x, -ve.y, -ve.z};
    sys.rhs[0] = f_ae_nominal * da - dot(ve, e.position);
    sys.rhs[1] = f_be_nominal * db - dot(ve, e.position);

    // Rank from the 2x2 Gram matrix A A^T.
    double g00 = 0.0, g01 = 0.0, g11 = 0.0;
    for (int j = 0; j < 12; ++j) {
        g00 += sys.matrix[0][static_cast<std::size_t>(j)] * sys.matrix[0][static_cast<std::size_t>(j)];
        g01 += sys.matrix[0][static_cast<std::size_t>(j)] * sys.matrix[1][static_cast<std::size_t>(j)];
        g11 += sys.matrix[1][static_cast<std::size_t>(j)] * sys.matrix[1][static_cast<std::size_t>(j)];
    }
    const double tr = g00 + g11;
    const double det = g00 * g11 - g01 * g01;
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    const double e1 = tr / 2.0 + disc;
    const double e2 = std::max(0.0, tr / 2.0 - disc);
    const double smax = std::sqrt(e1);
    const double tol = 1e-10 * smax;
    sys.rank = (std::sqrt(e1) > tol ? 1 : 0) + (std::sqrt(e2) > tol ? 1 : 0);
    return sys;
}

// Minimum-norm solution x = A^T (A A^T)^-1 rhs of the 2x12 system.
inline std::array<double, 12> min_norm_solution(const EveSystem& sys) {
    double g00 = 0.0, g01 = 0.0, g11 = 0.0;
    for (int j = 0; j < 12; ++j) {
        g00 += sys.matrix[0][static_cast<std::size_t>(j)] * sys.matrix[0][static_cast<std::size_t>(j)];
        g01 += sys.matrix[0][static_cast<std::size_t>(j)] * sys.matrix[1][static_cast<std::size_t>(j)];
        g11 += sys.matrix[1][static_cast<std::size_t>(j)] * sys.matrix[1][static_cast<std::size_t>(j)];
    }
    const double det = g00 * g11 - g01 * g01;
    const double scale = std::max(g00, g11);
    if (!(std::fabs(det) > 1e-14 * scale * scale))
        throw numerical_error("observability Gram matrix is singular");
    const double y0 = (g11 * sys.rhs[0] - g01 * sys.rhs[1]) / det;
    const double y1 = (g00 * sys.rhs[1] - g01 * sys.rhs[0]) / det;
    std::array<double, 12> x{};
    for (int j = 0; j < 12; ++j)
        x[static_cast<std::size_t>(j)] = sys.matrix[0][static_cast<std::size_t>(j)] * y0 +
                                         sys.matrix[1][static_cast<std::size_t>(j)] * y1;
    return x;
}

// ----- Pilot-exchange timing ------------------------------------------------
//
// The channel must stay effectively reciprocal while a pilot round trip of
// duration (1 + alpha) * d / c completes; that caps the combined acceleration
// the two nodes may sustain.

struct TimingCheck {
    double delta_t = 0.0;      // round-trip pilot time, s
    double accel_bound = 0.0;  // admissible |a_A| + |a_B|, m/s^2
    bool feasible = true;
};

inline TimingCheck timing_feasibility(const SpacecraftState& a, const SpacecraftState& b,
                                      double alpha, double v_max) {
    if (alpha < 0.0) throw std::domain_error("processing overhead alpha must be >= 0");
    if (!(v_max > 0.0)) throw std::domain_error("velocity tolerance must be positive");
    TimingCheck out;
    const double d = norm(a.position - b.position);
    out.delta_t = (1.0 + alpha) * d / kSpeedOfLight;
    out.accel_bound = out.delta_t > 0.0 ? v_max / out.delta_t
                                        : std::numeric_limits<double>::infinity();
    out.feasible = a.a_max + b.a_max <= out.accel_bound;
    return out;
}

}  // namespace dopplerkey
