#pragma once

// Uniform quantization of spectral-shift estimates into key indices, symbols
// and bits, plus disagreement-rate bookkeeping.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dopplerkey/errors.hpp"
#include "dopplerkey/geometry.hpp"

namespace dopplerkey {

// Exactly one of `step` (absolute) and `normalized_step` (in units of the
// mean shift) must be positive.
struct QuantizerConfig {
    double step = 0.0;
    double normalized_step = 0.0;
    int levels = 2;
};

inline void validate(const QuantizerConfig& q) {
    const bool has_step = q.step > 0.0;
    const bool has_norm = q.normalized_step > 0.0;
    if (has_step == has_norm)
        throw config_error("exactly one of step and normalized_step must be set");
    if (q.levels < 2) throw config_error("quantizer needs at least two levels");
}

inline double resolve_step(const QuantizerConfig& q, double mean_theta) {
    validate(q);
    if (q.step > 0.0) return q.step;
    if (!(mean_theta > 0.0))
        throw config_error("normalized quantizer step needs a positive mean shift");
    return q.normalized_step * mean_theta;
}

struct QuantizedValue {
    std::int64_t index = 0;
    int symbol = 0;
};

inline QuantizedValue quantize(double theta_hat, double delta, int levels) {
    if (theta_hat < 0.0) throw std::domain_error("spectral-shift estimate must be >= 0");
    if (!(delta > 0.0)) throw std::domain_error("quantizer step must be positive");
    if (levels < 2) throw std::domain_error("quantizer needs at least two levels");
    QuantizedValue v;
    v.index = static_cast<std::int64_t>(std::floor(theta_hat / delta));
    v.symbol = static_cast<int>(v.index % levels);
    return v;
}

inline QuantizedValue quantize(double theta_hat, const QuantizerConfig& q,
                               double mean_theta = 0.0) {
    return quantize(theta_hat, resolve_step(q, mean_theta), q.levels);
}

struct KeyStream {
    NodeId node = NodeId::alice;
    std::vector<std::int64_t> indices;
    std::vector<int> symbols;
    std::vector<std::uint8_t> bits;
};

inline int bits_per_symbol(int levels) {
    if (levels < 2) throw std::domain_error("quantizer needs at least two levels");
    int b = 0;
    for (int v = levels - 1; v > 0; v >>= 1) ++b;
    return b;
}

inline KeyStream build_key_stream(NodeId node, const std::vector<double>& estimates,
                                  double delta, int levels) {
    KeyStream ks;
    ks.node = node;
    ks.indices.reserve(estimates.size());
    ks.symbols.reserve(estimates.size());
    const int nb = bits_per_symbol(levels);
    ks.bits.reserve(estimates.size() * static_cast<std::size_t>(nb));
    for (double e : estimates) {
        const QuantizedValue v = quantize(e, delta, levels);
        ks.indices.push_back(v.index);
        ks.symbols.push_back(v.symbol);
        for (int b = nb - 1; b >= 0; --b)
            ks.bits.push_back(static_cast<std::uint8_t>((v.symbol >> b) & 1));
    }
    return ks;
}

// Fraction of positions whose symbols disagree.
inline double kdr(const KeyStream& x, const KeyStream& y) {
    if (x.symbols.size() != y.symbols.size())
        throw std::invalid_argument("key streams must have equal length");
    if (x.symbols.empty()) throw std::invalid_argument("key streams are empty");
    std::size_t mism = 0;
    for (std::size_t i = 0; i < x.symbols.size(); ++i)
        if (x.symbols[i] != y.symbols[i]) ++mism;
    return static_cast<double>(mism) / static_cast<double>(x.symbols.size());
}

// Fraction of positions whose raw quantizer indices disagree.
inline double index_kdr(const KeyStream& x, const KeyStream& y) {
    if (x.indices.size() != y.indices.size())
        throw std::invalid_argument("key streams must have equal length");
    if (x.indices.empty()) throw std::invalid_argument("key streams are empty");
    std::size_t mism = 0;
    for (std::size_t i = 0; i < x.indices.size(); ++i)
        if (x.indices[i] != y.indices[i]) ++mism;
    return static_cast<double>(mism) / static_cast<double>(x.indices.size());
}

}  // namespace dopplerkey
