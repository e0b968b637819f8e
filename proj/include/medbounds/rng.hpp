#pragma once

// Deterministic sampling utilities. Every distribution is built from
// mt19937_64 output with explicitly coded transforms (no std::*_distribution),
// so seeded results are identical across platforms and standard libraries.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "medbounds/errors.hpp"

namespace medbounds {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent stream seed for work item (a, b) under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s ^= 0xd6e8feb86659fd93ULL * (a + 1);
    h ^= splitmix64(s);
    s ^= 0xa5a5a5a5a5a5a5a5ULL * (b + 1);
    h ^= splitmix64(s);
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe under log().
    double uniform_pos() { return 1.0 - uniform01(); }

    /// Standard normal via the polar method (second value discarded).
    double normal() {
        for (;;) {
            const double u = 2.0 * uniform01() - 1.0;
            const double v = 2.0 * uniform01() - 1.0;
            const double s = u * u + v * v;
            if (s >= 1.0 || s == 0.0) continue;
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    /// Gamma(shape, 1) for shape >= 1 (Marsaglia-Tsang squeeze).
    double gamma_ge1(double shape) {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// log of a Gamma(shape, 1) draw; stays finite in log space even for
    /// shapes as small as 1e-6, where the draw itself underflows double range.
    double log_gamma_variate(double shape) {
        if (shape >= 1.0) return std::log(gamma_ge1(shape));
        const double boost_draw = gamma_ge1(shape + 1.0);
        return std::log(boost_draw) + std::log(uniform_pos()) / shape;
    }

    /// Uniform integer in [0, n) without modulo bias.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = gen_();
            if (r >= threshold) return r % n;
        }
    }

private:
    std::mt19937_64 gen_;
};

/// One symmetric Dirichlet(alpha, ..., alpha) draw over `dim` coordinates,
/// normalized in log space. Coordinates whose log-mass falls below double
/// range come out as exact zeros, which is the honest limit of the draw at
/// this precision. Retries (counted into *redraws if given) only the
/// never-expected case of every coordinate degenerating at once.
inline std::vector<double> dirichlet_symmetric(Rng& rng, double alpha, int dim,
                                               long* redraws = nullptr) {
    if (!(alpha > 0.0)) throw MalformedInput("Dirichlet parameter must be positive");
    std::vector<double> logs(static_cast<std::size_t>(dim));
    for (int attempt = 0; attempt < 100; ++attempt) {
        double max_log = -std::numeric_limits<double>::infinity();
        for (auto& value : logs) {
            value = rng.log_gamma_variate(alpha);
            if (value > max_log) max_log = value;
        }
        if (!std::isfinite(max_log)) {
            if (redraws) ++(*redraws);
            continue;
        }
        double sum = 0.0;
        for (auto& value : logs) {
            value = std::exp(value - max_log);
            sum += value;
        }
        for (auto& value : logs) value /= sum;
        return logs;
    }
    throw DegenerateDraw("all Dirichlet coordinates degenerated repeatedly");
}

}  // namespace medbounds
