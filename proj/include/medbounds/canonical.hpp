#pragma once

#include <cstdint>
#include <vector>

#include "medbounds/observed.hpp"

namespace medbounds {

/// 4 * 16 * 256 deterministic response-function triples.
inline constexpr int kTypeCount = 16384;

/// A deterministic response-function triple for (M1, M2, Y).
///
/// Bit conventions (fixed; objective vectors and constraint matrices depend
/// on them being stable):
///   r1 in 0..3     bit x of r1 is M1(x)
///   r2 in 0..15    bit 2x + m1 of r2 is M2(x, m1)
///   ry in 0..255   bit 4x + 2m1 + m2 of ry is Y(x, m1, m2)
///   index = 4096 r1 + 256 r2 + ry
struct ResponseType {
    std::uint8_t r1 = 0;
    std::uint8_t r2 = 0;
    std::uint8_t ry = 0;

    constexpr int index() const { return (r1 << 12) | (r2 << 8) | ry; }

    static constexpr ResponseType from_index(int index) {
        return ResponseType{static_cast<std::uint8_t>((index >> 12) & 0x3),
                            static_cast<std::uint8_t>((index >> 8) & 0xf),
                            static_cast<std::uint8_t>(index & 0xff)};
    }

    constexpr int m1(int x) const { return (r1 >> x) & 1; }
    constexpr int m2(int x, int m1v) const { return (r2 >> (2 * x + m1v)) & 1; }
    constexpr int y(int x, int m1v, int m2v) const { return (ry >> (4 * x + 2 * m1v + m2v)) & 1; }
};

struct NaturalWorld {
    int m1, m2, y;
};

/// Mediators and outcome realized by type t when only X is set to x.
constexpr NaturalWorld natural_world(ResponseType t, int x) {
    const int m1 = t.m1(x);
    const int m2 = t.m2(x, m1);
    return NaturalWorld{m1, m2, t.y(x, m1, m2)};
}

/// Y(x, M1(x1), M2(x2, M1(x3))) for type t.
constexpr int nested_potential_outcome(ResponseType t, int x, int x1, int x2, int x3) {
    const int a = t.m1(x1);
    const int b = t.m1(x3);
    const int c = t.m2(x2, b);
    return t.y(x, a, c);
}

/// Y(x, m1, m2) with both mediators held fixed.
constexpr int controlled_outcome(ResponseType t, int x, int m1, int m2) {
    return t.y(x, m1, m2);
}

/// Probability mass over the 16,384 response types.
class CounterfactualDistribution {
public:
    explicit CounterfactualDistribution(std::vector<double> q);

    /// Point mass on one type. Throws IndexOutOfRange.
    static CounterfactualDistribution vertex(int t_index);

    double operator[](int t) const { return q_[static_cast<std::size_t>(t)]; }
    const std::vector<double>& values() const { return q_; }

    /// Throws NegativeProbability / ArmNotNormalized-style errors on bad mass.
    void validate() const;

private:
    std::vector<double> q_;
};

/// p(y, m1, m2 | x) = sum of q_t over types whose natural world at x is that cell.
ObservedDistribution implied_observed(const CounterfactualDistribution& q);

}  // namespace medbounds
