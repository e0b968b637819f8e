#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "medbounds/canonical.hpp"

namespace medbounds {

enum class EstimandTag : std::uint8_t { TE, CDE, NDE, JNIE, MS2NIE1, NIE2, NIE1, NIE12 };

/// Identifier for one mediation estimand; `bits` are the subscripts in the
/// order they appear in the printed name (unused slots are zero).
struct EstimandId {
    EstimandTag tag = EstimandTag::TE;
    std::array<int, 3> bits{0, 0, 0};

    static constexpr EstimandId te() { return {EstimandTag::TE, {0, 0, 0}}; }
    static constexpr EstimandId cde(int m1, int m2) { return {EstimandTag::CDE, {m1, m2, 0}}; }
    static constexpr EstimandId nde(int x1, int x2, int x3) {
        return {EstimandTag::NDE, {x1, x2, x3}};
    }
    static constexpr EstimandId jnie(int x) { return {EstimandTag::JNIE, {x, 0, 0}}; }
    static constexpr EstimandId ms2nie1(int x, int x2) {
        return {EstimandTag::MS2NIE1, {x, x2, 0}};
    }
    static constexpr EstimandId nie2(int x, int x1, int x3) {
        return {EstimandTag::NIE2, {x, x1, x3}};
    }
    static constexpr EstimandId nie1(int x, int x2, int x3) {
        return {EstimandTag::NIE1, {x, x2, x3}};
    }
    static constexpr EstimandId nie12(int x, int x1, int x2) {
        return {EstimandTag::NIE12, {x, x1, x2}};
    }

    /// CLI/report name, e.g. "TE", "CDE-01", "MS2NIE1-11", "NIE2-100".
    std::string name() const;
    /// Inverse of name(). Throws UnknownEstimand.
    static EstimandId parse(const std::string& name);

    int digit_count() const;

    /// Position in the catalog enumeration (0..42).
    int slot() const;

    bool operator==(const EstimandId& other) const {
        return tag == other.tag && bits == other.bits;
    }
};

inline constexpr int kEstimandCount = 43;

/// All 43 estimands in catalog order: TE, CDE-xx, NDE-xxx, JNIE-x,
/// MS2NIE1-xx, NIE2-xxx, NIE1-xxx, NIE12-xxx.
const std::vector<EstimandId>& all_estimands();

/// The defining contrast of e on a single response type; always -1, 0 or 1.
int contrast_on_type(EstimandId e, ResponseType t);

/// Cached per-type contrast vector c with c[t] = contrast_on_type(e, t).
/// The full catalog is materialized once; the result stays valid for the
/// program lifetime and is safe to read from any thread.
std::span<const std::int8_t> objective_vector(EstimandId e);

/// c . q, the estimand's value under a known counterfactual distribution.
double true_value(EstimandId e, const CounterfactualDistribution& q);

}  // namespace medbounds
