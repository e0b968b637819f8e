#include "medbounds/estimand.hpp"

#include <stdexcept>

#include "medbounds/errors.hpp"

namespace medbounds {

namespace {

struct TagInfo {
    EstimandTag tag;
    const char* label;
    int digits;
    int first_slot;
};

constexpr TagInfo kTags[] = {
    {EstimandTag::TE, "TE", 0, 0},        {EstimandTag::CDE, "CDE", 2, 1},
    {EstimandTag::NDE, "NDE", 3, 5},      {EstimandTag::JNIE, "JNIE", 1, 13},
    {EstimandTag::MS2NIE1, "MS2NIE1", 2, 15}, {EstimandTag::NIE2, "NIE2", 3, 19},
    {EstimandTag::NIE1, "NIE1", 3, 27},   {EstimandTag::NIE12, "NIE12", 3, 35},
};

const TagInfo& info_for(EstimandTag tag) {
    for (const TagInfo& ti : kTags)
        if (ti.tag == tag) return ti;
    throw std::logic_error("unmapped estimand tag");
}

}  // namespace

std::string EstimandId::name() const {
    const TagInfo& ti = info_for(tag);
    std::string out = ti.label;
    if (ti.digits > 0) {
        out += '-';
        for (int i = 0; i < ti.digits; ++i) out += static_cast<char>('0' + bits[i]);
    }
    return out;
}

int EstimandId::digit_count() const { return info_for(tag).digits; }

int EstimandId::slot() const {
    const TagInfo& ti = info_for(tag);
    int offset = 0;
    for (int i = 0; i < ti.digits; ++i) offset = (offset << 1) | bits[i];
    return ti.first_slot + offset;
}

EstimandId EstimandId::parse(const std::string& name) {
    const auto dash = name.find('-');
    const std::string label = name.substr(0, dash);
    const std::string digits = dash == std::string::npos ? "" : name.substr(dash + 1);
    for (const TagInfo& ti : kTags) {
        if (label != ti.label) continue;
        if (static_cast<int>(digits.size()) != ti.digits) break;
        EstimandId id{ti.tag, {0, 0, 0}};
        for (int i = 0; i < ti.digits; ++i) {
            if (digits[i] != '0' && digits[i] != '1') throw UnknownEstimand("bad index digit in '" + name + "'");
            id.bits[i] = digits[i] - '0';
        }
        return id;
    }
    throw UnknownEstimand("unknown estimand '" + name + "'");
}

const std::vector<EstimandId>& all_estimands() {
    static const std::vector<EstimandId> catalog = [] {
        std::vector<EstimandId> out;
        out.reserve(kEstimandCount);
        out.push_back(EstimandId::te());
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) out.push_back(EstimandId::cde(m1, m2));
        for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int x3 = 0; x3 < 2; ++x3) out.push_back(EstimandId::nde(x1, x2, x3));
        for (int x = 0; x < 2; ++x) out.push_back(EstimandId::jnie(x));
        for (int x = 0; x < 2; ++x)
            for (int x2 = 0; x2 < 2; ++x2) out.push_back(EstimandId::ms2nie1(x, x2));
        for (int x = 0; x < 2; ++x)
            for (int x1 = 0; x1 < 2; ++x1)
                for (int x3 = 0; x3 < 2; ++x3) out.push_back(EstimandId::nie2(x, x1, x3));
        for (int x = 0; x < 2; ++x)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int x3 = 0; x3 < 2; ++x3) out.push_back(EstimandId::nie1(x, x2, x3));
        for (int x = 0; x < 2; ++x)
            for (int x1 = 0; x1 < 2; ++x1)
                for (int x2 = 0; x2 < 2; ++x2) out.push_back(EstimandId::nie12(x, x1, x2));
        return out;
    }();
    return catalog;
}

int contrast_on_type(EstimandId e, ResponseType t) {
    const auto& b = e.bits;
    switch (e.tag) {
        case EstimandTag::TE:
            return natural_world(t, 1).y - natural_world(t, 0).y;
        case EstimandTag::CDE:
            return controlled_outcome(t, 1, b[0], b[1]) - controlled_outcome(t, 0, b[0], b[1]);
        case EstimandTag::NDE:
            return nested_potential_outcome(t, 1, b[0], b[1], b[2]) -
                   nested_potential_outcome(t, 0, b[0], b[1], b[2]);
        case EstimandTag::JNIE:
            return nested_potential_outcome(t, b[0], 1, 1, 1) -
                   nested_potential_outcome(t, b[0], 0, 0, 0);
        case EstimandTag::MS2NIE1:
            return nested_potential_outcome(t, b[0], 1, b[1], 1) -
                   nested_potential_outcome(t, b[0], 0, b[1], 0);
        case EstimandTag::NIE2:
            return nested_potential_outcome(t, b[0], b[1], 1, b[2]) -
                   nested_potential_outcome(t, b[0], b[1], 0, b[2]);
        case EstimandTag::NIE1:
            return nested_potential_outcome(t, b[0], 1, b[1], b[2]) -
                   nested_potential_outcome(t, b[0], 0, b[1], b[2]);
        case EstimandTag::NIE12:
            return nested_potential_outcome(t, b[0], b[1], b[2], 1) -
                   nested_potential_outcome(t, b[0], b[1], b[2], 0);
    }
    throw std::logic_error("unmapped estimand tag");
}

namespace {

std::vector<std::array<std::int8_t, kTypeCount>> build_catalog() {
    std::vector<std::array<std::int8_t, kTypeCount>> vectors(kEstimandCount);
    for (const EstimandId& e : all_estimands()) {
        auto& vec = vectors[static_cast<std::size_t>(e.slot())];
        for (int t = 0; t < kTypeCount; ++t)
            vec[static_cast<std::size_t>(t)] =
                static_cast<std::int8_t>(contrast_on_type(e, ResponseType::from_index(t)));
    }
    return vectors;
}

}  // namespace

std::span<const std::int8_t> objective_vector(EstimandId e) {
    static const auto catalog = build_catalog();
    return catalog[static_cast<std::size_t>(e.slot())];
}

double true_value(EstimandId e, const CounterfactualDistribution& q) {
    const auto c = objective_vector(e);
    double value = 0.0;
    for (int t = 0; t < kTypeCount; ++t) {
        const int ct = c[static_cast<std::size_t>(t)];
        if (ct != 0) value += ct * q[t];
    }
    return value;
}

}  // namespace medbounds
