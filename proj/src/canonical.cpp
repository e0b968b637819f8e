#include "medbounds/canonical.hpp"

#include <cmath>
#include <string>

#include "medbounds/errors.hpp"

namespace medbounds {

CounterfactualDistribution::CounterfactualDistribution(std::vector<double> q) : q_(std::move(q)) {
    if (q_.size() != static_cast<std::size_t>(kTypeCount))
        throw MalformedInput("counterfactual distribution needs " + std::to_string(kTypeCount) +
                             " entries, got " + std::to_string(q_.size()));
}

CounterfactualDistribution CounterfactualDistribution::vertex(int t_index) {
    if (t_index < 0 || t_index >= kTypeCount)
        throw IndexOutOfRange("type index " + std::to_string(t_index) + " outside 0.." +
                              std::to_string(kTypeCount - 1));
    std::vector<double> q(kTypeCount, 0.0);
    q[static_cast<std::size_t>(t_index)] = 1.0;
    return CounterfactualDistribution(std::move(q));
}

void CounterfactualDistribution::validate() const {
    double sum = 0.0;
    for (std::size_t t = 0; t < q_.size(); ++t) {
        if (q_[t] < 0.0)
            throw NegativeProbability("q[" + std::to_string(t) + "] = " + std::to_string(q_[t]));
        sum += q_[t];
    }
    if (std::abs(sum - 1.0) > kNormalizationTol)
        throw ArmNotNormalized("counterfactual mass sums to " + std::to_string(sum));
}

ObservedDistribution implied_observed(const CounterfactualDistribution& q) {
    std::array<double, kCells> cells{};
    for (int t = 0; t < kTypeCount; ++t) {
        const double mass = q[t];
        if (mass == 0.0) continue;
        const ResponseType type = ResponseType::from_index(t);
        for (int x = 0; x < 2; ++x) {
            const NaturalWorld w = natural_world(type, x);
            cells[cell_index(w.y, w.m1, w.m2, x)] += mass;
        }
    }
    return ObservedDistribution(cells);
}

}  // namespace medbounds
