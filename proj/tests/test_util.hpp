#pragma once

#include <string>
#include <vector>

#include "medbounds/canonical.hpp"
#include "medbounds/observed.hpp"
#include "medbounds/rng.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(MEDBOUNDS_DATA_DIR) + "/" + name;
}

/// Random observed distribution: an independent Dirichlet(1) over each arm's
/// 8 cells. Not necessarily the image of any counterfactual law restriction
/// beyond normalization, which is exactly what the validators accept.
inline medbounds::ObservedDistribution random_observed(medbounds::Rng& rng) {
    medbounds::ObservedDistribution dist;
    for (int x = 0; x < 2; ++x) {
        const auto cell = medbounds::dirichlet_symmetric(rng, 1.0, 8);
        for (int y = 0; y < 2; ++y)
            for (int m1 = 0; m1 < 2; ++m1)
                for (int m2 = 0; m2 < 2; ++m2)
                    dist.set(y, m1, m2, x, cell[static_cast<std::size_t>(4 * y + 2 * m1 + m2)]);
    }
    return dist;
}

inline medbounds::CounterfactualDistribution random_counterfactual(medbounds::Rng& rng,
                                                                   double alpha = 1.0) {
    return medbounds::CounterfactualDistribution(
        medbounds::dirichlet_symmetric(rng, alpha, medbounds::kTypeCount));
}

/// The "M1 = x, M2 = m1, Y = m2" chain: r1 = 0b10, r2 = 0b1010, ry = 0b10101010.
inline medbounds::ResponseType identity_chain_type() {
    return medbounds::ResponseType{2, 10, 170};
}

}  // namespace testutil
