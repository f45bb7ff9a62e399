#pragma once

#include <random>
#include <vector>

#include "cdlab/element.hpp"

namespace cdlab::testing {

/// Every signature (q, p) with q + p == n.
inline std::vector<Signature> all_signatures(int n) {
    std::vector<Signature> out;
    for (int q = n; q >= 0; --q) out.emplace_back(q, n - q);
    return out;
}

inline Element random_element(std::mt19937_64& rng, const Algebra& alg, int terms) {
    std::uniform_int_distribution<Mask> dm(0, alg.signature().mask_limit() - 1);
    std::uniform_int_distribution<int> dc(-3, 3);
    Element e;
    for (int i = 0; i < terms; ++i) e.add(dm(rng), Rational(dc(rng)));
    return e;
}

}  // namespace cdlab::testing
