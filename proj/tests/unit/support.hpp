#pragma once

#include "mixjoin/gaussian.hpp"
#include "mixjoin/mixed_poly.hpp"

#include <random>

namespace testsupport {

inline mixjoin::GaussianRational random_gr(std::mt19937_64& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

inline mixjoin::GaussianRational random_nonzero_gr(std::mt19937_64& rng, int range = 5) {
    for (;;) {
        auto g = random_gr(rng, range);
        if (!g.is_zero()) return g;
    }
}

inline mixjoin::MixedPolynomial random_mixed(std::mt19937_64& rng, int n, int terms, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    mixjoin::MixedPolynomial p(n);
    for (int t = 0; t < terms; ++t) {
        mixjoin::MonomialKey k{std::vector<mixjoin::Exponent>(n), std::vector<mixjoin::Exponent>(n)};
        for (int j = 0; j < n; ++j) {
            k.nu[j] = static_cast<mixjoin::Exponent>(e(rng));
            k.mu[j] = static_cast<mixjoin::Exponent>(e(rng));
        }
        p.add_term(k, random_nonzero_gr(rng, 3));
    }
    return p;
}

} // namespace testsupport
