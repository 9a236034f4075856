#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/sequence.hpp"

namespace umbral {

/// Small random rationals p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 6) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline MomentSequence random_moments(std::mt19937_64& rng, std::size_t order) {
    std::vector<Rational> v;
    v.reserve(order);
    for (std::size_t i = 0; i < order; ++i) v.push_back(random_rational(rng));
    return MomentSequence(std::move(v));
}

/// Integer multipliers drawn from [lo, hi].
inline MultiplierSequence random_multipliers(std::mt19937_64& rng, std::size_t order, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<Rational> v;
    v.reserve(order);
    for (std::size_t i = 0; i < order; ++i) v.emplace_back(dist(rng));
    return MultiplierSequence(std::move(v));
}

}  // namespace umbral
