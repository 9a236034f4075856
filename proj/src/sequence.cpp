#include "umbral/sequence.hpp"

#include <array>

namespace umbral {

Rational MomentSequence::product(const IntegerPartition& lambda) const {
    Rational r = 1;
    for (unsigned part : lambda.parts()) r *= (*this)[part];
    return r;
}

MultiplierSequence constant_multiplier(const Rational& k, std::size_t order) {
    return MultiplierSequence(std::vector<Rational>(order, k));
}

MultiplierSequence identity_multiplier(std::size_t order) {
    std::vector<Rational> v;
    v.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) v.emplace_back(n);
    return MultiplierSequence(std::move(v));
}

MomentSequence bar(const MomentSequence& a) {
    std::vector<Rational> v;
    v.reserve(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) v.push_back(a[n] * factorial(static_cast<unsigned>(n)));
    return MomentSequence(std::move(v));
}

MomentSequence unbar(const MomentSequence& a) {
    std::vector<Rational> v;
    v.reserve(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) v.push_back(a[n] / factorial(static_cast<unsigned>(n)));
    return MomentSequence(std::move(v));
}

MomentSequence disjoint_sum(const MomentSequence& a, const MomentSequence& b) {
    if (a.order() != b.order()) throw std::invalid_argument("disjoint_sum: order mismatch");
    std::vector<Rational> v;
    v.reserve(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) v.push_back(a[n] + b[n]);
    return MomentSequence(std::move(v));
}

MomentSequence scale_umbra(const MomentSequence& a, const Rational& j) {
    std::vector<Rational> v;
    v.reserve(a.order());
    Rational jn = 1;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        jn *= j;
        v.push_back(jn * a[n]);
    }
    return MomentSequence(std::move(v));
}

namespace {

constexpr std::array<std::string_view, 7> kNames = {"u", "chi", "epsilon", "ubar", "uD", "bell", "catalan"};

// Bell numbers through the Bell triangle.
std::vector<Rational> bell_numbers(std::size_t order) {
    std::vector<Rational> out;
    std::vector<Rational> row{Rational(1)};
    for (std::size_t n = 1; n <= order; ++n) {
        std::vector<Rational> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        out.push_back(next.front());
        row = std::move(next);
    }
    return out;
}

}  // namespace

MomentSequence named_sequence(std::string_view name, std::size_t order) {
    std::vector<Rational> v;
    v.reserve(order);
    if (name == "u") {
        v.assign(order, Rational(1));
    } else if (name == "chi") {
        v.assign(order, Rational(0));
        if (order >= 1) v[0] = 1;
    } else if (name == "epsilon") {
        v.assign(order, Rational(0));
    } else if (name == "ubar") {
        for (std::size_t n = 1; n <= order; ++n) v.push_back(factorial(static_cast<unsigned>(n)));
    } else if (name == "uD") {
        for (std::size_t n = 1; n <= order; ++n) v.emplace_back(n);
    } else if (name == "bell") {
        v = bell_numbers(order);
    } else if (name == "catalan") {
        for (std::size_t n = 1; n <= order; ++n) {
            const auto un = static_cast<unsigned>(n);
            v.push_back(binomial(2 * un, un) / Rational(n + 1));
        }
    } else {
        throw std::invalid_argument("unknown named sequence '" + std::string(name) + "'");
    }
    return MomentSequence(std::move(v));
}

std::span<const std::string_view> sequence_names() { return kNames; }

}  // namespace umbral
