#include "umbral/parking.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "umbral/transforms.hpp"

namespace umbral {

bool is_parking(std::span<const unsigned> seq) {
    std::vector<unsigned> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        if (sorted[j] < 1 || sorted[j] > j + 1) return false;
    }
    return true;
}

namespace {

// below[j] = number of chosen entries <= j. A prefix extends to a parking
// function iff below[j] + remaining >= j for every j.
void parking_rec(unsigned n, ParkingFunction& prefix, std::vector<unsigned>& below, std::vector<ParkingFunction>& out) {
    if (prefix.size() == n) {
        out.push_back(prefix);
        return;
    }
    const auto remaining_after = static_cast<unsigned>(n - prefix.size() - 1);
    for (unsigned v = 1; v <= n; ++v) {
        for (unsigned j = v; j <= n; ++j) ++below[j];
        bool feasible = true;
        for (unsigned j = 1; j <= n && feasible; ++j) feasible = below[j] + remaining_after >= j;
        if (feasible) {
            prefix.push_back(v);
            parking_rec(n, prefix, below, out);
            prefix.pop_back();
        }
        for (unsigned j = v; j <= n; ++j) --below[j];
    }
}

}  // namespace

std::vector<ParkingFunction> enumerate_parking(unsigned n) {
    if (n > kMaxParkingN) throw std::out_of_range("enumerate_parking: n = " + std::to_string(n) + " exceeds 7");
    std::vector<ParkingFunction> out;
    ParkingFunction prefix;
    std::vector<unsigned> below(n + 1, 0);
    parking_rec(n, prefix, below, out);
    return out;
}

IntegerPartition parking_type(std::span<const unsigned> p) {
    if (!is_parking(p)) throw std::invalid_argument("parking_type: not a parking function");
    std::vector<unsigned> mult(p.size() + 1, 0);
    for (unsigned v : p) ++mult[v];
    std::vector<unsigned> parts;
    for (unsigned m : mult) {
        if (m > 0) parts.push_back(m);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return IntegerPartition(std::move(parts));
}

Rational volume_bruteforce(std::span<const Rational> x) {
    const auto n = static_cast<unsigned>(x.size());
    Rational acc = 0;
    for (const auto& p : enumerate_parking(n)) {
        Rational term = 1;
        for (unsigned v : p) term *= x[v - 1];
        acc += term;
    }
    return acc / factorial(n);
}

Rational volume_symmetric_bruteforce(const MomentSequence& a, unsigned n) {
    Rational acc = 0;
    for (const auto& p : enumerate_parking(n)) acc += a.product(parking_type(p));
    return acc / factorial(n);
}

Rational volume_shape_eval(const MomentSequence& a, unsigned n) {
    Rational acc = 0;
    for (const auto& lambda : integer_partitions(n)) {
        const auto ell = static_cast<unsigned>(lambda.length());
        acc += falling_factorial(Rational(n), ell - 1) / (lambda.part_factorial() * lambda.multiplicity_factorial()) *
               a.product(lambda);
    }
    return acc;
}

MomentSequence moments_via_volume(const MomentSequence& a) {
    const MomentSequence rbar = bar(free_from_moments(a));
    std::vector<Rational> abar;
    abar.reserve(a.order());
    for (unsigned n = 1; n <= a.order(); ++n) abar.push_back(factorial(n) * volume_shape_eval(rbar, n));
    return unbar(MomentSequence(std::move(abar)));
}

Rational orbit_moment_eval(const MomentSequence& r, unsigned n) {
    Rational acc = 0;
    for (const auto& lambda : integer_partitions(n)) {
        const auto ell = static_cast<unsigned>(lambda.length());
        acc += falling_factorial(Rational(n), ell - 1) / lambda.multiplicity_factorial() * r.product(lambda);
    }
    return acc;
}

}  // namespace umbral
