#include "umbral/suites.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "umbral/oracles.hpp"
#include "umbral/parking.hpp"
#include "umbral/random.hpp"
#include "umbral/transforms.hpp"

namespace umbral {

namespace {

constexpr std::array<std::string_view, 5> kSuiteNames = {"lattice", "abel", "volume", "transport", "parametrization"};

// Collects comparisons for one identity; the first mismatch becomes the detail.
class Check {
public:
    Check(std::string theorem, unsigned n) { report_.theorem = std::move(theorem), report_.n = n, report_.pass = true; }

    void equal(const Rational& lhs, const Rational& rhs, const std::string& where) {
        ++report_.checked;
        if (lhs == rhs || !report_.pass) return;
        report_.pass = false;
        report_.detail = where + ": " + lhs.str() + " != " + rhs.str();
    }

    void equal(const MomentSequence& lhs, const MomentSequence& rhs, const std::string& where) {
        ++report_.checked;
        if (!report_.pass) return;
        for (std::size_t i = 1; i <= lhs.order(); ++i) {
            if (lhs[i] != rhs[i]) {
                report_.pass = false;
                report_.detail = where + " at degree " + std::to_string(i) + ": " + lhs[i].str() + " != " + rhs[i].str();
                return;
            }
        }
    }

    VerificationReport done() { return std::move(report_); }

private:
    VerificationReport report_;
};

// Σ_j C(n-1,j) x_{j+1} y_{n-1-j}: E[X(X+Y)^{n-1}] for uncorrelated X, Y.
Rational leading_factor(const MomentSequence& x, const MomentSequence& y, std::size_t n) {
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += binomial(n - 1, j) * x[j + 1] * y.moment(n - 1 - j);
    return acc;
}

std::vector<MultiplierSequence> abel_multipliers(std::size_t order) {
    std::vector<MultiplierSequence> gs;
    for (long k = 0; k <= 4; ++k) gs.push_back(constant_multiplier(k, order));
    gs.push_back(identity_multiplier(order));
    return gs;
}

std::string multiplier_label(const MultiplierSequence& g) {
    if (g.order() >= 2 && g[1] == 1 && g[2] == 2) return "g_n = n";
    return "g = " + g[1].str();
}

std::vector<VerificationReport> lattice_suite(unsigned n, std::uint64_t seed) {
    std::vector<VerificationReport> out;
    for (Theorem t : {Theorem::T1, Theorem::T2, Theorem::T3, Theorem::Commutativity, Theorem::Mobius, Theorem::Fourier}) {
        out.push_back(verify_theorem(n, t, seed));
    }
    return out;
}

std::vector<VerificationReport> abel_suite(unsigned n, std::mt19937_64& rng) {
    Check series_route("ABEL_SERIES_ORACLE", n);
    Check copy_route("ABEL_COPY_ORACLE", n);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_moments(rng, n);
        for (const auto& g : abel_multipliers(n)) {
            const auto c = generalized_cumulants(a, g);
            for (std::size_t k = 1; k <= n; ++k) {
                const std::string where = multiplier_label(g) + ", degree " + std::to_string(k);
                series_route.equal(c[k], abel_oracle(a, g, k), where);
                const auto gk = static_cast<unsigned>(g[k].numerator().get_ui());
                copy_route.equal(c[k], abel_copy_oracle(a, gk, k), where);
            }
        }
    }
    return {series_route.done(), copy_route.done()};
}

std::vector<VerificationReport> volume_suite(unsigned n, std::mt19937_64& rng) {
    Check count("PARKING_COUNT", n);
    Check ones("VOLUME_AT_ONES", n);
    Check shape("VOLUME_SHAPE", n);
    Check catalan("CATALAN_VOLUME", n);
    Check inverse("MOMENTS_VIA_VOLUME", n);
    Check types("PARKING_TYPE_COUNT", n);
    Check orbits("ORBIT_COUNT", n);
    Check orbit_moments("ORBIT_MOMENTS", n);

    const auto cat = named_sequence("catalan", n);
    const auto ubar = named_sequence("ubar", n);
    for (unsigned k = 1; k <= n; ++k) {
        const Rational expected = pow(Rational(k + 1), k - 1);
        const std::string where = "n = " + std::to_string(k);
        count.equal(Rational(enumerate_parking(k).size()), expected, where);
        ones.equal(volume_at_ones(k), expected, where);
        for (int trial = 0; trial < 3; ++trial) {
            const auto a = random_moments(rng, k);
            shape.equal(volume_symmetric_bruteforce(a, k), volume_shape_eval(a, k), where);
        }
        catalan.equal(factorial(k) * cat[k], leading_factor(ubar, sum_of_copies(ubar, k), k), where);

        std::map<std::vector<unsigned>, long> by_type;
        long nondecreasing = 0;
        for (const auto& p : enumerate_parking(k)) {
            ++by_type[parking_type(p).parts()];
            nondecreasing += std::is_sorted(p.begin(), p.end()) ? 1 : 0;
        }
        for (const auto& lambda : integer_partitions(k)) {
            const auto it = by_type.find(lambda.parts());
            const Rational found = it == by_type.end() ? Rational(0) : Rational(it->second);
            // orbit size n!/λ! times orbit count (n)_{ℓ-1}/m(λ)!
            const Rational expected_count = factorial(k) / lambda.part_factorial() *
                                            falling_factorial(Rational(k), static_cast<unsigned>(lambda.length()) - 1) /
                                            lambda.multiplicity_factorial();
            types.equal(found, expected_count, where);
        }
        orbits.equal(Rational(nondecreasing), cat[k], where);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_moments(rng, n);
        inverse.equal(moments_via_volume(a), a, "random sequence " + std::to_string(trial));
    }
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_moments(rng, n);
        const auto r = free_from_moments(a);
        for (unsigned k = 1; k <= n; ++k) orbit_moments.equal(orbit_moment_eval(r, k), a[k], "degree " + std::to_string(k));
    }
    return {count.done(),  ones.done(),   shape.done(),  catalan.done(),
            inverse.done(), types.done(), orbits.done(), orbit_moments.done()};
}

std::vector<VerificationReport> transport_suite(unsigned n, std::mt19937_64& rng) {
    Check check("TRANSPORT", n);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_moments(rng, n);
        const auto b = random_moments(rng, n);
        check.equal(boolean_free_transport(free_convolve(a, b)),
                    boolean_convolve(boolean_free_transport(a), boolean_free_transport(b)),
                    "pair " + std::to_string(trial));
    }
    return {check.done()};
}

std::vector<VerificationReport> parametrization_suite(unsigned n, std::mt19937_64& rng) {
    Check classical("CLASSICAL_RECURSION", n);
    Check boolean("BOOLEAN_RECURSION", n);
    Check free("FREE_RECURSION", n);
    Check classical_abel("CLASSICAL_AS_ABEL", n);
    Check boolean_abel("BOOLEAN_AS_ABEL", n);
    Check free_abel("FREE_AS_ABEL", n);
    Check trivial("ZERO_MULTIPLIER", n);

    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_moments(rng, n);
        const auto abar = bar(a);
        const auto c = classical_from_moments(a);
        const auto hbar = bar(boolean_from_moments(a));
        const auto rbar = bar(free_from_moments(a));
        const auto two_abar = sum_of_copies(abar, 2);
        for (unsigned k = 1; k <= n; ++k) {
            const std::string where = "trial " + std::to_string(trial) + ", degree " + std::to_string(k);
            classical.equal(leading_factor(c, a, k), a[k], where);
            boolean.equal(leading_factor(hbar, two_abar, k), abar[k], where);
            free.equal(leading_factor(rbar, sum_of_copies(rbar, k), k), abar[k], where);
        }
        classical_abel.equal(generalized_cumulants(a, constant_multiplier(1, n)), c, "trial " + std::to_string(trial));
        boolean_abel.equal(generalized_cumulants(abar, constant_multiplier(2, n)), hbar, "trial " + std::to_string(trial));
        free_abel.equal(generalized_cumulants(abar, identity_multiplier(n)), rbar, "trial " + std::to_string(trial));
        trivial.equal(generalized_cumulants(a, constant_multiplier(0, n)), a, "trial " + std::to_string(trial));
    }
    return {classical.done(), boolean.done(), free.done(), classical_abel.done(),
            boolean_abel.done(), free_abel.done(), trivial.done()};
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    for (std::size_t i = 0; i < kSuiteNames.size(); ++i) {
        if (kSuiteNames[i] == name) return static_cast<Suite>(i);
    }
    return std::nullopt;
}

std::string_view suite_name(Suite s) { return kSuiteNames.at(static_cast<std::size_t>(s)); }

unsigned suite_max_n(Suite s) {
    switch (s) {
        case Suite::Lattice: return 6;
        case Suite::Abel: return 8;
        case Suite::Volume: return kMaxParkingN;
        case Suite::Transport: return 16;
        case Suite::Parametrization: return 12;
    }
    return 0;
}

std::vector<VerificationReport> run_suite(Suite s, unsigned n, std::uint64_t seed) {
    if (n == 0 || n > suite_max_n(s)) {
        throw std::out_of_range("verify " + std::string(suite_name(s)) + ": n must lie in [1, " +
                                std::to_string(suite_max_n(s)) + "], got " + std::to_string(n));
    }
    std::mt19937_64 rng(seed);
    switch (s) {
        case Suite::Lattice: return lattice_suite(n, seed);
        case Suite::Abel: return abel_suite(n, rng);
        case Suite::Volume: return volume_suite(n, rng);
        case Suite::Transport: return transport_suite(n, rng);
        case Suite::Parametrization: return parametrization_suite(n, rng);
    }
    return {};
}

Rational volume_at_ones(unsigned n) {
    const std::vector<Rational> ones(n, Rational(1));
    return factorial(n) * volume_bruteforce(ones);
}

}  // namespace umbral
