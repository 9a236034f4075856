#include <doctest.h>

#include <functional>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "umbral/oracles.hpp"
#include "umbral/random.hpp"
#include "umbral/transforms.hpp"

using namespace umbral;
using testing::mult;
using testing::seq;

namespace {

using Transform = std::function<MomentSequence(const MomentSequence&)>;

struct Family {
    const char* name;
    Transform forward;
    Transform inverse;
    std::function<MomentSequence(const MomentSequence&, const MomentSequence&)> convolve;
};

std::vector<Family> families() {
    const auto g = constant_multiplier(3, 12);
    auto cut = [g](std::size_t n) { return MultiplierSequence(std::vector<Rational>(g.values().begin(), g.values().begin() + n)); };
    return {
        {"classical", classical_from_moments, moments_from_classical, classical_convolve},
        {"boolean", boolean_from_moments, moments_from_boolean, boolean_convolve},
        {"free", free_from_moments, moments_from_free, free_convolve},
        {"gamma g=3", [cut](const MomentSequence& a) { return generalized_cumulants(a, cut(a.order())); },
         [cut](const MomentSequence& c) { return moments_from_generalized(c, cut(c.order())); },
         [cut](const MomentSequence& a, const MomentSequence& b) { return gamma_convolve(a, b, cut(a.order())); }},
    };
}

MomentSequence constant_seq(const Rational& x, std::size_t order) {
    return MomentSequence(std::vector<Rational>(order, x));
}

}  // namespace

TEST_CASE("named sequences") {
    CHECK(named_sequence("u", 3) == seq({1, 1, 1}));
    CHECK(named_sequence("chi", 3) == seq({1, 0, 0}));
    CHECK(named_sequence("epsilon", 3) == seq({0, 0, 0}));
    CHECK(named_sequence("ubar", 4) == seq({1, 2, 6, 24}));
    CHECK(named_sequence("uD", 4) == seq({1, 2, 3, 4}));
    CHECK(named_sequence("bell", 8) == seq({1, 2, 5, 15, 52, 203, 877, 4140}));
    CHECK(named_sequence("catalan", 8) == seq({1, 2, 5, 14, 42, 132, 429, 1430}));
    CHECK_THROWS_AS(named_sequence("nope", 3), std::invalid_argument);
    CHECK(sequence_names().size() == 7);
}

TEST_CASE("sequence helpers") {
    const auto a = seq({1, Rational(1, 2), 3});
    CHECK(bar(a) == seq({1, 1, 18}));
    CHECK(unbar(bar(a)) == a);
    CHECK(disjoint_sum(a, a) == seq({2, 1, 6}));
    CHECK(scale_umbra(a, 2) == seq({2, 2, 24}));
    CHECK(a.moment(0) == 1);
    CHECK(a.product(IntegerPartition({3, 1, 1})) == 3);
    CHECK_THROWS_AS(a[0], std::out_of_range);
    CHECK_THROWS_AS(a[4], std::out_of_range);
    CHECK_THROWS_AS(disjoint_sum(a, seq({1})), std::invalid_argument);
}

TEST_CASE("classical transform") {
    CHECK(classical_from_moments(seq({1, 2, 5, 15})) == seq({1, 1, 1, 1}));
    CHECK(classical_from_moments(seq({1, 1})) == seq({1, 0}));
    CHECK(classical_from_moments(seq({0, 0, 0})) == seq({0, 0, 0}));
    CHECK(moments_from_classical(seq({1, 1, 1, 1, 1})) == seq({1, 2, 5, 15, 52}));
    CHECK(moments_from_classical(seq({2, 0, 0})) == seq({2, 4, 8}));
}

TEST_CASE("boolean transform") {
    CHECK(boolean_from_moments(seq({1, 2, 4, 8})) == seq({1, 1, 1, 1}));
    CHECK(boolean_from_moments(seq({1, 1, 1})) == seq({1, 0, 0}));
    CHECK(boolean_from_moments(seq({0, 1, 0})) == seq({0, 1, 0}));
    CHECK(moments_from_boolean(seq({1, 1, 1, 1})) == seq({1, 2, 4, 8}));
}

TEST_CASE("free transform") {
    CHECK(free_from_moments(seq({1, 2, 5, 14, 42})) == seq({1, 1, 1, 1, 1}));
    CHECK(free_from_moments(seq({0, 1, 0, 2})) == seq({0, 1, 0, 0}));
    CHECK(moments_from_free(seq({0, 2, 0, 0})) == seq({0, 2, 0, 8}));
    CHECK(moments_from_free(seq({1, 1, 1, 1, 1})) == seq({1, 2, 5, 14, 42}));
}

TEST_CASE("generalized cumulants") {
    std::mt19937_64 rng(3);
    const auto a = random_moments(rng, 8);
    CHECK(generalized_cumulants(a, constant_multiplier(1, 8)) == classical_from_moments(a));
    CHECK(generalized_cumulants(bar(seq({1, 2, 4})), constant_multiplier(2, 3)) == seq({1, 2, 6}));
    CHECK(generalized_cumulants(bar(a), constant_multiplier(2, 8)) == bar(boolean_from_moments(a)));
    CHECK(generalized_cumulants(bar(a), identity_multiplier(8)) == bar(free_from_moments(a)));
    CHECK(generalized_cumulants(a, constant_multiplier(0, 8)) == a);
    CHECK(generalized_cumulants(seq({1, 3}), constant_multiplier(2, 2)) == seq({1, 1}));

    CHECK(moments_from_generalized(seq({1, 1, 1, 1}), constant_multiplier(1, 4)) == seq({1, 2, 5, 15}));
    CHECK(moments_from_generalized(seq({1, 2, 6, 24}), identity_multiplier(4)) == seq({1, 4, 30, 336}));
    CHECK(unbar(seq({1, 4, 30, 336})) == seq({1, 2, 5, 14}));
}

TEST_CASE("generalized cumulants need a long enough multiplier") {
    CHECK_THROWS_AS(generalized_cumulants(seq({1, 2, 3}), constant_multiplier(1, 2)), std::invalid_argument);
}

TEST_CASE("abel_oracle") {
    const auto ones = seq({1, 1, 1});
    CHECK(abel_oracle(ones, constant_multiplier(2, 3), 3) == 1);
    CHECK(abel_oracle(seq({1, 3}), constant_multiplier(2, 2), 2) == 1);

    std::mt19937_64 rng(5);
    const auto a = random_moments(rng, 6);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(abel_oracle(a, constant_multiplier(0, 6), n) == a[n]);
}

TEST_CASE("abel oracle and copy oracle agree with the partition sum") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_moments(rng, 8);
        std::vector<MultiplierSequence> gs{identity_multiplier(8), random_multipliers(rng, 8, 0, 4)};
        for (long k = 0; k <= 4; ++k) gs.push_back(constant_multiplier(k, 8));
        for (const auto& g : gs) {
            const auto c = generalized_cumulants(a, g);
            for (std::size_t n = 1; n <= 8; ++n) {
                CHECK(abel_oracle(a, g, n) == c[n]);
                if (n <= 6) CHECK(abel_copy_oracle(a, static_cast<unsigned>(g[n].numerator().get_ui()), n) == c[n]);
            }
        }
    }
}

TEST_CASE("inverse umbra and copies") {
    std::mt19937_64 rng(23);
    const auto a = random_moments(rng, 7);
    // α + (-1.α) ≡ ε
    const auto w = inverse_umbra(a);
    for (std::size_t j = 1; j <= 7; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i <= j; ++i) acc += binomial(j, i) * a.moment(i) * w.moment(j - i);
        CHECK(acc == 0);
    }
    CHECK(inverse_umbra(a) == dot_power(a, -1));
    for (unsigned k = 0; k <= 4; ++k) CHECK(sum_of_copies(a, k) == dot_power(a, k));
    CHECK(sum_of_copies(a, 1) == a);
}

TEST_CASE("cumulant matrix") {
    const auto m = cumulant_matrix(seq({1, 2, 5, 15}), 4, 3);
    CHECK(m.column(1) == seq({1, 1, 1, 1}));
    CHECK(m.at(2, 2) == 0);
    for (std::size_t k = 1; k <= 3; ++k) CHECK(m.at(1, k) == 1);
    CHECK_THROWS_AS(cumulant_matrix(seq({1, 2}), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(m.at(5, 1), std::out_of_range);

    // every column determines the moments
    std::mt19937_64 rng(29);
    const auto a = random_moments(rng, 6);
    const auto big = cumulant_matrix(a, 6, 5);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(moments_from_generalized(big.column(k), constant_multiplier(k, 6)) == a);
}

TEST_CASE("convolution examples") {
    CHECK(classical_convolve(seq({1, 1}), seq({1, 1})) == seq({2, 4}));
    CHECK(free_convolve(seq({0, 1, 0, 2}), seq({0, 1, 0, 2})) == seq({0, 2, 0, 8}));
    CHECK(boolean_convolve(seq({1, 2, 4, 8}), seq({1, 2, 4, 8})) == seq({2, 6, 18, 54}));
    CHECK(classical_convolve(seq({3, 1, 4}), seq({0, 0, 0})) == seq({3, 1, 4}));
    CHECK_THROWS_AS(classical_convolve(seq({1}), seq({1, 1})), std::invalid_argument);

    // classical convolution multiplies EGFs
    std::mt19937_64 rng(31);
    const auto a = random_moments(rng, 6);
    const auto b = random_moments(rng, 6);
    CHECK(egf_of(classical_convolve(a, b)) == series_mul(egf_of(a), egf_of(b)));
}

TEST_CASE("gamma convolution specializes to the three families") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_moments(rng, 7);
        const auto b = random_moments(rng, 7);
        CHECK(gamma_convolve(a, b, constant_multiplier(1, 7)) == classical_convolve(a, b));
        CHECK(gamma_convolve(bar(a), bar(b), constant_multiplier(2, 7)) == bar(boolean_convolve(a, b)));
        CHECK(gamma_convolve(bar(a), bar(b), identity_multiplier(7)) == bar(free_convolve(a, b)));
    }
}

TEST_CASE("boolean free transport") {
    CHECK(boolean_free_transport(seq({1, 2, 5, 14})) == seq({-1, 0, 0, 0}));
    CHECK(boolean_free_transport(seq({0, 0, 0})) == seq({0, 0, 0}));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_moments(rng, 8);
        const auto b = random_moments(rng, 8);
        CHECK(boolean_free_transport(free_convolve(a, b)) ==
              boolean_convolve(boolean_free_transport(a), boolean_free_transport(b)));
    }
}

TEST_CASE("umbral composition") {
    const auto ones = named_sequence("u", 4);
    CHECK(umbral_composition(ones, ones, GeneratingFlavor::Exponential) == seq({1, 2, 5, 15}));
    CHECK(umbral_composition(ones, ones, GeneratingFlavor::Ordinary) == seq({1, 2, 4, 8}));

    std::mt19937_64 rng(43);
    const auto a = random_moments(rng, 7);
    const auto chi = named_sequence("chi", 7);
    // χ.χ has moments (-1)^{n-1}(n-1)!, and composing with it yields cumulants
    const auto chi_chi = dot_operation(chi, chi);
    CHECK(chi_chi == seq({1, -1, 2, -6, 24, -120, 720}));
    CHECK(umbral_composition(chi_chi, a, GeneratingFlavor::Exponential) == classical_from_moments(a));
    CHECK(dot_operation(chi, a) == classical_from_moments(a));

    // EGF composition is f[g(t) - 1] with f the EGF of g-moments
    const auto g = random_moments(rng, 7);
    const auto one = TruncatedSeries::constant(1, 7);
    CHECK(egf_of(umbral_composition(g, a, GeneratingFlavor::Exponential)) ==
          delta_compose(egf_of(g), series_sub(egf_of(a), one)));
    CHECK(ogf_of(umbral_composition(g, a, GeneratingFlavor::Ordinary)) ==
          delta_compose(ogf_of(g), series_sub(ogf_of(a), one)));
}

TEST_CASE("factorial moments and dot operation") {
    CHECK(factorial_moments(seq({1, 1, 1})) == seq({1, 0, 0}));
    CHECK(factorial_moments(seq({1, 2, 5, 15})) == seq({1, 1, 1, 1}));
    CHECK(factorial_moments(seq({2, 4, 8})) == seq({2, 2, 0}));

    std::mt19937_64 rng(47);
    const auto a = random_moments(rng, 6);
    CHECK(dot_operation(named_sequence("u", 6), a) == a);
    CHECK(dot_operation(named_sequence("bell", 6), a) == umbral_composition(named_sequence("u", 6), a, GeneratingFlavor::Exponential));
    CHECK(dot_operation(seq({2, 4}), seq({1, 1}))[2] == 4);
    CHECK(dot_power(seq({1, 1}), 2)[2] == 4);
    CHECK(dot_power(a, 2)[2] == 2 * a[2] + 2 * a[1] * a[1]);

    const auto s = stirling_first_kind(4);
    CHECK(s[4][1] == -6);
    CHECK(s[4][2] == 11);
    CHECK(s[4][3] == -6);
    CHECK(s[4][4] == 1);
}

TEST_CASE("dot operation matches the generating function f(γ, log f(α,t))") {
    std::mt19937_64 rng(53);
    const auto a = random_moments(rng, 6);
    const auto g = random_moments(rng, 6);
    CHECK(egf_of(dot_operation(g, a)) == delta_compose(egf_of(g), series_log(egf_of(a))));
}

TEST_CASE("oracle agreement up to order 12") {
    std::mt19937_64 rng(59);
    for (std::size_t order = 1; order <= 12; ++order) {
        const auto m = random_moments(rng, order);
        CHECK(classical_from_moments(m) == classical_via_log(m));
        CHECK(boolean_from_moments(m) == boolean_via_reciprocal(m));
        const auto r = free_from_moments(m);
        CHECK(moments_from_free(r) == moments_from_free_fixed_point(r));
    }
}

TEST_CASE("round trips up to order 12") {
    std::mt19937_64 rng(61);
    for (std::size_t order = 1; order <= 12; ++order) {
        const auto a = random_moments(rng, order);
        for (const auto& f : families()) {
            CAPTURE(f.name);
            CHECK(f.inverse(f.forward(a)) == a);
            CHECK(f.forward(f.inverse(a)) == a);
        }
        const auto g = random_multipliers(rng, order, 0, 5);
        CHECK(moments_from_generalized(generalized_cumulants(a, g), g) == a);
    }
}

TEST_CASE("homogeneity") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_moments(rng, 8);
        const auto j = random_rational(rng);
        for (const auto& f : families()) {
            CAPTURE(f.name);
            CHECK(f.forward(scale_umbra(a, j)) == scale_umbra(f.forward(a), j));
        }
    }
}

TEST_CASE("additivity, commutativity and associativity of the convolutions") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_moments(rng, 8);
        const auto b = random_moments(rng, 8);
        const auto c = random_moments(rng, 8);
        for (const auto& f : families()) {
            CAPTURE(f.name);
            CHECK(f.forward(f.convolve(a, b)) == disjoint_sum(f.forward(a), f.forward(b)));
            CHECK(f.convolve(a, b) == f.convolve(b, a));
            CHECK(f.convolve(f.convolve(a, b), c) == f.convolve(a, f.convolve(b, c)));
        }
    }
}

TEST_CASE("semi-invariance") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_moments(rng, 8);
        const auto shift = random_rational(rng);

        // translation α -> α + c
        std::vector<Rational> shifted;
        for (std::size_t n = 1; n <= 8; ++n) {
            Rational acc = 0;
            for (std::size_t k = 0; k <= n; ++k) acc += binomial(n, k) * pow(shift, static_cast<unsigned>(n - k)) * a.moment(k);
            shifted.push_back(acc);
        }
        const auto c = classical_from_moments(a);
        std::vector<Rational> expected(c.values().begin(), c.values().end());
        expected[0] += shift;
        CHECK(classical_from_moments(MomentSequence(shifted)) == MomentSequence(expected));

        // convolution with c u, moments c^n
        const auto cu = scale_umbra(constant_seq(1, 8), shift);
        for (const auto& f : families()) {
            if (std::string(f.name).starts_with("gamma")) continue;
            CAPTURE(f.name);
            const auto k = f.forward(a);
            std::vector<Rational> want(k.values().begin(), k.values().end());
            want[0] += shift;
            CHECK(f.forward(f.convolve(a, cu)) == MomentSequence(want));
        }
    }
}

TEST_CASE("parametrization recursions") {
    std::mt19937_64 rng(79);
    const auto a = random_moments(rng, 12);
    const auto c = classical_from_moments(a);
    for (std::size_t n = 1; n <= 12; ++n) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += binomial(n - 1, j) * c[j + 1] * a.moment(n - 1 - j);
        CHECK(acc == a[n]);
    }
    const auto h = boolean_from_moments(a);
    for (std::size_t n = 1; n <= 12; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += h[k] * a.moment(n - k);
        CHECK(acc == a[n]);
    }
}
