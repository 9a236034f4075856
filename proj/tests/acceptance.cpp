// Acceptance suite: criteria 1-9, exact comparisons, one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "umbral/lattice.hpp"
#include "umbral/oracles.hpp"
#include "umbral/parking.hpp"
#include "umbral/random.hpp"
#include "umbral/series.hpp"
#include "umbral/transforms.hpp"

using namespace umbral;

namespace {

// Counts comparisons and remembers the first failure.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    void equal(const Rational& got, const Rational& want, const std::string& what) {
        expect(got == want, what + ": got " + got.str() + ", want " + want.str());
    }
    void equal(const MomentSequence& got, const MomentSequence& want, const std::string& what) {
        bool ok = got.order() == want.order();
        for (std::size_t i = 1; ok && i <= got.order(); ++i) {
            if (got[i] != want[i]) {
                expect(false, what + " at degree " + std::to_string(i) + ": got " + got[i].str() + ", want " + want[i].str());
                return;
            }
        }
        expect(ok, what + ": order mismatch");
    }
    std::size_t checks() const { return checks_; }
    const std::string& failure() const { return failure_; }

private:
    std::size_t checks_ = 0;
    std::string failure_;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Tally&)> body;
};

MomentSequence ones(std::size_t n) { return named_sequence("u", n); }

MultiplierSequence prefix(const MultiplierSequence& g, std::size_t n) {
    return MultiplierSequence(std::vector<Rational>(g.values().begin(), g.values().begin() + n));
}

void catalan_routes(Tally& t) {
    const auto want = named_sequence("catalan", 8);
    t.equal(want, MomentSequence(std::vector<Rational>{1, 2, 5, 14, 42, 132, 429, 1430}), "catalan table");
    t.equal(moments_from_free(ones(8)), want, "partition-sum route");
    t.equal(moments_from_free_fixed_point(ones(8)), want, "fixed-point route");
    const auto r = MultiplicativeFunction::from_moments(ones(6));
    const auto zeta = MultiplicativeFunction::zeta(6);
    for (unsigned n = 1; n <= 6; ++n) {
        t.equal(convolve_lattice(r, zeta, n, Lattice::Noncrossing), want[n], "r * zeta on NC_" + std::to_string(n));
    }
}

void bell_reproduction(Tally& t) {
    const auto m = moments_from_classical(ones(8));
    const std::vector<long> table{1, 2, 5, 15, 52, 203, 877, 4140};
    for (unsigned n = 1; n <= 8; ++n) {
        t.equal(m[n], Rational(set_partitions(n).size()), "|Pi_" + std::to_string(n) + "|");
        t.equal(m[n], table[n - 1], "Bell table");
    }
}

void boolean_reproduction(Tally& t) {
    const auto m = moments_from_boolean(ones(12));
    for (unsigned n = 1; n <= 12; ++n) {
        t.equal(m[n], pow(Rational(2), n - 1), "2^{n-1}");
        t.equal(m[n], Rational(interval_partitions(n).size()), "|I_" + std::to_string(n) + "|");
    }
}

void round_trips(Tally& t) {
    std::mt19937_64 rng(2024);
    constexpr std::size_t N = 10;
    std::vector<MultiplierSequence> fixed;
    for (long k = 1; k <= 5; ++k) fixed.push_back(constant_multiplier(k, N));
    fixed.push_back(identity_multiplier(N));
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_moments(rng, N);
        const std::string tag = "sequence " + std::to_string(trial);
        t.equal(moments_from_classical(classical_from_moments(a)), a, "classical " + tag);
        t.equal(moments_from_boolean(boolean_from_moments(a)), a, "boolean " + tag);
        t.equal(moments_from_free(free_from_moments(a)), a, "free " + tag);
        t.equal(classical_from_moments(moments_from_classical(a)), a, "classical inverse " + tag);
        t.equal(boolean_from_moments(moments_from_boolean(a)), a, "boolean inverse " + tag);
        t.equal(free_from_moments(moments_from_free(a)), a, "free inverse " + tag);
        auto gs = fixed;
        gs.push_back(random_multipliers(rng, N, 0, 5));
        for (const auto& g : gs) {
            t.equal(moments_from_generalized(generalized_cumulants(a, g), g), a, "generalized " + tag);
            t.equal(generalized_cumulants(moments_from_generalized(a, g), g), a, "generalized inverse " + tag);
        }
    }
}

void lattice_theorems(Tally& t) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        for (unsigned n = 1; n <= 6; ++n) {
            for (Theorem th : {Theorem::T1, Theorem::T2, Theorem::T3, Theorem::Commutativity}) {
                const auto r = verify_theorem(n, th, seed);
                t.expect(r.pass, r.theorem + " at n = " + std::to_string(n) + ": " + r.detail);
            }
        }
    }
    const auto mu = MultiplicativeFunction::mobius(7);
    const auto zeta = MultiplicativeFunction::zeta(7);
    const auto delta = MultiplicativeFunction::delta(7);
    for (unsigned n = 1; n <= 7; ++n) {
        t.equal(convolve_lattice(mu, zeta, n, Lattice::All), delta[n], "mu * zeta at n = " + std::to_string(n));
        t.equal(convolve_lattice(zeta, mu, n, Lattice::All), delta[n], "zeta * mu at n = " + std::to_string(n));
        const auto r = verify_theorem(n, Theorem::Mobius);
        t.expect(r.pass, "MOBIUS at n = " + std::to_string(n) + ": " + r.detail);
    }
}

void abel_oracles(Tally& t) {
    std::mt19937_64 rng(6);
    constexpr std::size_t N = 6;
    std::vector<MultiplierSequence> gs;
    for (long k = 0; k <= 4; ++k) gs.push_back(constant_multiplier(k, N));
    gs.push_back(identity_multiplier(N));
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_moments(rng, N);
        for (const auto& g : gs) {
            const auto c = generalized_cumulants(a, g);
            for (std::size_t n = 1; n <= N; ++n) {
                const std::string tag = "g_n = " + g[n].str() + ", n = " + std::to_string(n);
                t.equal(abel_oracle(a, g, n), c[n], "series oracle " + tag);
                t.equal(abel_copy_oracle(a, static_cast<unsigned>(g[n].numerator().get_ui()), n), c[n], "copy oracle " + tag);
            }
        }
    }
}

void volume_suite(Tally& t) {
    std::mt19937_64 rng(7);
    for (unsigned n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = random_moments(rng, n);
            t.equal(volume_symmetric_bruteforce(a, n), volume_shape_eval(a, n), "shape vs brute force, n = " + std::to_string(n));
        }
    }
    for (unsigned n = 1; n <= 7; ++n) {
        const std::vector<Rational> unit(n, Rational(1));
        t.equal(factorial(n) * volume_bruteforce(unit), pow(Rational(n + 1), n - 1), "n! V_n(1..1), n = " + std::to_string(n));
    }
    const auto ubar = named_sequence("ubar", 6);
    const auto catalan = named_sequence("catalan", 6);
    for (unsigned n = 1; n <= 6; ++n) {
        const auto copies = sum_of_copies(ubar, n);
        Rational rhs = 0;
        for (unsigned j = 0; j < n; ++j) rhs += binomial(n - 1, j) * ubar[j + 1] * copies.moment(n - 1 - j);
        t.equal(factorial(n) * catalan[n], rhs, "n! C_n, n = " + std::to_string(n));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_moments(rng, 8);
        t.equal(moments_via_volume(a), a, "moments_via_volume, sequence " + std::to_string(trial));
    }
}

void properties(Tally& t) {
    std::mt19937_64 rng(8);
    constexpr std::size_t N = 10;
    const auto g = constant_multiplier(3, N);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_moments(rng, N);
        const auto b = random_moments(rng, N);
        const auto j = random_rational(rng);
        const std::string tag = "pair " + std::to_string(trial);

        t.equal(classical_from_moments(scale_umbra(a, j)), scale_umbra(classical_from_moments(a), j), "classical homogeneity " + tag);
        t.equal(boolean_from_moments(scale_umbra(a, j)), scale_umbra(boolean_from_moments(a), j), "boolean homogeneity " + tag);
        t.equal(free_from_moments(scale_umbra(a, j)), scale_umbra(free_from_moments(a), j), "free homogeneity " + tag);
        t.equal(generalized_cumulants(scale_umbra(a, j), g), scale_umbra(generalized_cumulants(a, g), j), "gamma homogeneity " + tag);

        t.equal(classical_from_moments(classical_convolve(a, b)),
                disjoint_sum(classical_from_moments(a), classical_from_moments(b)), "classical additivity " + tag);
        t.equal(boolean_from_moments(boolean_convolve(a, b)),
                disjoint_sum(boolean_from_moments(a), boolean_from_moments(b)), "boolean additivity " + tag);
        t.equal(free_from_moments(free_convolve(a, b)), disjoint_sum(free_from_moments(a), free_from_moments(b)),
                "free additivity " + tag);
        t.equal(generalized_cumulants(gamma_convolve(a, b, g), g),
                disjoint_sum(generalized_cumulants(a, g), generalized_cumulants(b, g)), "gamma additivity " + tag);

        // moments of c u are c^n; only the first cumulant moves, by c
        const auto cu = scale_umbra(ones(N), j);
        const std::vector<std::pair<const char*, std::function<MomentSequence(const MomentSequence&)>>> fams{
            {"classical", classical_from_moments}, {"boolean", boolean_from_moments}, {"free", free_from_moments}};
        const std::vector<std::function<MomentSequence(const MomentSequence&, const MomentSequence&)>> convs{
            classical_convolve, boolean_convolve, free_convolve};
        for (std::size_t f = 0; f < fams.size(); ++f) {
            const auto before = fams[f].second(a);
            std::vector<Rational> want(before.values().begin(), before.values().end());
            want[0] += j;
            t.equal(fams[f].second(convs[f](a, cu)), MomentSequence(want), std::string(fams[f].first) + " semi-invariance " + tag);
        }

        t.equal(boolean_free_transport(free_convolve(a, b)),
                boolean_convolve(boolean_free_transport(a), boolean_free_transport(b)), "transport " + tag);
    }
}

void series_identities(Tally& t) {
    constexpr std::size_t N = 12;
    // f(ū, t) = 1/(1-t); the generating function of ū^{<-1>} is 1 + reversion(f(ū,t) - 1)
    const auto one = TruncatedSeries::constant(1, N);
    const auto ubar_inverse = series_add(one, series_reversion(series_sub(egf_of(named_sequence("ubar", N)), one)));
    const auto beta_inner = series_sub(egf_of(ones(N)), one);  // e^t - 1
    const auto lhs = delta_compose(ubar_inverse, beta_inner);
    std::vector<Rational> alternating;
    for (std::size_t n = 1; n <= N; ++n) alternating.push_back(n % 2 ? -1 : 1);
    const auto rhs = series_sub(TruncatedSeries::constant(2, N), egf_of(MomentSequence(alternating)));
    for (std::size_t n = 0; n <= N; ++n) t.equal(lhs[n], rhs[n], "2 - e^{-t} at t^" + std::to_string(n));

    std::mt19937_64 rng(9);
    constexpr std::size_t M = 16;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> c{0, random_rational(rng, 4, 3) + Rational(5)};
        for (std::size_t i = 2; i <= M; ++i) c.push_back(random_rational(rng));
        const TruncatedSeries d(c);
        const auto w = series_reversion(d);
        const std::string tag = "series " + std::to_string(trial);
        t.expect(delta_compose(d, w) == TruncatedSeries::identity(M), "d(w(t)) = t, " + tag);
        t.expect(delta_compose(w, d) == TruncatedSeries::identity(M), "w(d(t)) = t, " + tag);
        t.expect(series_reversion(w) == d, "reversion is an involution, " + tag);
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Catalan reproduction, three routes", 5, catalan_routes},
        {2, "Bell reproduction against |Pi_n|, n <= 8", 5, bell_reproduction},
        {3, "Boolean reproduction against |I_n|, n <= 12", 1, boolean_reproduction},
        {4, "round trips, 100 sequences at N = 10", 30, round_trips},
        {5, "lattice theorems T1 T2 T3, mu*zeta = delta, commutativity", 60, lattice_theorems},
        {6, "Abel oracle equivalence, 50 sequences", 10, abel_oracles},
        {7, "volume suite", 60, volume_suite},
        {8, "homogeneity, additivity, semi-invariance, transport", 30, properties},
        {9, "series identities", 1, series_identities},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        c.body(tally);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string failure = tally.failure();
        if (failure.empty() && secs > c.budget_seconds) failure = "over time budget of " + std::to_string(c.budget_seconds) + " s";
        const bool pass = failure.empty();
        failures += pass ? 0 : 1;
        std::printf("criterion %d: %s  %s  (%zu checks, %.3f s)%s%s\n", c.id, pass ? "PASS" : "FAIL", c.title, tally.checks(),
                    secs, pass ? "" : "  first failure: ", failure.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
