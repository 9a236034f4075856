#include "umbral/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "umbral/oracles.hpp"
#include "umbral/random.hpp"
#include "umbral/series.hpp"
#include "umbral/transforms.hpp"

namespace umbral {

// ---------------------------------------------------------------------------
// Multiplicative functions

MultiplicativeFunction MultiplicativeFunction::mobius(std::size_t order) {
    std::vector<Rational> v;
    for (std::size_t n = 1; n <= order; ++n) {
        const auto k = static_cast<unsigned>(n - 1);
        v.push_back((k % 2 == 0 ? Rational(1) : Rational(-1)) * factorial(k));
    }
    return MultiplicativeFunction(std::move(v));
}

MultiplicativeFunction MultiplicativeFunction::zeta(std::size_t order) {
    return MultiplicativeFunction(std::vector<Rational>(order, Rational(1)));
}

MultiplicativeFunction MultiplicativeFunction::delta(std::size_t order) {
    std::vector<Rational> v(order, Rational(0));
    if (order >= 1) v[0] = 1;
    return MultiplicativeFunction(std::move(v));
}

MultiplicativeFunction MultiplicativeFunction::from_moments(const MomentSequence& m) {
    return MultiplicativeFunction(std::vector<Rational>(m.values().begin(), m.values().end()));
}

Rational MultiplicativeFunction::eval_type(const IntervalType& type) const {
    Rational r = 1;
    for (unsigned i = 1; i <= type.k.size(); ++i) {
        if (type(i) != 0) r *= pow((*this)[i], type(i));
    }
    return r;
}

Rational MultiplicativeFunction::eval_blocks(const SetPartition& tau) const {
    Rational r = 1;
    for (unsigned size : tau.block_sizes()) r *= (*this)[size];
    return r;
}

Rational eval_interval(const MultiplicativeFunction& f, const SetPartition& sigma, const SetPartition& pi) {
    return f.eval_type(interval_type(sigma, pi));
}

// ---------------------------------------------------------------------------
// Cached enumerations

namespace {

unsigned lattice_bound(Lattice lattice) {
    return lattice == Lattice::Interval ? kMaxIntervalLatticeN : kMaxLatticeN;
}

void require_lattice_bound(unsigned n, Lattice lattice) {
    const unsigned max = lattice_bound(lattice);
    if (n < 1 || n > max) {
        throw std::out_of_range("lattice degree " + std::to_string(n) + " outside [1, " + std::to_string(max) + "]");
    }
}

std::mutex cache_mutex;
std::map<std::pair<unsigned, int>, std::unique_ptr<const std::vector<SetPartition>>> element_cache;
std::map<unsigned, std::unique_ptr<const std::vector<SetPartition>>> kreweras_cache;

}  // namespace

const std::vector<SetPartition>& lattice_elements(unsigned n, Lattice lattice) {
    require_lattice_bound(n, lattice);
    const std::lock_guard lock(cache_mutex);
    auto& slot = element_cache[{n, static_cast<int>(lattice)}];
    if (!slot) {
        switch (lattice) {
            case Lattice::All: slot = std::make_unique<const std::vector<SetPartition>>(set_partitions(n)); break;
            case Lattice::Noncrossing:
                slot = std::make_unique<const std::vector<SetPartition>>(noncrossing_partitions(n));
                break;
            case Lattice::Interval:
                slot = std::make_unique<const std::vector<SetPartition>>(interval_partitions(n));
                break;
        }
    }
    return *slot;
}

const std::vector<SetPartition>& kreweras_table(unsigned n) {
    const auto& nc = lattice_elements(n, Lattice::Noncrossing);
    const std::lock_guard lock(cache_mutex);
    auto& slot = kreweras_cache[n];
    if (!slot) {
        std::vector<SetPartition> table;
        table.reserve(nc.size());
        for (const auto& tau : nc) table.push_back(kreweras_complement(tau));
        slot = std::make_unique<const std::vector<SetPartition>>(std::move(table));
    }
    return *slot;
}

// ---------------------------------------------------------------------------
// Convolutions and Möbius functions

Rational convolve_lattice(const MultiplicativeFunction& f, const MultiplicativeFunction& g, unsigned n,
                          Lattice lattice) {
    const auto& elements = lattice_elements(n, lattice);
    const SetPartition bottom = SetPartition::finest(n);
    const SetPartition top = SetPartition::coarsest(n);
    Rational acc = 0;
    if (lattice == Lattice::Noncrossing) {
        const auto& complements = kreweras_table(n);
        for (std::size_t i = 0; i < elements.size(); ++i) {
            acc += eval_interval(f, bottom, elements[i]) * eval_interval(g, bottom, complements[i]);
        }
        return acc;
    }
    for (const auto& tau : elements) acc += eval_interval(f, bottom, tau) * eval_interval(g, tau, top);
    return acc;
}

Rational convolve_on_interval(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                              const SetPartition& sigma, const SetPartition& pi, Lattice lattice) {
    if (lattice == Lattice::Noncrossing) {
        throw std::invalid_argument("convolve_on_interval: noncrossing intervals are not described by interval types");
    }
    if (!leq_refinement(sigma, pi)) throw std::invalid_argument("convolve_on_interval: sigma is not finer than pi");
    Rational acc = 0;
    for (const auto& tau : lattice_elements(sigma.n(), lattice)) {
        if (leq_refinement(sigma, tau) && leq_refinement(tau, pi)) {
            acc += eval_interval(f, sigma, tau) * eval_interval(g, tau, pi);
        }
    }
    return acc;
}

namespace {

// Indices of lattice elements sorted from finest to coarsest.
std::vector<std::size_t> rank_order(const std::vector<SetPartition>& elements) {
    std::vector<std::size_t> idx(elements.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return elements[a].num_blocks() > elements[b].num_blocks();
    });
    return idx;
}

}  // namespace

Rational mobius_by_recursion(unsigned n, Lattice lattice) {
    const auto& elements = lattice_elements(n, lattice);
    const auto order = rank_order(elements);
    const SetPartition bottom = SetPartition::finest(n);
    const SetPartition top = SetPartition::coarsest(n);

    std::vector<Rational> mu(elements.size(), Rational(0));
    std::vector<std::size_t> done;
    for (std::size_t i : order) {
        if (elements[i] == bottom) {
            mu[i] = 1;
        } else {
            Rational acc = 0;
            for (std::size_t j : done) {
                if (leq_refinement(elements[j], elements[i])) acc += mu[j];
            }
            mu[i] = -acc;
        }
        done.push_back(i);
        if (elements[i] == top) return mu[i];
    }
    throw std::logic_error("mobius_by_recursion: top element missing");
}

MultiplicativeFunction mobius_sequence_by_recursion(std::size_t order, Lattice lattice) {
    std::vector<Rational> v;
    for (std::size_t n = 1; n <= order; ++n) v.push_back(mobius_by_recursion(static_cast<unsigned>(n), lattice));
    return MultiplicativeFunction(std::move(v));
}

std::vector<Rational> mobius_to_top(unsigned n, Lattice lattice) {
    const auto& elements = lattice_elements(n, lattice);
    auto order = rank_order(elements);
    std::reverse(order.begin(), order.end());
    const SetPartition top = SetPartition::coarsest(n);

    std::vector<Rational> mu(elements.size(), Rational(0));
    std::vector<std::size_t> done;
    for (std::size_t i : order) {
        if (elements[i] == top) {
            mu[i] = 1;
        } else {
            Rational acc = 0;
            for (std::size_t j : done) {
                if (leq_refinement(elements[i], elements[j])) acc += mu[j];
            }
            mu[i] = -acc;
        }
        done.push_back(i);
    }
    return mu;
}

// ---------------------------------------------------------------------------
// Theorem verification

std::string theorem_name(Theorem which) {
    switch (which) {
        case Theorem::T1: return "T1";
        case Theorem::T2: return "T2";
        case Theorem::T3: return "T3";
        case Theorem::Commutativity: return "COMMUTATIVITY";
        case Theorem::Mobius: return "MOBIUS";
        case Theorem::Fourier: return "FOURIER";
    }
    return "?";
}

namespace {

class Checker {
public:
    explicit Checker(VerificationReport& report) : report_(report) {}

    void expect_equal(const Rational& lhs, const Rational& rhs, const std::string& what) {
        if (!report_.pass || lhs == rhs) return;
        report_.pass = false;
        std::ostringstream os;
        os << what << ": " << lhs << " != " << rhs;
        report_.detail = os.str();
    }

private:
    VerificationReport& report_;
};

MultiplicativeFunction random_function(std::mt19937_64& rng, std::size_t order) {
    return MultiplicativeFunction::from_moments(random_moments(rng, order));
}

std::string at_degree(const char* what, unsigned k) { return std::string(what) + " at degree " + std::to_string(k); }

void check_t1(unsigned n, std::mt19937_64& rng, Checker& check) {
    const auto f = random_function(rng, n);
    const auto g = random_function(rng, n);
    const MomentSequence fm(std::vector<Rational>(f.values().begin(), f.values().end()));
    const MomentSequence gm(std::vector<Rational>(g.values().begin(), g.values().end()));
    const TruncatedSeries inner = series_sub(egf_of(gm), TruncatedSeries::constant(1, n));
    const MomentSequence h = moments_of_egf(delta_compose(egf_of(fm), inner));
    for (unsigned k = 1; k <= n; ++k) check.expect_equal(h[k], convolve_lattice(g, f, k, Lattice::All), at_degree("f[g-1] vs g*f", k));
}

void check_t3(unsigned n, std::mt19937_64& rng, Checker& check) {
    const auto f = random_function(rng, n);
    const auto g = random_function(rng, n);
    const MomentSequence fm(std::vector<Rational>(f.values().begin(), f.values().end()));
    const MomentSequence gm(std::vector<Rational>(g.values().begin(), g.values().end()));
    const TruncatedSeries inner = series_sub(ogf_of(gm), TruncatedSeries::constant(1, n));
    const MomentSequence h = moments_of_ogf(delta_compose(ogf_of(fm), inner));
    for (unsigned k = 1; k <= n; ++k) {
        check.expect_equal(h[k], convolve_lattice(g, f, k, Lattice::Interval), at_degree("f[g-1] vs g<>f", k));
    }
}

void check_t2_on(const MomentSequence& m, unsigned n, Checker& check) {
    const auto mu_nc = mobius_sequence_by_recursion(n, Lattice::Noncrossing);
    const auto zeta = MultiplicativeFunction::zeta(n);
    const auto mf = MultiplicativeFunction::from_moments(m);
    const MomentSequence r = free_from_moments(m);
    const auto rf = MultiplicativeFunction::from_moments(r);
    const MomentSequence back = moments_from_free(r);
    for (unsigned k = 1; k <= n; ++k) {
        check.expect_equal(r[k], convolve_lattice(mf, mu_nc, k, Lattice::Noncrossing), at_degree("r vs m*mu_NC", k));
        check.expect_equal(back[k], convolve_lattice(rf, zeta, k, Lattice::Noncrossing), at_degree("m vs r*zeta", k));
        // Literal two-point sum with μ_NC(τ, 1) from the poset itself, which
        // validates the Kreweras factorization independently.
        const auto& elements = lattice_elements(k, Lattice::Noncrossing);
        const auto to_top = mobius_to_top(k, Lattice::Noncrossing);
        Rational literal = 0;
        for (std::size_t i = 0; i < elements.size(); ++i) literal += mf.eval_blocks(elements[i]) * to_top[i];
        check.expect_equal(r[k], literal, at_degree("r vs literal NC Mobius sum", k));
    }
}

void check_commutativity(unsigned n, std::mt19937_64& rng, Checker& check) {
    for (int trial = 0; trial < 3; ++trial) {
        const auto f = random_function(rng, n);
        const auto g = random_function(rng, n);
        for (unsigned k = 1; k <= n; ++k) {
            check.expect_equal(convolve_lattice(f, g, k, Lattice::Noncrossing),
                               convolve_lattice(g, f, k, Lattice::Noncrossing), at_degree("f*g vs g*f", k));
        }
    }
}

void check_mobius(unsigned n, Checker& check) {
    const auto mu = mobius_sequence_by_recursion(n, Lattice::All);
    const auto mu_closed = MultiplicativeFunction::mobius(n);
    const auto zeta = MultiplicativeFunction::zeta(n);
    const auto delta = MultiplicativeFunction::delta(n);
    for (unsigned k = 1; k <= n; ++k) {
        check.expect_equal(mu[k], mu_closed[k], at_degree("recursive mu vs (-1)^{n-1}(n-1)!", k));
        check.expect_equal(convolve_lattice(mu, zeta, k, Lattice::All), delta[k], at_degree("mu*zeta", k));
        check.expect_equal(convolve_lattice(zeta, mu, k, Lattice::All), delta[k], at_degree("zeta*mu", k));
    }
    if (n <= 5) {
        const auto& elements = lattice_elements(n, Lattice::All);
        for (const auto& sigma : elements) {
            for (const auto& pi : elements) {
                if (!leq_refinement(sigma, pi)) continue;
                const Rational expected = sigma == pi ? Rational(1) : Rational(0);
                check.expect_equal(convolve_on_interval(mu, zeta, sigma, pi, Lattice::All), expected,
                                   "mu*zeta on a proper interval");
            }
        }
    }
}

void check_fourier(unsigned n, std::mt19937_64& rng, Checker& check) {
    if (n < 2) return;
    const MomentSequence a = random_moments(rng, n - 1);
    const MomentSequence b = random_moments(rng, n - 1);
    // f_k = a_{k-1}, so f_1 = 1.
    auto shifted = [](const MomentSequence& x) {
        std::vector<Rational> v{Rational(1)};
        v.insert(v.end(), x.values().begin(), x.values().end());
        return MultiplicativeFunction(std::move(v));
    };
    const auto f = shifted(a);
    const auto g = shifted(b);
    std::vector<Rational> w;
    for (unsigned k = 2; k <= n; ++k) w.push_back(convolve_lattice(f, g, k, Lattice::Noncrossing));
    const MomentSequence wm(std::move(w));
    const TruncatedSeries lhs = ogf_of(boolean_free_transport(wm));
    const TruncatedSeries rhs = series_mul(ogf_of(boolean_free_transport(a)), ogf_of(boolean_free_transport(b)));
    for (std::size_t k = 1; k <= lhs.order(); ++k) {
        check.expect_equal(lhs[k], rhs[k], at_degree("transport of f*g vs product", static_cast<unsigned>(k)));
    }
}

}  // namespace

VerificationReport verify_theorem(unsigned n, Theorem which, std::uint64_t seed) {
    VerificationReport report;
    report.theorem = theorem_name(which);
    report.n = n;
    report.pass = true;
    Checker check(report);
    std::mt19937_64 rng(seed);

    switch (which) {
        case Theorem::T1:
            check_t1(n, rng, check);
            report.checked = lattice_elements(n, Lattice::All).size();
            break;
        case Theorem::T2:
            check_t2_on(random_moments(rng, n), n, check);
            check_t2_on(named_sequence("catalan", n), n, check);
            report.checked = lattice_elements(n, Lattice::Noncrossing).size();
            break;
        case Theorem::T3:
            check_t3(n, rng, check);
            report.checked = lattice_elements(n, Lattice::Interval).size();
            break;
        case Theorem::Commutativity:
            check_commutativity(n, rng, check);
            report.checked = lattice_elements(n, Lattice::Noncrossing).size();
            break;
        case Theorem::Mobius:
            check_mobius(n, check);
            report.checked = lattice_elements(n, Lattice::All).size();
            break;
        case Theorem::Fourier:
            check_fourier(n, rng, check);
            report.checked = lattice_elements(n, Lattice::Noncrossing).size();
            break;
    }
    return report;
}

}  // namespace umbral
