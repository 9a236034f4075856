#include "umbral/transforms.hpp"

#include <stdexcept>
#include <string>

#include "umbral/partitions.hpp"
#include "umbral/series.hpp"

namespace umbral {

namespace {

void require_same_order(const MomentSequence& a, const MomentSequence& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

void require_multiplier_covers(const MultiplierSequence& g, std::size_t order, const char* op) {
    if (g.order() < order) {
        throw std::invalid_argument(std::string(op) + ": multiplier sequence shorter than input (" +
                                    std::to_string(g.order()) + " < " + std::to_string(order) + ")");
    }
}

/// out_n = Σ_{λ⊢n} weight(n, λ) x_λ for n = 1..N.
template <class Weight>
MomentSequence partition_sum(const MomentSequence& x, Weight weight) {
    std::vector<Rational> out;
    out.reserve(x.order());
    for (std::size_t n = 1; n <= x.order(); ++n) {
        Rational acc = 0;
        for (const auto& lambda : integer_partitions(static_cast<unsigned>(n))) {
            const Rational w = weight(n, lambda);
            if (!w.is_zero()) acc += w * x.product(lambda);
        }
        out.push_back(std::move(acc));
    }
    return MomentSequence(std::move(out));
}

unsigned ell(const IntegerPartition& lambda) { return static_cast<unsigned>(lambda.length()); }

Rational sign_pow(unsigned k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

MomentSequence classical_from_moments(const MomentSequence& m) {
    return partition_sum(m, [](std::size_t, const IntegerPartition& lambda) {
        const unsigned l = ell(lambda);
        return lambda.set_partition_count() * sign_pow(l - 1) * factorial(l - 1);
    });
}

MomentSequence moments_from_classical(const MomentSequence& c) {
    return partition_sum(c, [](std::size_t, const IntegerPartition& lambda) { return lambda.set_partition_count(); });
}

MomentSequence boolean_from_moments(const MomentSequence& m) {
    return partition_sum(m, [](std::size_t, const IntegerPartition& lambda) {
        const unsigned l = ell(lambda);
        return factorial(l) / lambda.multiplicity_factorial() * sign_pow(l - 1);
    });
}

MomentSequence moments_from_boolean(const MomentSequence& h) {
    std::vector<Rational> m;
    m.reserve(h.order());
    for (std::size_t n = 1; n <= h.order(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += h[k] * (n == k ? Rational(1) : m[n - k - 1]);
        m.push_back(std::move(acc));
    }
    return MomentSequence(std::move(m));
}

MomentSequence free_from_moments(const MomentSequence& m) {
    return partition_sum(m, [](std::size_t n, const IntegerPartition& lambda) {
        return falling_factorial(-Rational(n), ell(lambda) - 1) / lambda.multiplicity_factorial();
    });
}

MomentSequence moments_from_free(const MomentSequence& r) {
    return partition_sum(r, [](std::size_t n, const IntegerPartition& lambda) {
        return falling_factorial(Rational(n), ell(lambda) - 1) / lambda.multiplicity_factorial();
    });
}

MomentSequence generalized_cumulants(const MomentSequence& a, const MultiplierSequence& g) {
    require_multiplier_covers(g, a.order(), "generalized_cumulants");
    return partition_sum(a, [&g](std::size_t n, const IntegerPartition& lambda) {
        return lambda.set_partition_count() * falling_factorial(-g[n], ell(lambda) - 1);
    });
}

MomentSequence moments_from_generalized(const MomentSequence& c, const MultiplierSequence& g) {
    require_multiplier_covers(g, c.order(), "moments_from_generalized");
    std::vector<Rational> a;
    a.reserve(c.order());
    for (std::size_t n = 1; n <= c.order(); ++n) {
        // Only a_1..a_{n-1} are needed for λ != (n).
        const MomentSequence known(a);
        Rational acc = c[n];
        for (const auto& lambda : integer_partitions(static_cast<unsigned>(n))) {
            if (lambda.length() == 1) continue;
            acc -= lambda.set_partition_count() * falling_factorial(-g[n], ell(lambda) - 1) * known.product(lambda);
        }
        a.push_back(std::move(acc));
    }
    return MomentSequence(std::move(a));
}

Rational abel_oracle(const MomentSequence& a, const MultiplierSequence& g, std::size_t n) {
    if (n < 1 || n > a.order()) throw std::out_of_range("abel_oracle: degree outside [1, order]");
    require_multiplier_covers(g, n, "abel_oracle");

    // f(α, t) through degree n - 1.
    std::vector<Rational> coeffs(n, Rational(0));
    coeffs[0] = 1;
    for (std::size_t k = 1; k < n; ++k) coeffs[k] = a[k] / factorial(static_cast<unsigned>(k));
    const TruncatedSeries f(std::move(coeffs));

    const Rational& gn = g[n];
    const TruncatedSeries power = gn.is_integer() && abs(gn.numerator()) <= 1'000'000
                                      ? series_pow(f, -gn.numerator().get_si())
                                      : series_rational_pow(f, -gn);

    Rational acc = 0;
    const auto nm1 = static_cast<unsigned>(n - 1);
    for (unsigned j = 0; j <= nm1; ++j) {
        const Rational nu = power[nm1 - j] * factorial(nm1 - j);
        acc += binomial(nm1, j) * a[j + 1] * nu;
    }
    return acc;
}

CumulantMatrix::CumulantMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

const Rational& CumulantMatrix::at(std::size_t n, std::size_t k) const {
    if (n < 1 || n > rows_ || k < 1 || k > cols_) throw std::out_of_range("cumulant matrix index out of range");
    return entries_[(n - 1) * cols_ + (k - 1)];
}

Rational& CumulantMatrix::at(std::size_t n, std::size_t k) {
    if (n < 1 || n > rows_ || k < 1 || k > cols_) throw std::out_of_range("cumulant matrix index out of range");
    return entries_[(n - 1) * cols_ + (k - 1)];
}

MomentSequence CumulantMatrix::column(std::size_t k) const {
    std::vector<Rational> v;
    v.reserve(rows_);
    for (std::size_t n = 1; n <= rows_; ++n) v.push_back(at(n, k));
    return MomentSequence(std::move(v));
}

CumulantMatrix cumulant_matrix(const MomentSequence& a, std::size_t rows, std::size_t cols) {
    if (rows > a.order()) throw std::invalid_argument("cumulant_matrix: more rows than moments");
    std::vector<Rational> head(a.values().begin(), a.values().begin() + static_cast<std::ptrdiff_t>(rows));
    const MomentSequence truncated(std::move(head));
    CumulantMatrix out(rows, cols);
    for (std::size_t k = 1; k <= cols; ++k) {
        const MomentSequence column = generalized_cumulants(truncated, constant_multiplier(Rational(k), rows));
        for (std::size_t n = 1; n <= rows; ++n) out.at(n, k) = column[n];
    }
    return out;
}

MomentSequence classical_convolve(const MomentSequence& a, const MomentSequence& b) {
    require_same_order(a, b, "classical_convolve");
    return moments_from_classical(disjoint_sum(classical_from_moments(a), classical_from_moments(b)));
}

MomentSequence boolean_convolve(const MomentSequence& a, const MomentSequence& b) {
    require_same_order(a, b, "boolean_convolve");
    return moments_from_boolean(disjoint_sum(boolean_from_moments(a), boolean_from_moments(b)));
}

MomentSequence free_convolve(const MomentSequence& a, const MomentSequence& b) {
    require_same_order(a, b, "free_convolve");
    return moments_from_free(disjoint_sum(free_from_moments(a), free_from_moments(b)));
}

MomentSequence gamma_convolve(const MomentSequence& a, const MomentSequence& b, const MultiplierSequence& g) {
    require_same_order(a, b, "gamma_convolve");
    return moments_from_generalized(disjoint_sum(generalized_cumulants(a, g), generalized_cumulants(b, g)), g);
}

MomentSequence boolean_free_transport(const MomentSequence& a) {
    const MomentSequence r = free_from_moments(a);
    std::vector<Rational> coeffs{Rational(1)};
    coeffs.insert(coeffs.end(), r.values().begin(), r.values().end());
    const TruncatedSeries inverse = series_reciprocal(TruncatedSeries(std::move(coeffs)));
    return MomentSequence(std::vector<Rational>(inverse.coeffs().begin() + 1, inverse.coeffs().end()));
}

MomentSequence umbral_composition(const MomentSequence& g, const MomentSequence& a, GeneratingFlavor flavor) {
    if (g.order() < a.order()) throw std::invalid_argument("umbral_composition: outer sequence shorter than inner");
    if (flavor == GeneratingFlavor::Exponential) {
        return partition_sum(a, [&g](std::size_t, const IntegerPartition& lambda) {
            return lambda.set_partition_count() * g[lambda.length()];
        });
    }
    return partition_sum(a, [&g](std::size_t, const IntegerPartition& lambda) {
        return factorial(ell(lambda)) / lambda.multiplicity_factorial() * g[lambda.length()];
    });
}

std::vector<std::vector<Rational>> stirling_first_kind(std::size_t nmax) {
    // s(n+1, k) = s(n, k-1) - n s(n, k)
    std::vector<std::vector<Rational>> s(nmax + 1);
    s[0] = {Rational(1)};
    for (std::size_t n = 0; n < nmax; ++n) {
        s[n + 1].assign(n + 2, Rational(0));
        for (std::size_t k = 1; k <= n + 1; ++k) {
            Rational v = s[n][k - 1];
            if (k <= n) v -= Rational(n) * s[n][k];
            s[n + 1][k] = std::move(v);
        }
    }
    return s;
}

MomentSequence factorial_moments(const MomentSequence& a) {
    const auto s = stirling_first_kind(a.order());
    std::vector<Rational> out;
    out.reserve(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += s[n][k] * a[k];
        out.push_back(std::move(acc));
    }
    return MomentSequence(std::move(out));
}

MomentSequence dot_operation(const MomentSequence& g, const MomentSequence& a) {
    if (g.order() < a.order()) throw std::invalid_argument("dot_operation: outer sequence shorter than inner");
    const MomentSequence gf = factorial_moments(g);
    return partition_sum(a, [&gf](std::size_t, const IntegerPartition& lambda) {
        return lambda.set_partition_count() * gf[lambda.length()];
    });
}

MomentSequence dot_power(const MomentSequence& a, const Rational& k) {
    return partition_sum(a, [&k](std::size_t, const IntegerPartition& lambda) {
        return lambda.set_partition_count() * falling_factorial(k, ell(lambda));
    });
}

}  // namespace umbral
