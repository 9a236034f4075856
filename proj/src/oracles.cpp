#include "umbral/oracles.hpp"

#include <stdexcept>

namespace umbral {

TruncatedSeries egf_of(const MomentSequence& a) {
    std::vector<Rational> c{Rational(1)};
    for (std::size_t n = 1; n <= a.order(); ++n) c.push_back(a[n] / factorial(static_cast<unsigned>(n)));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries ogf_of(const MomentSequence& a) {
    std::vector<Rational> c{Rational(1)};
    c.insert(c.end(), a.values().begin(), a.values().end());
    return TruncatedSeries(std::move(c));
}

MomentSequence moments_of_egf(const TruncatedSeries& f) {
    std::vector<Rational> v;
    for (std::size_t n = 1; n <= f.order(); ++n) v.push_back(f[n] * factorial(static_cast<unsigned>(n)));
    return MomentSequence(std::move(v));
}

MomentSequence moments_of_ogf(const TruncatedSeries& f) {
    return MomentSequence(std::vector<Rational>(f.coeffs().begin() + 1, f.coeffs().end()));
}

MomentSequence classical_via_log(const MomentSequence& m) { return moments_of_egf(series_log(egf_of(m))); }

MomentSequence boolean_via_reciprocal(const MomentSequence& m) {
    const TruncatedSeries inv = series_reciprocal(ogf_of(m));
    return moments_of_ogf(series_sub(TruncatedSeries::constant(1, m.order()), inv));
}

MomentSequence moments_from_free_fixed_point(const MomentSequence& r) {
    const std::size_t order = r.order();
    const TruncatedSeries rr = ogf_of(r);
    TruncatedSeries m = TruncatedSeries::constant(1, order);
    for (std::size_t pass = 0; pass < order; ++pass) {
        const TruncatedSeries tm = series_mul(TruncatedSeries::identity(order), m);
        m = delta_compose(rr, tm);
    }
    return moments_of_ogf(m);
}

MomentSequence inverse_umbra(const MomentSequence& a) {
    std::vector<Rational> w{Rational(1)};  // w_0
    for (std::size_t j = 1; j <= a.order(); ++j) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= j; ++i) {
            acc += binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)) * a[i] * w[j - i];
        }
        w.push_back(-acc);
    }
    return MomentSequence(std::vector<Rational>(w.begin() + 1, w.end()));
}

MomentSequence sum_of_copies(const MomentSequence& a, unsigned k) {
    const std::size_t order = a.order();
    std::vector<Rational> s(order + 1, Rational(0));  // moments of ε
    s[0] = 1;
    for (unsigned copy = 0; copy < k; ++copy) {
        std::vector<Rational> next(order + 1, Rational(0));
        for (std::size_t j = 0; j <= order; ++j) {
            for (std::size_t i = 0; i <= j; ++i) {
                next[j] += binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)) * a.moment(i) * s[j - i];
            }
        }
        s = std::move(next);
    }
    return MomentSequence(std::vector<Rational>(s.begin() + 1, s.end()));
}

Rational abel_copy_oracle(const MomentSequence& a, unsigned k, std::size_t n) {
    if (n < 1 || n > a.order()) throw std::out_of_range("abel_copy_oracle: degree outside [1, order]");
    const MomentSequence shift = sum_of_copies(inverse_umbra(a), k);
    Rational acc = 0;
    const auto nm1 = static_cast<unsigned>(n - 1);
    for (unsigned j = 0; j <= nm1; ++j) acc += binomial(nm1, j) * a[j + 1] * shift.moment(nm1 - j);
    return acc;
}

}  // namespace umbral
