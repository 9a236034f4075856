#include "umbral/series.hpp"

#include <stdexcept>
#include <string>

namespace umbral {

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
    if (f.order() != g.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(f.order()) +
                                    " vs " + std::to_string(g.order()) + ")");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least a constant coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
    std::vector<Rational> v(order + 1, Rational(0));
    v[0] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    std::vector<Rational> v(order + 1, Rational(0));
    if (order >= 1) v[1] = 1;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g, "series_add");
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += g[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g, "series_sub");
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= g[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_scale(const TruncatedSeries& f, const Rational& c) {
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : out) x *= c;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g, "series_mul");
    const std::size_t n = f.order();
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += f[i] * g[j];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& f) {
    if (f[0].is_zero()) throw std::domain_error("series_reciprocal: zero constant term");
    const std::size_t n = f.order();
    const Rational inv0 = Rational(1) / f[0];
    std::vector<Rational> g(n + 1, Rational(0));
    g[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += f[j] * g[k - j];
        g[k] = -acc * inv0;
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries series_pow(const TruncatedSeries& f, long k) {
    TruncatedSeries base = k < 0 ? series_reciprocal(f) : f;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    TruncatedSeries result = TruncatedSeries::constant(1, f.order());
    while (e > 0) {
        if (e & 1U) result = series_mul(result, base);
        e >>= 1U;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

TruncatedSeries delta_compose(const TruncatedSeries& f, const TruncatedSeries& d) {
    require_same_order(f, d, "delta_compose");
    if (!d.is_delta()) throw std::domain_error("delta_compose: inner series has a nonzero constant term");
    const std::size_t n = f.order();
    TruncatedSeries acc = TruncatedSeries::constant(f[n], n);
    for (std::size_t i = n; i-- > 0;) {
        acc = series_mul(acc, d);
        std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += f[i];
        acc = TruncatedSeries(std::move(c));
    }
    return acc;
}

TruncatedSeries series_reversion(const TruncatedSeries& d) {
    if (!d.is_delta()) throw std::domain_error("series_reversion: not a delta series");
    const std::size_t n = d.order();
    if (n == 0) return TruncatedSeries(0);
    if (d[1].is_zero()) throw std::domain_error("series_reversion: no compositional inverse (linear coefficient is zero)");

    // Track the powers w^j so that the t^k coefficient of d(w) is linear in the
    // unknown w_k: [t^k] d(w) = d_1 w_k + (terms in w_1..w_{k-1}).
    std::vector<Rational> w(n + 1, Rational(0));
    w[1] = Rational(1) / d[1];
    for (std::size_t k = 2; k <= n; ++k) {
        TruncatedSeries partial(w);
        TruncatedSeries power = partial;
        Rational coeff = 0;
        for (std::size_t j = 2; j <= k; ++j) {
            power = series_mul(power, partial);
            coeff += d[j] * power[k];
        }
        w[k] = -coeff / d[1];
    }
    return TruncatedSeries(std::move(w));
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    if (!f.is_unit_constant()) throw std::domain_error("series_log: constant term must be 1");
    const std::size_t n = f.order();
    std::vector<Rational> g(n + 1, Rational(0));
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = Rational(m) * f[m];
        for (std::size_t k = 1; k < m; ++k) acc -= Rational(k) * g[k] * f[m - k];
        g[m] = acc / Rational(m);
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries series_exp(const TruncatedSeries& d) {
    if (!d.is_delta()) throw std::domain_error("series_exp: argument must be a delta series");
    const std::size_t n = d.order();
    std::vector<Rational> h(n + 1, Rational(0));
    h[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= m; ++k) acc += Rational(k) * d[k] * h[m - k];
        h[m] = acc / Rational(m);
    }
    return TruncatedSeries(std::move(h));
}

TruncatedSeries series_rational_pow(const TruncatedSeries& f, const Rational& c) {
    return series_exp(series_scale(series_log(f), c));
}

TruncatedSeries egf_to_ogf(const TruncatedSeries& f) {
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= factorial(static_cast<unsigned>(i));
    return TruncatedSeries(std::move(out));
}

TruncatedSeries ogf_to_egf(const TruncatedSeries& f) {
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] /= factorial(static_cast<unsigned>(i));
    return TruncatedSeries(std::move(out));
}

}  // namespace umbral
