#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Formal power series c_0 + c_1 t + ... + c_N t^N with exact rational
/// coefficients. Everything above t^N is discarded by every operation.
///
/// The same container is read either as an ordinary generating function
/// (coefficient n is the n-th term) or as an exponential one (coefficient n
/// is term_n / n!); egf_to_ogf and ogf_to_egf switch between the readings.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// Takes coefficients c_0..c_N; order is coeffs.size() - 1. Throws
    /// std::invalid_argument on an empty list.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, std::size_t order);
    /// The identity delta series t.
    static TruncatedSeries identity(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_unit_constant() const { return coeffs_[0] == 1; }
    bool is_delta() const { return coeffs_[0].is_zero(); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// All binary operations throw std::invalid_argument when orders differ.

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_scale(const TruncatedSeries& f, const Rational& c);

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplicative inverse. Throws std::domain_error if f_0 = 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& f);

/// f^k for any integer k; negative k goes through series_reciprocal.
TruncatedSeries series_pow(const TruncatedSeries& f, long k);

/// f(d(t)) by Horner evaluation. Throws std::domain_error unless d_0 = 0.
TruncatedSeries delta_compose(const TruncatedSeries& f, const TruncatedSeries& d);

/// Compositional inverse w of a delta series d with d_1 != 0, so that
/// d(w(t)) = t. Solved coefficient by coefficient. Throws
/// std::domain_error when d is not a delta series or d_1 = 0.
TruncatedSeries series_reversion(const TruncatedSeries& d);

/// log f for f_0 = 1, via n g_n = n f_n - sum_{k<n} k g_k f_{n-k}.
TruncatedSeries series_log(const TruncatedSeries& f);

/// exp d for a delta series, via n h_n = sum_{k=1..n} k d_k h_{n-k}.
TruncatedSeries series_exp(const TruncatedSeries& d);

/// exp(c log f) for f_0 = 1; agrees with series_pow on integers.
TruncatedSeries series_rational_pow(const TruncatedSeries& f, const Rational& c);

/// Multiply coefficient n by n!.
TruncatedSeries egf_to_ogf(const TruncatedSeries& f);
/// Divide coefficient n by n!.
TruncatedSeries ogf_to_egf(const TruncatedSeries& f);

}  // namespace umbral
