#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/partitions.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Rational sequence x_1..x_N indexed from 1. The tag keeps moment data and
/// multiplier data from being mixed up at call sites.
template <class Tag>
class IndexedSequence {
public:
    IndexedSequence() = default;
    explicit IndexedSequence(std::vector<Rational> values) : values_(std::move(values)) {}

    std::size_t order() const { return values_.size(); }

    /// Term n, 1 <= n <= order.
    const Rational& operator[](std::size_t n) const {
        if (n < 1 || n > values_.size()) {
            throw std::out_of_range("sequence index " + std::to_string(n) + " outside [1, " +
                                    std::to_string(values_.size()) + "]");
        }
        return values_[n - 1];
    }

    std::span<const Rational> values() const { return values_; }

    friend bool operator==(const IndexedSequence&, const IndexedSequence&) = default;

private:
    std::vector<Rational> values_;
};

/// Moments a_1..a_N of an umbra, a_0 = 1 implicit. Cumulant sequences of
/// every family use the same type.
class MomentSequence : public IndexedSequence<struct MomentTag> {
public:
    using IndexedSequence::IndexedSequence;

    /// a_n for 0 <= n <= order, with a_0 = 1.
    Rational moment(std::size_t n) const { return n == 0 ? Rational(1) : (*this)[n]; }

    /// a_λ = ∏ a_{λ_i}.
    Rational product(const IntegerPartition& lambda) const;
};

/// Multiplier sequence g_1..g_N (the moments of the inducing umbra γ).
using MultiplierSequence = IndexedSequence<struct MultiplierTag>;

/// Constant multiplier k at every degree.
MultiplierSequence constant_multiplier(const Rational& k, std::size_t order);
/// g_n = n.
MultiplierSequence identity_multiplier(std::size_t order);

/// ā_n = n! a_n.
MomentSequence bar(const MomentSequence& a);
/// a_n = ā_n / n!.
MomentSequence unbar(const MomentSequence& a);

/// Elementwise sum (the disjoint sum of umbrae). Throws on order mismatch.
MomentSequence disjoint_sum(const MomentSequence& a, const MomentSequence& b);

/// (j^n a_n): moments of jα.
MomentSequence scale_umbra(const MomentSequence& a, const Rational& j);

/// Named constant sequences: "u" (all ones), "chi" (1,0,0,..), "epsilon"
/// (zeros), "ubar" (n!), "uD" (n), "bell" (Bell numbers), "catalan".
/// Throws std::invalid_argument for unknown names.
MomentSequence named_sequence(std::string_view name, std::size_t order);

/// Names accepted by named_sequence.
std::span<const std::string_view> sequence_names();

}  // namespace umbral
