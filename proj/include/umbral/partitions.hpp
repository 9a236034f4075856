#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// λ ⊢ n stored with nonincreasing positive parts.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Throws std::invalid_argument unless parts are positive and nonincreasing.
    explicit IntegerPartition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const { return n_; }  // n
    std::size_t length() const { return parts_.size(); }  // ℓ(λ)

    /// m(λ)_i for i = 1..n; index 0 unused.
    std::vector<unsigned> multiplicities() const;
    /// m(λ)! = ∏ m(λ)_i!
    Rational multiplicity_factorial() const;
    /// λ! = ∏ λ_i!
    Rational part_factorial() const;
    /// d_λ = n! / (λ! m(λ)!), the number of set partitions of [n] of shape λ.
    Rational set_partition_count() const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// All λ ⊢ n in reverse-lexicographic order: (n), (n-1,1), ..., (1,...,1).
std::vector<IntegerPartition> integer_partitions(unsigned n);

inline constexpr unsigned kMaxGround = 16;
inline constexpr unsigned kMaxSetPartitionEnum = 12;

/// A partition of [n] = {1..n}, n <= 16, held as its restricted growth
/// string: label(i) is the 0-based index of the block containing i, blocks
/// numbered by their minimum element. Equality is therefore structural.
class SetPartition {
public:
    /// Blocks as 1-based element lists in any order. Throws
    /// std::invalid_argument unless they are disjoint, nonempty and cover [n].
    SetPartition(unsigned n, const std::vector<std::vector<unsigned>>& blocks);

    /// Any block labelling (not necessarily canonical); relabelled into
    /// restricted growth form.
    static SetPartition from_labels(const std::vector<unsigned>& labels);

    static SetPartition finest(unsigned n);    // 0_n
    static SetPartition coarsest(unsigned n);  // 1_n

    unsigned n() const { return n_; }
    unsigned num_blocks() const { return num_blocks_; }
    /// Block index of element i (1-based).
    unsigned label(unsigned i) const { return labels_[i - 1]; }

    /// Blocks sorted by minimum, each sorted ascending.
    std::vector<std::vector<unsigned>> blocks() const;
    std::vector<unsigned> block_sizes() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    SetPartition() = default;
    std::array<std::uint8_t, kMaxGround> labels_{};
    std::uint8_t n_ = 0;
    std::uint8_t num_blocks_ = 0;
};

/// Visits Π_n in restricted-growth-string order without materializing it.
void for_each_set_partition(unsigned n, const std::function<void(const SetPartition&)>& visit);

/// Π_n in restricted-growth-string order. 1 <= n <= 12, else std::out_of_range.
std::vector<SetPartition> set_partitions(unsigned n);

bool is_noncrossing(const SetPartition& p);

/// NC_n, order inherited from set_partitions. 1 <= n <= 12.
std::vector<SetPartition> noncrossing_partitions(unsigned n);

bool is_interval(const SetPartition& p);

/// I_n, one per composition of n, 1 <= n <= 16. Ordered by the restricted
/// growth order like the other enumerations.
std::vector<SetPartition> interval_partitions(unsigned n);

/// σ ≤ π in refinement order. Throws std::invalid_argument on ground-set mismatch.
bool leq_refinement(const SetPartition& sigma, const SetPartition& pi);

/// Type (k_1, ..., k_n) of an interval [σ, π]: k_i counts the blocks of π
/// that are unions of exactly i blocks of σ.
struct IntervalType {
    std::vector<unsigned> k;  // k[i - 1] = k_i

    unsigned operator()(unsigned i) const { return k.at(i - 1); }
    friend bool operator==(const IntervalType&, const IntervalType&) = default;
};

/// Throws std::invalid_argument unless σ ≤ π.
IntervalType interval_type(const SetPartition& sigma, const SetPartition& pi);

/// sh(π), stored nonincreasing.
IntegerPartition shape(const SetPartition& p);

/// Kreweras complement of a noncrossing π: the coarsest partition of the
/// barred points {1̄..n̄}, interleaved 1 < 1̄ < 2 < 2̄ < ..., whose union with
/// π stays noncrossing. Found by exhaustive search; n <= 12. Throws
/// std::invalid_argument on crossing input.
SetPartition kreweras_complement(const SetPartition& pi);

enum class Lattice { All, Noncrossing, Interval };

/// Number of partitions of shape λ in the lattice: d_λ, (n)_{ℓ-1}/m(λ)!,
/// or ℓ(λ)!/m(λ)!.
Rational count_by_shape(const IntegerPartition& lambda, Lattice lattice);

}  // namespace umbral
