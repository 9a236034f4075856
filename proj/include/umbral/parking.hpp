#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "umbral/partitions.hpp"
#include "umbral/rational.hpp"
#include "umbral/sequence.hpp"

namespace umbral {

using ParkingFunction = std::vector<unsigned>;

inline constexpr unsigned kMaxParkingN = 7;

/// Sorted nondecreasingly, the j-th entry is at most j.
bool is_parking(std::span<const unsigned> seq);

/// park(n) in lexicographic order, n <= 7 (std::out_of_range otherwise).
std::vector<ParkingFunction> enumerate_parking(unsigned n);

/// Nonzero multiplicities of the entries, as an integer partition of n.
/// Throws std::invalid_argument on a non-parking sequence.
IntegerPartition parking_type(std::span<const unsigned> p);

/// V_n(x_1..x_n) = (1/n!) Σ_{p∈park(n)} x_{p_1}···x_{p_n}, n = x.size() <= 7.
Rational volume_bruteforce(std::span<const Rational> x);

/// (1/n!) Σ_{p∈park(n)} a_{type(p)}: the volume polynomial with x_i replaced
/// by uncorrelated umbrae similar to α, summed literally over park(n).
Rational volume_symmetric_bruteforce(const MomentSequence& a, unsigned n);

/// Σ_{λ⊢n} (1/λ!) (n)_{ℓ-1}/m(λ)! a_λ, the same quantity by shape.
Rational volume_shape_eval(const MomentSequence& a, unsigned n);

/// Recovers a from its free cumulants r: ā_n = n! V_n(r̄', r̄'', ...).
MomentSequence moments_via_volume(const MomentSequence& a);

/// R_n = Σ_{λ⊢n} (n)_{ℓ-1} r_λ / m(λ)!, one parking function per orbit.
Rational orbit_moment_eval(const MomentSequence& r, unsigned n);

}  // namespace umbral
