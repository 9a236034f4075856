#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "umbral/partitions.hpp"
#include "umbral/rational.hpp"
#include "umbral/sequence.hpp"

namespace umbral {

/// Multiplicative function on a partition lattice, determined by
/// f_n = f(0_n, 1_n). On an interval of type (k_1..k_n) it evaluates to
/// ∏ f_i^{k_i}.
class MultiplicativeFunction : public IndexedSequence<struct MultiplicativeTag> {
public:
    using IndexedSequence::IndexedSequence;

    /// μ_n = (-1)^{n-1} (n-1)! on Π_n.
    static MultiplicativeFunction mobius(std::size_t order);
    static MultiplicativeFunction zeta(std::size_t order);
    /// δ_n = [n = 1].
    static MultiplicativeFunction delta(std::size_t order);
    static MultiplicativeFunction from_moments(const MomentSequence& m);

    Rational eval_type(const IntervalType& type) const;
    /// f_τ = f(0_n, τ) = ∏_{B∈τ} f_{|B|}.
    Rational eval_blocks(const SetPartition& tau) const;
};

/// Throws std::invalid_argument unless σ ≤ π.
Rational eval_interval(const MultiplicativeFunction& f, const SetPartition& sigma, const SetPartition& pi);

inline constexpr unsigned kMaxLatticeN = 7;
inline constexpr unsigned kMaxIntervalLatticeN = 12;

/// The elements of Π_n, NC_n or I_n, computed once per (n, lattice) and
/// shared read-only afterwards.
const std::vector<SetPartition>& lattice_elements(unsigned n, Lattice lattice);

/// Kreweras complements of NC_n, aligned with lattice_elements(n, Noncrossing).
const std::vector<SetPartition>& kreweras_table(unsigned n);

/// (f ⊛ g)(0_n, 1_n) by literal summation over the lattice:
///   All:         Σ_{τ∈Π_n} f(0,τ) g(τ,1)
///   Noncrossing: Σ_{τ∈NC_n} f_τ g_{K(τ)}, K the Kreweras complement
///   Interval:    Σ_{τ∈I_n} f(0,τ) g(τ,1)
/// n <= 7 for All/Noncrossing, n <= 12 for Interval; std::out_of_range otherwise.
Rational convolve_lattice(const MultiplicativeFunction& f, const MultiplicativeFunction& g, unsigned n,
                          Lattice lattice);

/// (f ⊛ g)(σ, π) = Σ_{σ≤τ≤π} f(σ,τ) g(τ,π) on Π_n or I_n. Interval types do
/// not describe NC intervals, so Noncrossing throws std::invalid_argument.
Rational convolve_on_interval(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                              const SetPartition& sigma, const SetPartition& pi, Lattice lattice);

/// μ(0_n, 1_n) on the lattice from Σ_{0≤τ≤π} μ(0,τ) = δ(0,π).
Rational mobius_by_recursion(unsigned n, Lattice lattice);

/// μ_1..μ_order on the lattice, each by recursion.
MultiplicativeFunction mobius_sequence_by_recursion(std::size_t order, Lattice lattice);

/// μ(τ, 1_n) for every τ in lattice_elements(n, lattice), by recursion from the top.
std::vector<Rational> mobius_to_top(unsigned n, Lattice lattice);

enum class Theorem { T1, T2, T3, Commutativity, Mobius, Fourier };

struct VerificationReport {
    std::string theorem;
    unsigned n = 0;
    bool pass = false;
    std::size_t checked = 0;
    std::string detail;  // first counterexample when pass is false
};

std::string theorem_name(Theorem which);

/// Executable check of a lattice identity at degrees 1..n on pseudo-random
/// rational inputs drawn from `seed`:
///   T1: EGF composition f[g(t) - 1] against g ⋆ f on Π_n
///   T2: free cumulants against m ∗ μ_NC (μ_NC by recursion), moments
///       against r ∗ ζ; also run on the Catalan moments
///   T3: OGF composition against g ⋄ f on I_n
///   Commutativity: f ∗ g = g ∗ f
///   Mobius: μ ⋆ ζ = ζ ⋆ μ = δ on Π_n; all intervals when n <= 5
///   Fourier: with f_k = a_{k-1} (unital), f ∗ g maps to the product of the
///            transport series (1 + Σ l_k t^k), n <= 6
/// `checked` is the number of lattice elements at degree n.
VerificationReport verify_theorem(unsigned n, Theorem which, std::uint64_t seed = 1);

}  // namespace umbral
