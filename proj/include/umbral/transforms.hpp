#pragma once

#include <cstddef>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/sequence.hpp"

namespace umbral {

// Moment <-> cumulant transforms. Every function takes and returns unbarred
// sequences; barred forms are reached through bar()/unbar(). All outputs
// have the order of the input.

/// c_n = Σ_{λ⊢n} d_λ (-1)^{ℓ-1} (ℓ-1)! m_λ.
MomentSequence classical_from_moments(const MomentSequence& m);
/// m_n = Σ_{λ⊢n} d_λ c_λ (complete Bell polynomial).
MomentSequence moments_from_classical(const MomentSequence& c);

/// h_n = Σ_{λ⊢n} ℓ!/m(λ)! (-1)^{ℓ-1} m_λ.
MomentSequence boolean_from_moments(const MomentSequence& m);
/// m_n = Σ_{k=1..n} h_k m_{n-k}, from M = 1 + H M.
MomentSequence moments_from_boolean(const MomentSequence& h);

/// r_n = Σ_{λ⊢n} (-n)_{ℓ-1} m_λ / m(λ)!.
MomentSequence free_from_moments(const MomentSequence& m);
/// m_n = Σ_{λ⊢n} (n)_{ℓ-1} r_λ / m(λ)!.
MomentSequence moments_from_free(const MomentSequence& r);

/// Cumulants induced by the multiplier sequence g:
/// c_n = Σ_{λ⊢n} d_λ (-g_n)_{ℓ-1} a_λ. g must be at least as long as a.
MomentSequence generalized_cumulants(const MomentSequence& a, const MultiplierSequence& g);

/// Inverse of generalized_cumulants, solved degree by degree; the λ = (n)
/// term always carries a_n with coefficient 1.
MomentSequence moments_from_generalized(const MomentSequence& c, const MultiplierSequence& g);

/// E[δ(δ - g_n.α)^{n-1}] with δ ≡ α: the power sequence ν of (-g_n).α is
/// read off f(α,t)^{-g_n}, then Σ_j C(n-1,j) a_{j+1} ν_{n-1-j}.
/// Independent of the partition sum in generalized_cumulants.
Rational abel_oracle(const MomentSequence& a, const MultiplierSequence& g, std::size_t n);

/// c_{n,k} = generalized_cumulants(a, constant k)[n] for n <= rows, k <= cols.
class CumulantMatrix {
public:
    CumulantMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    /// 1-based entry (n, k).
    const Rational& at(std::size_t n, std::size_t k) const;
    Rational& at(std::size_t n, std::size_t k);
    MomentSequence column(std::size_t k) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;  // row-major
};

/// Throws std::invalid_argument if rows > a.order().
CumulantMatrix cumulant_matrix(const MomentSequence& a, std::size_t rows, std::size_t cols);

// Convolutions: map both inputs to cumulants of the family, add, map back.
// All throw std::invalid_argument on order mismatch.

MomentSequence classical_convolve(const MomentSequence& a, const MomentSequence& b);
MomentSequence boolean_convolve(const MomentSequence& a, const MomentSequence& b);
MomentSequence free_convolve(const MomentSequence& a, const MomentSequence& b);
MomentSequence gamma_convolve(const MomentSequence& a, const MomentSequence& b, const MultiplierSequence& g);

/// Coefficients l_1..l_N of 1 / (1 + Σ r_n t^n), r the free cumulants of a.
/// Turns free convolution into boolean convolution.
MomentSequence boolean_free_transport(const MomentSequence& a);

enum class GeneratingFlavor { Exponential, Ordinary };

/// Moments of the composition umbra γ.β.α:
///   Exponential: h_n = Σ_λ d_λ g_ℓ a_λ        (EGF composition)
///   Ordinary:    h_n = Σ_λ ℓ!/m(λ)! g_ℓ a_λ   (OGF composition)
MomentSequence umbral_composition(const MomentSequence& g, const MomentSequence& a, GeneratingFlavor flavor);

/// a_(n) = E[(α)_n] = Σ_k s(n,k) a_k with signed Stirling numbers of the first kind.
MomentSequence factorial_moments(const MomentSequence& a);

/// Moments of γ.α: Σ_λ d_λ γ_(ℓ) a_λ with γ_(ℓ) the factorial moments of g.
MomentSequence dot_operation(const MomentSequence& g, const MomentSequence& a);

/// Moments of k.α for a scalar k (any rational): Σ_λ d_λ (k)_ℓ a_λ.
MomentSequence dot_power(const MomentSequence& a, const Rational& k);

/// s(n, k) for 0 <= k <= n.
std::vector<std::vector<Rational>> stirling_first_kind(std::size_t nmax);

}  // namespace umbral
