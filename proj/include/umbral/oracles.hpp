#pragma once

#include <cstddef>

#include "umbral/rational.hpp"
#include "umbral/sequence.hpp"
#include "umbral/series.hpp"

namespace umbral {

// Second routes to the closed forms in transforms.hpp. None of these touch
// the integer-partition sums, so agreement is a genuine cross-check.

/// 1 + Σ a_n t^n / n!, order N.
TruncatedSeries egf_of(const MomentSequence& a);
/// 1 + Σ a_n t^n, order N.
TruncatedSeries ogf_of(const MomentSequence& a);
/// Drops the constant coefficient of an EGF and rescales by n!.
MomentSequence moments_of_egf(const TruncatedSeries& f);
/// Drops the constant coefficient of an OGF.
MomentSequence moments_of_ogf(const TruncatedSeries& f);

/// Classical cumulants as n! [t^n] log F(t).
MomentSequence classical_via_log(const MomentSequence& m);

/// Boolean cumulants as the coefficients of H = 1 - 1/M on OGFs.
MomentSequence boolean_via_reciprocal(const MomentSequence& m);

/// Moments from free cumulants by iterating M <- R(t M(t)) exactly N times
/// starting from M = 1.
MomentSequence moments_from_free_fixed_point(const MomentSequence& r);

/// Moments of -1.α from α + (-1.α) ≡ ε:
/// w_j = -Σ_{i=1..j} C(j,i) a_i w_{j-i}.
MomentSequence inverse_umbra(const MomentSequence& a);

/// Moments of the sum of k uncorrelated umbrae similar to α, by repeated
/// binomial convolution E[(X+Y)^j] = Σ C(j,i) x_i y_{j-i}.
MomentSequence sum_of_copies(const MomentSequence& a, unsigned k);

/// E[δ(δ - k.α)^{n-1}] for a nonnegative integer k, reading -k.α as k
/// uncorrelated copies of the inverse umbra -1.α.
Rational abel_copy_oracle(const MomentSequence& a, unsigned k, std::size_t n);

}  // namespace umbral
