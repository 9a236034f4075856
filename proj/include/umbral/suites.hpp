#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "umbral/lattice.hpp"
#include "umbral/rational.hpp"

namespace umbral {

enum class Suite { Lattice, Abel, Volume, Transport, Parametrization };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// Largest n each suite accepts.
unsigned suite_max_n(Suite s);

/// Runs every identity of the suite at degrees 1..n; one report per
/// identity. Throws std::out_of_range when n is 0 or above suite_max_n.
///   Lattice:         T1, T2, T3, COMMUTATIVITY, MOBIUS, FOURIER
///   Abel:            partition sum = f^{-g} oracle = copy oracle, g in
///                    {0..4} and g_n = n
///   Volume:          |park(k)|, brute force vs shape evaluation, the
///                    Catalan identity, moments_via_volume
///   Transport:       L(a ⊞ b) = L(a) ⊎ L(b)
///   Parametrization: the three recursions a = κ(κ + α)^{n-1} style and
///                    their Abel-cumulant counterparts
std::vector<VerificationReport> run_suite(Suite s, unsigned n, std::uint64_t seed = 1);

/// n! V_n(1, ..., 1) summed over park(n).
Rational volume_at_ones(unsigned n);

}  // namespace umbral
