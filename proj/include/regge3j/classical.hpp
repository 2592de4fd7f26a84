#pragma once

#include "regge3j/exact.hpp"
#include "regge3j/symbol.hpp"

#include <array>
#include <cstdint>

namespace regge3j {

/// Δ(abc) = √[(a+b−c)!(a−b+c)!(−a+b+c)!/(a+b+c+1)!]. Throws
/// std::domain_error unless (a, b, c) is a triangle with integer perimeter.
SqrtRational triangle_delta(HalfInt a, HalfInt b, HalfInt c);

/// The alternating sum Σ_z (−1)^z / [z!(z−α)!(z−β)!(γ−z)!(j1⁻−z)!(j2⁺−z)!]
/// with α = j2⁺−j3⁻, β = j1⁻−j3⁺, γ = j1⁺+j2⁺−j3⁻, taking the six
/// nonnegative integers (j1⁺, j1⁻, j2⁺, j2⁻, j3⁺, j3⁻). An empty range gives 0.
Rational racah_sum(const std::array<std::int64_t, 6>& pm);

/// The factor v with 3j = Δ·v. Requires validate_classical(s).
SqrtRational v_factor(const Symbol3j& s);

/// Exact Wigner 3-j. Throws InvalidSymbol unless validate_classical(s).
SqrtRational compute_3j(const Symbol3j& s);

} // namespace regge3j
