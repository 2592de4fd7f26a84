#pragma once

#include "regge3j/exact.hpp"
#include "regge3j/selectors.hpp"
#include "regge3j/symbol.hpp"

#include <array>
#include <string>
#include <vector>

namespace regge3j {

/// Δ^S(j1 j2 j3) = √[⌊j1+j2−j3⌋!⌊j1−j2+j3⌋!⌊−j1+j2+j3⌋! / ⌊j1+j2+j3+1/2⌋!].
/// Throws std::domain_error if the triangle fails.
SqrtRational super_delta(HalfInt j1, HalfInt j2, HalfInt j3);

/// 1 when Σj is an integer, otherwise |Σ_k (−1)^{2(j_k−m_k)} j_k| + 1/2.
BigInt i_factor(const Symbol3j& s);

/// The factor relating a super symbol to its so(3) parent. Throws
/// std::domain_error unless each l_k ∈ {j_k, j_k − 1/2} and both triangles
/// hold (l with integer perimeter).
SqrtRational scalar_factor(const std::array<HalfInt, 3>& j, const std::array<HalfInt, 3>& l);

/// Super 3-j as scalar factor × parent 3-j. Throws InvalidSymbol unless
/// validate_super(s); a forbidden flat β symbol reports Validity::parent.
SqrtRational compute_super_3j(const Symbol3j& s);

/// Choice of j⁺ or j⁻ in the phase monomials of the self-contained formula:
/// the triple product, and the slot paired with m2, m3, m1 respectively.
struct PhaseVariant {
    bool product_plus = true;
    std::array<bool, 3> slot_plus{true, true, true};

    std::string name() const;  ///< e.g. "+/+++"
    friend bool operator==(const PhaseVariant&, const PhaseVariant&) = default;
};

/// The variant matching the product path on every symbol checked.
inline constexpr PhaseVariant kResolvedPhaseVariant{};

std::vector<PhaseVariant> all_phase_variants();

/// Self-contained evaluation: Δ^S · phase · I · √(Π⌊j±⌋!) · z-sum over
/// integer-part arguments. Same domain as compute_super_3j.
SqrtRational compute_super_3j_direct(const Symbol3j& s, const PhaseVariant& variant = kResolvedPhaseVariant);

/// The sign relating a β symbol to its image under the matching map:
/// compute_super_3j(apply_regge(s, κ)) = beta_phase(s, κ) · compute_super_3j(s).
/// Throws std::domain_error unless s has β parity with index κ.
int beta_phase(const Symbol3j& s, int kappa);

/// α/γ: the classical clause classifier. β: classify_super_beta.
PartitionLabel classify_super_partition(const Symbol3j& s, ClauseTable table = ClauseTable::printed);

} // namespace regge3j
