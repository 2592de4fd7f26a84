#pragma once

#include "regge3j/exact.hpp"
#include "regge3j/regge.hpp"
#include "regge3j/selectors.hpp"
#include "regge3j/symbol.hpp"

#include <array>
#include <optional>
#include <vector>

namespace regge3j {

/// A β_κ super symbol on a flat triangle j_κ = j_λ + j_μ, (κ, λ, μ) cyclic,
/// whose so(3) parent does not exist. Column indices are 1-based.
struct FlatBetaSymbol {
    Symbol3j base;
    int kappa = 0;
    int lambda = 0;
    int mu = 0;

    const Column& column(int index) const { return base[static_cast<std::size_t>(index - 1)]; }
};

/// Returns the wrapper iff s has unprimed β_κ parity, |m_k| ≤ j_k for every
/// column, j_κ = j_λ + j_μ, and validate_super(s) reports an invalid parent.
std::optional<FlatBetaSymbol> detect_flat_forbidden(const Symbol3j& s);

/// Shifted spins J_λ = j_λ − 1/2, J_μ = j_μ − 1/2, J_κ = j_κ − 1.
struct UnderlinedSpins {
    HalfInt lambda;
    HalfInt mu;
    HalfInt kappa;
};

UnderlinedSpins underlined_spins(const FlatBetaSymbol& f);

/// The value assigned to a forbidden flat symbol by analytic prolongation.
SqrtRational prolong_value(const FlatBetaSymbol& f);

/// The α symbol (J_λ J_μ J_κ; m_λ m_μ m_κ), columns in (λ, μ, κ) order.
Symbol3j identify_alpha(const FlatBetaSymbol& f);

/// j_a = j_b + j_c for some assignment of columns.
bool is_flat_triangle(const Symbol3j& s);

struct FlatSelectorProfile {
    SelectorProfile counts;        ///< zero counts over the shifted symbol
    std::array<HalfInt, 3> plus;   ///< J⁺ in (λ, μ, κ) order
    std::array<HalfInt, 3> minus;  ///< J⁻ in (λ, μ, κ) order
};

FlatSelectorProfile flat_selector_profile(const FlatBetaSymbol& f,
                                          PairConvention convention = kCalibratedPairConvention);

std::vector<ClauseMatch> matching_flat_clauses(const FlatSelectorProfile& p,
                                               ClauseTable table = ClauseTable::printed);

/// Label 0 or 1; throws ClassificationError when no clause or clauses of
/// both labels match.
PartitionLabel classify_flat(const FlatBetaSymbol& f, ClauseTable table = ClauseTable::printed,
                             PairConvention convention = kCalibratedPairConvention);

/// The Regge orbit of identify_alpha(f), restricted to flat-triangle classes.
OrbitReport flat_orbit(const FlatBetaSymbol& f);

} // namespace regge3j
