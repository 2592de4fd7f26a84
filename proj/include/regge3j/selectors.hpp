#pragma once

#include "regge3j/symbol.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regge3j {

/// How "i ≠ k" difference sets are counted: each unordered pair once, or
/// each ordered pair (so every coincidence counts twice).
enum class PairConvention { unordered, ordered };

/// The convention under which the selector clauses reproduce the orbit
/// oracle; fixed after an exhaustive calibration (see calibrate in census).
inline constexpr PairConvention kCalibratedPairConvention = PairConvention::unordered;

std::string_view convention_name(PairConvention c);

/// Coincidences j_a⁺ = j_b⁺ and j_a⁻ = j_b⁻ on one cyclic column pair.
struct PairCoincidence {
    bool plus_equal = false;
    bool minus_equal = false;
    friend bool operator==(const PairCoincidence&, const PairCoincidence&) = default;
};

/// Zero counts over the j± parameters of a symbol.
struct SelectorProfile {
    int n0_d = 0;   ///< same-sign coincidences j_i^± = j_k^±
    int n0_pm = 0;  ///< cross-sign coincidences j_i^± = j_k^∓, i ≠ k
    int n0_m = 0;   ///< zero projections (0, 1 or 3)
    int n0_R = 0;   ///< zeros among row 0 − row 1 and row 0 − row 2 of the Regge array
    /// Column pairs (1,2), (2,3), (3,1).
    std::array<PairCoincidence, 3> equal_pairs{};

    friend bool operator==(const SelectorProfile&, const SelectorProfile&) = default;
};

SelectorProfile selector_profile(const Symbol3j& s,
                                 PairConvention convention = kCalibratedPairConvention);

/// Compact JSON object {"n0_d":..,"n0_pm":..,"n0_m":..,"n0_R":..}.
std::string selectors_json(const SelectorProfile& p);

struct PartitionLabel {
    int n = 0;
    friend bool operator==(const PartitionLabel&, const PartitionLabel&) = default;
    friend auto operator<=>(const PartitionLabel&, const PartitionLabel&) = default;
};

/// Which clause list to evaluate. `printed` is the published list; `amended`
/// widens the one clause found to leave profiles unmatched.
enum class ClauseTable { printed, amended };

std::string_view clause_table_name(ClauseTable t);

struct ClauseMatch {
    PartitionLabel label;
    std::string name;       ///< e.g. "4a"
    std::string condition;  ///< human-readable predicate
};

/// All clauses whose condition holds, in table order.
std::vector<ClauseMatch> matching_clauses(const SelectorProfile& p, ClauseTable table = ClauseTable::printed);

/// Raised when no clause matches, or clauses for two different labels match.
class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The unique label whose clauses match the profile of s. Valid for classical
/// symbols and for α/γ super symbols.
PartitionLabel classify(const Symbol3j& s, ClauseTable table = ClauseTable::printed,
                        PairConvention convention = kCalibratedPairConvention);
PartitionLabel classify_profile(const SelectorProfile& p, ClauseTable table = ClauseTable::printed);

/// β super symbols: label 0 when 1 ≤ N₀± ≤ 2, label 1 when N₀± = 0.
PartitionLabel classify_super_beta(const Symbol3j& s, PairConvention convention = kCalibratedPairConvention);

} // namespace regge3j
