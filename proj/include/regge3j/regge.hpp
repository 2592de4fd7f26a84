#pragma once

#include "regge3j/symbol.hpp"

#include <array>
#include <optional>
#include <vector>

namespace regge3j {

/// The 3×3 array encoding a symbol: row 0 is (−j1+j2+j3, j1−j2+j3,
/// j1+j2−j3), row 1 is (j_k − m_k), row 2 is (j_k + m_k). Entries are
/// nonnegative integers for classical symbols; γ-parity super symbols give
/// half-odd entries.
struct ReggeArray {
    std::array<std::array<HalfInt, 3>, 3> rows{};

    HalfInt at(std::size_t row, std::size_t col) const { return rows[row][col]; }
    friend bool operator==(const ReggeArray&, const ReggeArray&) = default;
};

ReggeArray regge_array(const Symbol3j& s);

/// The five Regge maps, indexed 1..5. Maps 1..3 fix column 1..3
/// respectively; maps 4 and 5 rebuild every column from half-sums of j⁻ and
/// j⁺. All five preserve classical values without any phase.
inline constexpr std::array<int, 5> all_regge_maps{1, 2, 3, 4, 5};

/// The image of s under map `index` (1..5), or nullopt when a half-sum is
/// not a half-integer or a resulting spin is negative. That only happens
/// for super symbols applied formally (β parity under non-matching maps).
std::optional<Symbol3j> try_apply_regge(const Symbol3j& s, int index);

/// As try_apply_regge, but throws std::domain_error when the image does not
/// exist and std::out_of_range for an index outside 1..5.
Symbol3j apply_regge(const Symbol3j& s, int index);

/// The 12 images under column permutations and m-negation, possibly with
/// repeats for degenerate symbols.
std::vector<Symbol3j> classical_images(const Symbol3j& s);

/// A 12-element classical symmetry class, held by its lexicographically
/// minimal member (see Symbol3j::key).
class SetClass {
public:
    explicit SetClass(const Symbol3j& any_member);

    const Symbol3j& canonical() const { return canonical_; }

    friend bool operator==(const SetClass& a, const SetClass& b) { return a.canonical_ == b.canonical_; }
    friend auto operator<=>(const SetClass& a, const SetClass& b) { return a.canonical_ <=> b.canonical_; }

private:
    Symbol3j canonical_;
};

SetClass classical_set(const Symbol3j& s);

/// Distinct classes reached by Regge closure, sorted; n_empty = size − 1.
struct OrbitReport {
    std::vector<SetClass> classes;
    int n_empty = 0;
};

/// Closure of classical_set(s) under all five maps applied to every member
/// of every class reached.
OrbitReport orbit(const Symbol3j& s);

/// Closure where each member is moved only by the map matching its own β
/// index. Throws std::domain_error unless s has β parity.
OrbitReport beta_orbit(const Symbol3j& s);

} // namespace regge3j
