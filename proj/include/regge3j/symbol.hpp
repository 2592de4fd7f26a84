#pragma once

#include "regge3j/half_int.hpp"

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace regge3j {

enum class ColumnParity { even, odd };

/// One (j, m) column of a symbol. Requires j ≥ 0.
class Column {
public:
    Column(HalfInt j, HalfInt m);

    HalfInt j() const { return j_; }
    HalfInt m() const { return m_; }
    /// j⁺ = j + m
    HalfInt plus() const { return j_ + m_; }
    /// j⁻ = j − m
    HalfInt minus() const { return j_ - m_; }

    friend bool operator==(const Column&, const Column&) = default;

private:
    HalfInt j_;
    HalfInt m_;
};

/// Three columns with Σm = 0, the unit of every computation here. Columns are
/// indexed 0..2 in code; the mathematical labels are 1..3.
class Symbol3j {
public:
    /// Throws std::invalid_argument if the projections do not sum to zero.
    Symbol3j(const Column& c1, const Column& c2, const Column& c3);
    Symbol3j(const std::array<HalfInt, 3>& j, const std::array<HalfInt, 3>& m);

    /// From doubled values (2j1, 2j2, 2j3, 2m1, 2m2, 2m3).
    static Symbol3j from_twice(const std::array<std::int64_t, 6>& twice);

    const Column& operator[](std::size_t k) const { return columns_[k]; }
    std::span<const Column, 3> columns() const { return columns_; }

    HalfInt j(std::size_t k) const { return columns_[k].j(); }
    HalfInt m(std::size_t k) const { return columns_[k].m(); }
    HalfInt plus(std::size_t k) const { return columns_[k].plus(); }
    HalfInt minus(std::size_t k) const { return columns_[k].minus(); }
    std::array<HalfInt, 3> spins() const { return {j(0), j(1), j(2)}; }
    std::array<HalfInt, 3> projections() const { return {m(0), m(1), m(2)}; }
    HalfInt spin_sum() const { return j(0) + j(1) + j(2); }

    /// (2j1, 2j2, 2j3, 2m1, 2m2, 2m3); the lexicographic order on keys is
    /// the total order on symbols.
    std::array<std::int64_t, 6> key() const;

    /// Column k of the result is column perm[k] of this symbol.
    Symbol3j permuted(const std::array<int, 3>& perm) const;
    /// All projections negated.
    Symbol3j negated() const;

    friend bool operator==(const Symbol3j& a, const Symbol3j& b) { return a.key() == b.key(); }
    friend auto operator<=>(const Symbol3j& a, const Symbol3j& b) { return a.key() <=> b.key(); }

    /// "(j1 j2 j3 / m1 m2 m3)"
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Symbol3j& v) { return os << v.to_string(); }

private:
    std::array<Column, 3> columns_;
};

/// Parses the six-token grammar "j1 j2 j3 / m1 m2 m3" (seven tokens including
/// the slash). Throws std::invalid_argument on malformed input.
Symbol3j parse_symbol(std::span<const std::string> tokens);

ColumnParity column_parity(const Column& c);

enum class ParityFamily { alpha, beta, gamma };

/// α (all columns even), β_κ / β'_κ (column κ differs from the other two),
/// or γ (all odd). Unprimed β_κ has column κ even and the other two odd.
struct ParityClass {
    ParityFamily family = ParityFamily::alpha;
    int kappa = 0;          ///< 1..3 for β, 0 otherwise
    bool primed = false;

    /// "alpha", "beta1", "beta1p", ..., "gamma"
    std::string name() const;
    friend bool operator==(const ParityClass&, const ParityClass&) = default;
};

ParityClass classify_parity(const Symbol3j& s);

/// The so(3) doublet l with 2l = ⌊j+m⌋ + ⌊j−m⌋; either j or j − 1/2.
HalfInt recover_doublet(const Column& c);
std::array<HalfInt, 3> recover_doublets(const Symbol3j& s);

/// |a − b| ≤ c ≤ a + b (perimeter parity not checked).
bool triangle_holds(HalfInt a, HalfInt b, HalfInt c);

enum class Validity {
    valid,
    odd_column,             ///< classical: some column has 2(j+m) odd
    non_integer_perimeter,  ///< classical: j1+j2+j3 half-odd
    triangle,               ///< triangle (j1 j2 j3) fails
    projection,             ///< |m_k| exceeds j_k (classical) or l_k (super)
    parent,                 ///< super: the recovered so(3) parent is not a valid triangle
};

struct Verdict {
    Validity code = Validity::valid;
    std::string detail;

    bool ok() const { return code == Validity::valid; }
    explicit operator bool() const { return ok(); }
};

/// Short stable name, e.g. "invalid parent".
std::string_view validity_name(Validity v);

Verdict validate_classical(const Symbol3j& s);
Verdict validate_super(const Symbol3j& s);

/// Raised by evaluators handed a symbol outside their domain.
class InvalidSymbol : public std::domain_error {
public:
    InvalidSymbol(const Symbol3j& s, Verdict verdict);
    const Verdict& verdict() const { return verdict_; }

private:
    Verdict verdict_;
};

/// The so(3) parent (l1 l2 l3; m1 m2 m3). Requires validate_super(s).
Symbol3j parent_symbol(const Symbol3j& s);

} // namespace regge3j
