#include "regge3j/symbol.hpp"

namespace regge3j {

Column::Column(HalfInt j, HalfInt m) : j_(j), m_(m)
{
    if (j < HalfInt(0)) {
        throw std::invalid_argument("negative spin " + j.to_string());
    }
}

Symbol3j::Symbol3j(const Column& c1, const Column& c2, const Column& c3) : columns_{c1, c2, c3}
{
    if (c1.m() + c2.m() + c3.m() != HalfInt(0)) {
        throw std::invalid_argument("projections do not sum to zero in " + to_string());
    }
}

Symbol3j::Symbol3j(const std::array<HalfInt, 3>& j, const std::array<HalfInt, 3>& m)
    : Symbol3j(Column(j[0], m[0]), Column(j[1], m[1]), Column(j[2], m[2]))
{
}

Symbol3j Symbol3j::from_twice(const std::array<std::int64_t, 6>& t)
{
    auto h = [](std::int64_t v) { return HalfInt::from_twice(v); };
    return Symbol3j({h(t[0]), h(t[1]), h(t[2])}, {h(t[3]), h(t[4]), h(t[5])});
}

std::array<std::int64_t, 6> Symbol3j::key() const
{
    return {j(0).twice(), j(1).twice(), j(2).twice(), m(0).twice(), m(1).twice(), m(2).twice()};
}

Symbol3j Symbol3j::permuted(const std::array<int, 3>& perm) const
{
    return Symbol3j(columns_[perm[0]], columns_[perm[1]], columns_[perm[2]]);
}

Symbol3j Symbol3j::negated() const
{
    return Symbol3j({j(0), j(1), j(2)}, {-m(0), -m(1), -m(2)});
}

std::string Symbol3j::to_string() const
{
    std::string out = "(";
    for (std::size_t k = 0; k < 3; ++k) {
        out += columns_[k].j().to_string() + (k < 2 ? " " : " / ");
    }
    for (std::size_t k = 0; k < 3; ++k) {
        out += columns_[k].m().to_string() + (k < 2 ? " " : ")");
    }
    return out;
}

Symbol3j parse_symbol(std::span<const std::string> tokens)
{
    if (tokens.size() != 7 || tokens[3] != "/") {
        throw std::invalid_argument("expected a symbol as 'j1 j2 j3 / m1 m2 m3'");
    }
    std::array<HalfInt, 3> j;
    std::array<HalfInt, 3> m;
    for (std::size_t k = 0; k < 3; ++k) {
        j[k] = HalfInt::parse(tokens[k]);
        m[k] = HalfInt::parse(tokens[k + 4]);
    }
    return Symbol3j(j, m);
}

ColumnParity column_parity(const Column& c)
{
    return c.plus().is_integer() ? ColumnParity::even : ColumnParity::odd;
}

std::string ParityClass::name() const
{
    switch (family) {
    case ParityFamily::alpha:
        return "alpha";
    case ParityFamily::gamma:
        return "gamma";
    case ParityFamily::beta:
        break;
    }
    return "beta" + std::to_string(kappa) + (primed ? "p" : "");
}

ParityClass classify_parity(const Symbol3j& s)
{
    std::array<bool, 3> odd{};
    int odd_count = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        odd[k] = column_parity(s[k]) == ColumnParity::odd;
        odd_count += odd[k] ? 1 : 0;
    }
    if (odd_count == 0) {
        return {ParityFamily::alpha, 0, false};
    }
    if (odd_count == 3) {
        return {ParityFamily::gamma, 0, false};
    }
    // Two odd: κ is the even column (β_κ). One odd: κ is the odd column (β'_κ).
    bool primed = odd_count == 1;
    for (int k = 0; k < 3; ++k) {
        if (odd[static_cast<std::size_t>(k)] == primed) {
            return {ParityFamily::beta, k + 1, primed};
        }
    }
    return {}; // unreachable
}

HalfInt recover_doublet(const Column& c)
{
    return HalfInt::from_twice(c.plus().floor() + c.minus().floor());
}

std::array<HalfInt, 3> recover_doublets(const Symbol3j& s)
{
    return {recover_doublet(s[0]), recover_doublet(s[1]), recover_doublet(s[2])};
}

bool triangle_holds(HalfInt a, HalfInt b, HalfInt c)
{
    return abs(a - b) <= c && c <= a + b;
}

std::string_view validity_name(Validity v)
{
    switch (v) {
    case Validity::valid:
        return "valid";
    case Validity::odd_column:
        return "odd column";
    case Validity::non_integer_perimeter:
        return "non-integer perimeter";
    case Validity::triangle:
        return "invalid j-triangle";
    case Validity::projection:
        return "invalid projection";
    case Validity::parent:
        return "invalid parent";
    }
    return "unknown";
}

Verdict validate_classical(const Symbol3j& s)
{
    for (std::size_t k = 0; k < 3; ++k) {
        if (column_parity(s[k]) == ColumnParity::odd) {
            return {Validity::odd_column, "column " + std::to_string(k + 1) + " has 2(j+m) odd"};
        }
    }
    if (!s.spin_sum().is_integer()) {
        return {Validity::non_integer_perimeter, "j1+j2+j3 = " + s.spin_sum().to_string()};
    }
    if (!triangle_holds(s.j(0), s.j(1), s.j(2))) {
        return {Validity::triangle, "triangle condition fails"};
    }
    for (std::size_t k = 0; k < 3; ++k) {
        if (abs(s.m(k)) > s.j(k)) {
            return {Validity::projection, "|m" + std::to_string(k + 1) + "| > j" + std::to_string(k + 1)};
        }
    }
    return {};
}

Verdict validate_super(const Symbol3j& s)
{
    if (!triangle_holds(s.j(0), s.j(1), s.j(2))) {
        return {Validity::triangle, "triangle (j1 j2 j3) fails"};
    }
    auto l = recover_doublets(s);
    if (!triangle_holds(l[0], l[1], l[2]) || !(l[0] + l[1] + l[2]).is_integer()) {
        return {Validity::parent, "no parent: (" + l[0].to_string() + " " + l[1].to_string() + " " +
                                      l[2].to_string() + ") is not an so(3) triangle"};
    }
    for (std::size_t k = 0; k < 3; ++k) {
        if (abs(s.m(k)) > l[k]) {
            return {Validity::projection,
                    "|m" + std::to_string(k + 1) + "| > l" + std::to_string(k + 1) + " = " + l[k].to_string()};
        }
    }
    return {};
}

InvalidSymbol::InvalidSymbol(const Symbol3j& s, Verdict verdict)
    : std::domain_error(s.to_string() + ": " + std::string(validity_name(verdict.code)) +
                        (verdict.detail.empty() ? "" : " (" + verdict.detail + ")")),
      verdict_(std::move(verdict))
{
}

Symbol3j parent_symbol(const Symbol3j& s)
{
    if (auto v = validate_super(s); !v) {
        throw InvalidSymbol(s, v);
    }
    return Symbol3j(recover_doublets(s), s.projections());
}

} // namespace regge3j
