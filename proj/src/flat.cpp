#include "regge3j/flat.hpp"

#include <functional>
#include <stdexcept>

namespace regge3j {

std::optional<FlatBetaSymbol> detect_flat_forbidden(const Symbol3j& s)
{
    const ParityClass pc = classify_parity(s);
    if (pc.family != ParityFamily::beta || pc.primed) {
        return std::nullopt;
    }
    for (std::size_t k = 0; k < 3; ++k) {
        if (abs(s.m(k)) > s.j(k)) {
            return std::nullopt;
        }
    }
    FlatBetaSymbol f{s, pc.kappa, pc.kappa % 3 + 1, (pc.kappa + 1) % 3 + 1};
    if (f.column(f.kappa).j() != f.column(f.lambda).j() + f.column(f.mu).j()) {
        return std::nullopt;
    }
    if (validate_super(s).code != Validity::parent) {
        return std::nullopt;
    }
    return f;
}

UnderlinedSpins underlined_spins(const FlatBetaSymbol& f)
{
    const HalfInt half = HalfInt::from_twice(1);
    return {f.column(f.lambda).j() - half, f.column(f.mu).j() - half, f.column(f.kappa).j() - HalfInt(1)};
}

SqrtRational prolong_value(const FlatBetaSymbol& f)
{
    const Column& k = f.column(f.kappa);
    const Column& l = f.column(f.lambda);
    const Column& u = f.column(f.mu);
    BigInt num = factorial(k.plus().to_integer() - 1) * factorial(k.minus().to_integer() - 1) *
                 factorial(l.j().twice() - 1) * factorial(u.j().twice() - 1);
    BigInt den = factorial(k.j().twice() - 2) * factorial(l.plus().floor()) * factorial(l.minus().floor()) *
                 factorial(u.plus().floor()) * factorial(u.minus().floor());
    const HalfInt exponent = l.plus() - u.minus();
    const SqrtRational magnitude = sqrt_of(Rational(num, den));
    return parity_sign(exponent.to_integer()) > 0 ? magnitude : -magnitude;
}

Symbol3j identify_alpha(const FlatBetaSymbol& f)
{
    const UnderlinedSpins J = underlined_spins(f);
    return Symbol3j({J.lambda, J.mu, J.kappa},
                    {f.column(f.lambda).m(), f.column(f.mu).m(), f.column(f.kappa).m()});
}

bool is_flat_triangle(const Symbol3j& s)
{
    for (std::size_t k = 0; k < 3; ++k) {
        if (s.j(k) == s.j((k + 1) % 3) + s.j((k + 2) % 3)) {
            return true;
        }
    }
    return false;
}

FlatSelectorProfile flat_selector_profile(const FlatBetaSymbol& f, PairConvention convention)
{
    const Symbol3j a = identify_alpha(f);
    FlatSelectorProfile p;
    p.counts = selector_profile(a, convention);
    for (std::size_t k = 0; k < 3; ++k) {
        p.plus[k] = a.plus(k);
        p.minus[k] = a.minus(k);
    }
    return p;
}

namespace {

constexpr std::size_t L = 0;
constexpr std::size_t U = 1;
constexpr std::size_t K = 2;

struct FlatClause {
    int label;
    const char* name;
    const char* condition;
    std::function<bool(const FlatSelectorProfile&)> holds;
};

int pm(const FlatSelectorProfile& p) { return p.counts.n0_pm; }
int nd(const FlatSelectorProfile& p) { return p.counts.n0_d; }

bool pair_with_kappa(const FlatSelectorProfile& p, std::size_t x)
{
    return p.plus[x] == p.minus[K] && p.minus[x] == p.plus[K];
}

bool same_sign_triple(const FlatSelectorProfile& p)
{
    return (p.plus[L] == p.plus[U] && p.plus[U] == p.minus[K]) ||
           (p.minus[L] == p.minus[U] && p.minus[U] == p.plus[K]);
}

const std::vector<FlatClause>& flat_clauses(ClauseTable table)
{
    static const std::vector<FlatClause> printed{
        {0, "0a", "N0pm = 1, N0d <= 2, Jl+ = Ju- or Jl- = Ju+",
         [](const auto& p) {
             return pm(p) == 1 && nd(p) <= 2 && (p.plus[L] == p.minus[U] || p.minus[L] == p.plus[U]);
         }},
        {0, "0b", "N0pm = 2, N0d in {0,2}, Jl+ = Ju- and Jl- = Ju+",
         [](const auto& p) {
             return pm(p) == 2 && (nd(p) == 0 || nd(p) == 2) && p.plus[L] == p.minus[U] &&
                    p.minus[L] == p.plus[U];
         }},
        {0, "0c", "N0pm = 2, N0d in {1,3}, Jl+ = Ju- = Jk+ or Jl- = Ju+ = Jk-",
         [](const auto& p) {
             return pm(p) == 2 && (nd(p) == 1 || nd(p) == 3) &&
                    ((p.plus[L] == p.minus[U] && p.minus[U] == p.plus[K]) ||
                     (p.minus[L] == p.plus[U] && p.plus[U] == p.minus[K]));
         }},
        {0, "0d", "N0pm in {3,4,6}", [](const auto& p) { return pm(p) == 3 || pm(p) == 4 || pm(p) == 6; }},
        {1, "1a", "N0pm = 0", [](const auto& p) { return pm(p) == 0; }},
        {1, "1b", "N0pm = 1, N0d <= 2, Jl+ = Jk- or Jl- = Jk+ or Ju+ = Jk- or Ju- = Jk+",
         [](const auto& p) {
             return pm(p) == 1 && nd(p) <= 2 &&
                    (p.plus[L] == p.minus[K] || p.minus[L] == p.plus[K] || p.plus[U] == p.minus[K] ||
                     p.minus[U] == p.plus[K]);
         }},
        {1, "1c", "N0pm = 2, N0d = 0, (Jl+, Jl-) or (Ju+, Ju-) equal to (Jk-, Jk+)",
         [](const auto& p) {
             return pm(p) == 2 && nd(p) == 0 && (pair_with_kappa(p, L) || pair_with_kappa(p, U));
         }},
        {1, "1d", "N0pm = 2, N0d = 1, Jl+ = Ju+ = Jk- or Jl- = Ju- = Jk+",
         [](const auto& p) { return pm(p) == 2 && nd(p) == 1 && same_sign_triple(p); }},
        {1, "1e", "N0pm = 2, N0d = 2, (Jl+, Jl-) or (Ju+, Ju-) equal to (Jk-, Jk+)",
         [](const auto& p) {
             return pm(p) == 2 && nd(p) == 2 && (pair_with_kappa(p, L) || pair_with_kappa(p, U));
         }},
        {1, "1f", "N0pm = 2, Jl+ = Ju+ = Jk- or Jl- = Ju- = Jk+",
         [](const auto& p) { return pm(p) == 2 && same_sign_triple(p); }},
    };
    static const std::vector<FlatClause> amended = [] {
        auto t = printed;
        t.insert(t.begin() + 3,
                 {0, "0c'", "N0pm = 2, N0d in {1,3}, Jl+ = Ju- = Jk- or Jl- = Ju+ = Jk+",
                  [](const FlatSelectorProfile& p) {
                      return pm(p) == 2 && (nd(p) == 1 || nd(p) == 3) &&
                             ((p.plus[L] == p.minus[U] && p.minus[U] == p.minus[K]) ||
                              (p.minus[L] == p.plus[U] && p.plus[U] == p.plus[K]));
                  }});
        return t;
    }();
    return table == ClauseTable::printed ? printed : amended;
}

} // namespace

std::vector<ClauseMatch> matching_flat_clauses(const FlatSelectorProfile& p, ClauseTable table)
{
    std::vector<ClauseMatch> out;
    for (const auto& c : flat_clauses(table)) {
        if (c.holds(p)) {
            out.push_back({{c.label}, c.name, c.condition});
        }
    }
    return out;
}

PartitionLabel classify_flat(const FlatBetaSymbol& f, ClauseTable table, PairConvention convention)
{
    const auto p = flat_selector_profile(f, convention);
    const auto matches = matching_flat_clauses(p, table);
    if (matches.empty()) {
        throw ClassificationError("unclassifiable flat profile for " + f.base.to_string() + " " +
                                  selectors_json(p.counts) + " under the " +
                                  std::string(clause_table_name(table)) + " clauses");
    }
    for (const auto& m : matches) {
        if (m.label != matches.front().label) {
            throw ClassificationError("overlapping flat clauses " + matches.front().name + " and " + m.name +
                                      " for " + f.base.to_string());
        }
    }
    return matches.front().label;
}

OrbitReport flat_orbit(const FlatBetaSymbol& f)
{
    OrbitReport full = orbit(identify_alpha(f));
    OrbitReport out;
    for (const auto& c : full.classes) {
        if (is_flat_triangle(c.canonical())) {
            out.classes.push_back(c);
        }
    }
    out.n_empty = static_cast<int>(out.classes.size()) - 1;
    return out;
}

} // namespace regge3j
