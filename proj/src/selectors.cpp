#include "regge3j/selectors.hpp"

#include "regge3j/regge.hpp"

#include <functional>

namespace regge3j {

std::string_view convention_name(PairConvention c)
{
    return c == PairConvention::unordered ? "unordered" : "ordered";
}

std::string_view clause_table_name(ClauseTable t)
{
    return t == ClauseTable::printed ? "printed" : "amended";
}

SelectorProfile selector_profile(const Symbol3j& s, PairConvention convention)
{
    SelectorProfile p;
    const int weight = convention == PairConvention::ordered ? 2 : 1;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t k = i + 1; k < 3; ++k) {
            p.n0_d += weight * ((s.plus(i) == s.plus(k)) + (s.minus(i) == s.minus(k)));
            p.n0_pm += weight * ((s.plus(i) == s.minus(k)) + (s.minus(i) == s.plus(k)));
        }
        p.n0_m += s.m(i) == HalfInt(0);
    }
    const ReggeArray a = regge_array(s);
    for (std::size_t row = 1; row < 3; ++row) {
        for (std::size_t k = 0; k < 3; ++k) {
            p.n0_R += a.at(0, k) == a.at(row, k);
        }
    }
    for (std::size_t c = 0; c < 3; ++c) {
        const std::size_t d = (c + 1) % 3;
        p.equal_pairs[c] = {s.plus(c) == s.plus(d), s.minus(c) == s.minus(d)};
    }
    return p;
}

std::string selectors_json(const SelectorProfile& p)
{
    return "{\"n0_d\":" + std::to_string(p.n0_d) + ",\"n0_pm\":" + std::to_string(p.n0_pm) +
           ",\"n0_m\":" + std::to_string(p.n0_m) + ",\"n0_R\":" + std::to_string(p.n0_R) + "}";
}

namespace {

struct Clause {
    int label;
    const char* name;
    const char* condition;
    std::function<bool(const SelectorProfile&)> holds;
};

bool in(int v, int lo, int hi) { return lo <= v && v <= hi; }

bool some_pair(const SelectorProfile& p, bool plus, bool minus)
{
    for (const auto& e : p.equal_pairs) {
        if (e.plus_equal == plus && e.minus_equal == minus) {
            return true;
        }
    }
    return false;
}

bool quiet(const SelectorProfile& p, int n0_m) { return p.n0_pm == 0 && p.n0_m == n0_m; }

const std::vector<Clause>& clauses(ClauseTable table)
{
    static const std::vector<Clause> printed{
        {0, "0", "N0pm in {3,4,6}", [](const auto& p) { return in(p.n0_pm, 3, 4) || p.n0_pm == 6; }},
        {1, "1", "N0pm = 2", [](const auto& p) { return p.n0_pm == 2; }},
        {2, "2", "N0pm = 1", [](const auto& p) { return p.n0_pm == 1; }},
        {4, "4a", "N0pm = 0, N0m = 0, N0d = 2, N0R = 0, j+ and j- equal on a cyclic pair",
         [](const auto& p) { return quiet(p, 0) && p.n0_d == 2 && p.n0_R == 0 && some_pair(p, true, true); }},
        {4, "4b", "N0pm = 0, N0m = 0, N0d = 0, N0R = 3",
         [](const auto& p) { return quiet(p, 0) && p.n0_d == 0 && p.n0_R == 3; }},
        {4, "4c", "N0pm = 0, N0m = 0, N0d = 4, N0R = 0",
         [](const auto& p) { return quiet(p, 0) && p.n0_d == 4 && p.n0_R == 0; }},
        {4, "4d", "N0pm = 0, N0m = 1, N0d = 0, N0R = 4",
         [](const auto& p) { return quiet(p, 1) && p.n0_d == 0 && p.n0_R == 4; }},
        {4, "4e", "N0pm = 0, N0m = 3, N0d = 0, N0R in {0,2}",
         [](const auto& p) { return quiet(p, 3) && p.n0_d == 0 && (p.n0_R == 0 || p.n0_R == 2); }},
        {5, "5a", "N0pm = 0, N0m = 0, N0d = 2, N0R = 0, j+ equal and j- unequal on a cyclic pair",
         [](const auto& p) { return quiet(p, 0) && p.n0_d == 2 && p.n0_R == 0 && some_pair(p, true, false); }},
        {5, "5b", "N0pm = 0, N0m = 0, N0d in [0,1], N0R in [0,2]",
         [](const auto& p) { return quiet(p, 0) && in(p.n0_d, 0, 1) && in(p.n0_R, 0, 2); }},
        {5, "5c", "N0pm = 0, N0m = 0, N0d = 3, N0R = 0",
         [](const auto& p) { return quiet(p, 0) && p.n0_d == 3 && p.n0_R == 0; }},
        {5, "5d", "N0pm = 0, N0m = 1, N0d = 0, N0R in [0,2]",
         [](const auto& p) { return quiet(p, 1) && p.n0_d == 0 && in(p.n0_R, 0, 2); }},
        {5, "5e", "N0pm = 0, N0m = 1, N0d = 1, N0R in [0,1]",
         [](const auto& p) { return quiet(p, 1) && p.n0_d == 1 && in(p.n0_R, 0, 1); }},
    };
    static const std::vector<Clause> amended = [] {
        auto t = printed;
        for (auto& c : t) {
            if (std::string_view(c.name) == "5a") {
                c.condition = "N0pm = 0, N0m = 0, N0d = 2, N0R in [0,1], j+ equal and j- unequal on a cyclic pair";
                c.holds = [](const SelectorProfile& p) {
                    return quiet(p, 0) && p.n0_d == 2 && in(p.n0_R, 0, 1) && some_pair(p, true, false);
                };
            }
        }
        return t;
    }();
    return table == ClauseTable::printed ? printed : amended;
}

} // namespace

std::vector<ClauseMatch> matching_clauses(const SelectorProfile& p, ClauseTable table)
{
    std::vector<ClauseMatch> out;
    for (const auto& c : clauses(table)) {
        if (c.holds(p)) {
            out.push_back({{c.label}, c.name, c.condition});
        }
    }
    return out;
}

namespace {

std::string describe(const SelectorProfile& p) { return selectors_json(p); }

} // namespace

PartitionLabel classify_profile(const SelectorProfile& p, ClauseTable table)
{
    const auto matches = matching_clauses(p, table);
    if (matches.empty()) {
        throw ClassificationError("unclassifiable profile " + describe(p) + " under the " +
                                  std::string(clause_table_name(table)) + " clauses");
    }
    for (const auto& m : matches) {
        if (m.label != matches.front().label) {
            throw ClassificationError("overlapping clauses " + matches.front().name + " and " + m.name +
                                      " for profile " + describe(p));
        }
    }
    return matches.front().label;
}

PartitionLabel classify(const Symbol3j& s, ClauseTable table, PairConvention convention)
{
    return classify_profile(selector_profile(s, convention), table);
}

PartitionLabel classify_super_beta(const Symbol3j& s, PairConvention convention)
{
    const auto p = selector_profile(s, convention);
    if (p.n0_pm == 0) {
        return {1};
    }
    if (p.n0_pm <= 2) {
        return {0};
    }
    throw ClassificationError("beta symbol " + s.to_string() + " has N0pm = " + std::to_string(p.n0_pm));
}

} // namespace regge3j
