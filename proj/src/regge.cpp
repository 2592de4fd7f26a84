#include "regge3j/regge.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace regge3j {

ReggeArray regge_array(const Symbol3j& s)
{
    ReggeArray a;
    a.rows[0] = {s.j(1) + s.j(2) - s.j(0), s.j(0) + s.j(2) - s.j(1), s.j(0) + s.j(1) - s.j(2)};
    for (std::size_t k = 0; k < 3; ++k) {
        a.rows[1][k] = s.minus(k);
        a.rows[2][k] = s.plus(k);
    }
    return a;
}

namespace {

std::optional<HalfInt> half_sum(HalfInt a, HalfInt b) { return halve(a + b); }
std::optional<HalfInt> half_diff(HalfInt a, HalfInt b) { return halve(a - b); }

std::optional<Symbol3j> build(const std::array<std::optional<HalfInt>, 6>& parts)
{
    std::array<HalfInt, 3> j;
    std::array<HalfInt, 3> m;
    for (std::size_t k = 0; k < 3; ++k) {
        if (!parts[k] || !parts[k + 3] || *parts[k] < HalfInt(0)) {
            return std::nullopt;
        }
        j[k] = *parts[k];
        m[k] = *parts[k + 3];
    }
    return Symbol3j(j, m);
}

} // namespace

std::optional<Symbol3j> try_apply_regge(const Symbol3j& s, int index)
{
    auto p = [&](std::size_t k) { return s.plus(k); };
    auto n = [&](std::size_t k) { return s.minus(k); };
    switch (index) {
    case 1:
        return build({s.j(0), half_sum(n(2), n(1)), half_sum(p(2), p(1)), s.j(1) - s.j(2),
                      half_diff(n(2), n(1)), half_diff(p(2), p(1))});
    case 2:
        return build({half_sum(n(0), n(2)), s.j(1), half_sum(p(0), p(2)), half_diff(n(2), n(0)),
                      s.j(0) - s.j(2), half_diff(p(2), p(0))});
    case 3:
        return build({half_sum(n(1), n(0)), half_sum(p(1), p(0)), s.j(2), half_diff(n(1), n(0)),
                      half_diff(p(1), p(0)), s.j(0) - s.j(1)});
    case 4: {
        auto a = half_sum(n(2), n(1));
        auto b = half_sum(n(0), n(2));
        auto c = half_sum(n(1), n(0));
        if (!a || !b || !c) {
            return std::nullopt;
        }
        return build({a, b, c, *a - p(0), *b - p(1), *c - p(2)});
    }
    case 5: {
        auto a = half_sum(p(2), p(1));
        auto b = half_sum(p(0), p(2));
        auto c = half_sum(p(1), p(0));
        if (!a || !b || !c) {
            return std::nullopt;
        }
        return build({a, b, c, n(0) - *a, n(1) - *b, n(2) - *c});
    }
    default:
        throw std::out_of_range("Regge map index must be 1..5, got " + std::to_string(index));
    }
}

Symbol3j apply_regge(const Symbol3j& s, int index)
{
    if (auto r = try_apply_regge(s, index)) {
        return *r;
    }
    throw std::domain_error("Regge map " + std::to_string(index) + " has no half-integer image for " +
                            s.to_string());
}

std::vector<Symbol3j> classical_images(const Symbol3j& s)
{
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
    std::vector<Symbol3j> out;
    out.reserve(12);
    const Symbol3j neg = s.negated();
    for (const auto& perm : perms) {
        out.push_back(s.permuted(perm));
        out.push_back(neg.permuted(perm));
    }
    return out;
}

namespace {

Symbol3j minimal_image(const Symbol3j& s)
{
    auto images = classical_images(s);
    return *std::min_element(images.begin(), images.end());
}

template <typename Step>
OrbitReport closure(const Symbol3j& s, Step step)
{
    std::set<SetClass> seen{SetClass(s)};
    std::vector<SetClass> queue{SetClass(s)};
    while (!queue.empty()) {
        SetClass current = queue.back();
        queue.pop_back();
        for (const auto& member : classical_images(current.canonical())) {
            step(member, [&](const Symbol3j& image) {
                SetClass c(image);
                if (seen.insert(c).second) {
                    queue.push_back(c);
                }
            });
        }
    }
    OrbitReport report;
    report.classes.assign(seen.begin(), seen.end());
    report.n_empty = static_cast<int>(report.classes.size()) - 1;
    return report;
}

} // namespace

SetClass::SetClass(const Symbol3j& any_member) : canonical_(minimal_image(any_member)) {}

SetClass classical_set(const Symbol3j& s) { return SetClass(s); }

OrbitReport orbit(const Symbol3j& s)
{
    return closure(s, [](const Symbol3j& member, auto&& emit) {
        for (int k : all_regge_maps) {
            if (auto image = try_apply_regge(member, k)) {
                emit(*image);
            }
        }
    });
}

OrbitReport beta_orbit(const Symbol3j& s)
{
    if (classify_parity(s).family != ParityFamily::beta) {
        throw std::domain_error("beta_orbit: " + s.to_string() + " does not have beta parity");
    }
    return closure(s, [](const Symbol3j& member, auto&& emit) {
        if (auto image = try_apply_regge(member, classify_parity(member).kappa)) {
            emit(*image);
        }
    });
}

} // namespace regge3j
