#include "regge3j/super.hpp"

#include "regge3j/classical.hpp"

#include <stdexcept>

namespace regge3j {

namespace {

BigInt floor_factorial(HalfInt x) { return factorial(x.floor()); }

} // namespace

SqrtRational super_delta(HalfInt j1, HalfInt j2, HalfInt j3)
{
    if (!triangle_holds(j1, j2, j3)) {
        throw std::domain_error("super_delta: (" + j1.to_string() + " " + j2.to_string() + " " +
                                j3.to_string() + ") is not a triangle");
    }
    BigInt num = floor_factorial(j1 + j2 - j3) * floor_factorial(j1 - j2 + j3) * floor_factorial(j2 + j3 - j1);
    return sqrt_of(Rational(num, floor_factorial(j1 + j2 + j3 + HalfInt::from_twice(1))));
}

namespace {

// Σ_k (−1)^{2(j_k−m_k)} j_k
HalfInt signed_spin_sum(const Symbol3j& s)
{
    HalfInt t;
    for (std::size_t k = 0; k < 3; ++k) {
        t += s.minus(k).is_integer() ? s.j(k) : -s.j(k);
    }
    return t;
}

} // namespace

BigInt i_factor(const Symbol3j& s)
{
    if (s.spin_sum().is_integer()) {
        return 1;
    }
    return BigInt(static_cast<long>((abs(signed_spin_sum(s)) + HalfInt::from_twice(1)).to_integer()));
}

SqrtRational scalar_factor(const std::array<HalfInt, 3>& j, const std::array<HalfInt, 3>& l)
{
    for (std::size_t k = 0; k < 3; ++k) {
        if (l[k] != j[k] && l[k] != j[k] - HalfInt::from_twice(1)) {
            throw std::domain_error("scalar_factor: l" + std::to_string(k + 1) + " = " + l[k].to_string() +
                                    " is not a doublet of j = " + j[k].to_string());
        }
    }
    // Exponent in doubled units: 2Σj + 8Π(j−l) + 4Σ l_k(j_{k−1} + l_{k−1}).
    auto t = [](HalfInt h) { return BigInt(static_cast<long>(h.twice())); };
    BigInt e = t(j[0]) + t(j[1]) + t(j[2]);
    e += t(j[0] - l[0]) * t(j[1] - l[1]) * t(j[2] - l[2]);
    e += t(l[0]) * t(j[2] + l[2]) + t(l[1]) * t(j[0] + l[0]) + t(l[2]) * t(j[1] + l[1]);
    const SqrtRational magnitude_j = super_delta(j[0], j[1], j[2]);
    const SqrtRational magnitude_l = triangle_delta(l[0], l[1], l[2]);
    const SqrtRational ratio = (j[0] + j[1] + j[2]).is_integer() ? magnitude_j / magnitude_l
                                                                   : magnitude_l / magnitude_j;
    return parity_sign(e) > 0 ? ratio : -ratio;
}

SqrtRational compute_super_3j(const Symbol3j& s)
{
    if (auto v = validate_super(s); !v) {
        throw InvalidSymbol(s, v);
    }
    const Symbol3j parent = parent_symbol(s);
    return scalar_factor(s.spins(), parent.spins()) * compute_3j(parent);
}

std::string PhaseVariant::name() const
{
    std::string out(1, product_plus ? '+' : '-');
    out += '/';
    for (bool b : slot_plus) {
        out += b ? '+' : '-';
    }
    return out;
}

std::vector<PhaseVariant> all_phase_variants()
{
    std::vector<PhaseVariant> out;
    for (int bits = 0; bits < 16; ++bits) {
        out.push_back({(bits & 8) == 0, {(bits & 4) == 0, (bits & 2) == 0, (bits & 1) == 0}});
    }
    return out;
}

SqrtRational compute_super_3j_direct(const Symbol3j& s, const PhaseVariant& variant)
{
    if (auto v = validate_super(s); !v) {
        throw InvalidSymbol(s, v);
    }
    std::array<std::int64_t, 6> brackets{};
    BigInt prod = 1;
    for (std::size_t k = 0; k < 3; ++k) {
        brackets[2 * k] = s.plus(k).floor();
        brackets[2 * k + 1] = s.minus(k).floor();
        prod *= factorial(brackets[2 * k]) * factorial(brackets[2 * k + 1]);
    }
    auto t = [](HalfInt h) { return BigInt(static_cast<long>(h.twice())); };
    auto pick = [&](bool plus, std::size_t k) { return t(plus ? s.plus(k) : s.minus(k)); };
    // [j1⁺] − [j2⁻] + 2Σj + 8Πj^± + 4(j1^± m2 + j2^± m3 + j3^± m1), doubled units where needed.
    BigInt e = BigInt(static_cast<long>(brackets[0] - brackets[3])) + t(s.spin_sum());
    e += pick(variant.product_plus, 0) * pick(variant.product_plus, 1) * pick(variant.product_plus, 2);
    e += pick(variant.slot_plus[0], 0) * t(s.m(1)) + pick(variant.slot_plus[1], 1) * t(s.m(2)) +
         pick(variant.slot_plus[2], 2) * t(s.m(0));
    Rational coefficient = racah_sum(brackets) * Rational(i_factor(s)) * Rational(parity_sign(e));
    return super_delta(s.j(0), s.j(1), s.j(2)) * make_sqrt_rational(coefficient, Rational(prod));
}

namespace {

// Exponent for κ = 1 in doubled units: twice of
// 2j1 + 4j1m1 + 2j1⁺(j2⁺−j3⁺) + (Σ2j+1)(j3⁻−j2⁻+1) + 2m2 + 1.
int beta_phase_first(const Symbol3j& s)
{
    auto t = [](HalfInt h) { return BigInt(static_cast<long>(h.twice())); };
    BigInt sum2j = t(s.spin_sum());
    BigInt e2 = 2 * t(s.j(0)) + 2 * t(s.j(0)) * t(s.m(0)) + t(s.plus(0)) * (t(s.plus(1)) - t(s.plus(2))) +
         (sum2j + 1) * (t(s.minus(2)) - t(s.minus(1)) + 2) + 2 * t(s.m(1)) + 2;
    if (!mpz_even_p(e2.get_mpz_t())) {
        throw std::logic_error("beta_phase: non-integer exponent for " + s.to_string());
    }
    BigInt e = e2 / 2;
    return parity_sign(e);
}

} // namespace

int beta_phase(const Symbol3j& s, int kappa)
{
    const ParityClass pc = classify_parity(s);
    if (pc.family != ParityFamily::beta || pc.kappa != kappa) {
        throw std::domain_error("beta_phase: " + s.to_string() + " has parity " + pc.name() +
                                ", not beta" + std::to_string(kappa));
    }
    switch (kappa) {
    case 1:
        return beta_phase_first(s);
    case 2:
        return beta_phase_first(s.permuted({1, 0, 2}));
    default:
        return beta_phase_first(s.permuted({2, 0, 1}));
    }
}

PartitionLabel classify_super_partition(const Symbol3j& s, ClauseTable table)
{
    if (classify_parity(s).family == ParityFamily::beta) {
        return classify_super_beta(s);
    }
    return classify(s, table);
}

} // namespace regge3j
