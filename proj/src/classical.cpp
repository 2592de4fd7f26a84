#include "regge3j/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace regge3j {

SqrtRational triangle_delta(HalfInt a, HalfInt b, HalfInt c)
{
    if (!triangle_holds(a, b, c) || !(a + b + c).is_integer()) {
        throw std::domain_error("triangle_delta: (" + a.to_string() + " " + b.to_string() + " " +
                                c.to_string() + ") is not an integer-perimeter triangle");
    }
    BigInt num = factorial((a + b - c).to_integer()) * factorial((a - b + c).to_integer()) *
                 factorial((b + c - a).to_integer());
    return sqrt_of(Rational(num, factorial((a + b + c).to_integer() + 1)));
}

Rational racah_sum(const std::array<std::int64_t, 6>& pm)
{
    const auto [j1p, j1m, j2p, j2m, j3p, j3m] = pm;
    (void)j2m;
    const std::int64_t alpha = j2p - j3m;
    const std::int64_t beta = j1m - j3p;
    const std::int64_t gamma = j1p + j2p - j3m;
    const std::int64_t lo = std::max({std::int64_t{0}, alpha, beta});
    const std::int64_t hi = std::min({gamma, j1m, j2p});
    Rational total;
    for (std::int64_t z = lo; z <= hi; ++z) {
        BigInt den = factorial(z) * factorial(z - alpha) * factorial(z - beta) * factorial(gamma - z) *
                     factorial(j1m - z) * factorial(j2p - z);
        total += Rational(BigInt(parity_sign(z)), den);
    }
    return total;
}

namespace {

std::array<std::int64_t, 6> plus_minus(const Symbol3j& s)
{
    return {s.plus(0).to_integer(), s.minus(0).to_integer(), s.plus(1).to_integer(),
            s.minus(1).to_integer(), s.plus(2).to_integer(), s.minus(2).to_integer()};
}

} // namespace

SqrtRational v_factor(const Symbol3j& s)
{
    const auto pm = plus_minus(s);
    BigInt prod = 1;
    for (auto x : pm) {
        prod *= factorial(x);
    }
    Rational sum = racah_sum(pm);
    sum *= Rational(parity_sign(pm[0] - pm[3]));
    return make_sqrt_rational(sum, Rational(prod));
}

SqrtRational compute_3j(const Symbol3j& s)
{
    if (auto v = validate_classical(s); !v) {
        throw InvalidSymbol(s, v);
    }
    return triangle_delta(s.j(0), s.j(1), s.j(2)) * v_factor(s);
}

} // namespace regge3j
