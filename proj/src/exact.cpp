#include "regge3j/exact.hpp"

#include "json.hpp"

#include <stdexcept>
#include <vector>

namespace regge3j {

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    auto is_integer_text = [](const std::string& s, bool allow_sign) {
        std::size_t start = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
        if (start == s.size()) {
            return false;
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return Rational(BigInt(num, 10), BigInt(den, 10));
}

SqrtRational SqrtRational::from_parts(int sign, Rational radicand)
{
    if (sign < -1 || sign > 1) {
        throw std::domain_error("SqrtRational: sign must be -1, 0 or 1");
    }
    if (radicand.sign() < 0) {
        throw std::domain_error("SqrtRational: negative radicand");
    }
    if ((sign == 0) != radicand.is_zero()) {
        throw std::domain_error("SqrtRational: sign is zero iff radicand is zero");
    }
    SqrtRational v;
    v.sign_ = sign;
    v.radicand_ = std::move(radicand);
    return v;
}

SqrtRational SqrtRational::operator-() const
{
    SqrtRational v = *this;
    v.sign_ = -sign_;
    return v;
}

SqrtRational SqrtRational::reciprocal() const
{
    if (is_zero()) {
        throw std::domain_error("SqrtRational: reciprocal of zero");
    }
    return from_parts(sign_, Rational(1) / radicand_);
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    return SqrtRational::from_parts(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

std::string SqrtRational::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out = sign_ < 0 ? "-" : "";
    if (radicand_.denominator() == 1) {
        return out + "sqrt(" + radicand_.numerator().get_str() + ")";
    }
    return out + "sqrt(" + radicand_.to_string() + ")";
}

std::string SqrtRational::to_json() const
{
    nlohmann::ordered_json j;
    j["sign"] = sign_;
    j["radicand"] = radicand_.to_string();
    return j.dump();
}

SqrtRational SqrtRational::from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("SqrtRational JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("sign") || !j.contains("radicand") ||
        !j["sign"].is_number_integer() || !j["radicand"].is_string()) {
        throw std::invalid_argument("SqrtRational JSON: expected {\"sign\":int,\"radicand\":\"p/q\"}");
    }
    try {
        return from_parts(j["sign"].get<int>(), Rational::parse(j["radicand"].get<std::string>()));
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
}

SqrtRational make_sqrt_rational(const Rational& coefficient, const Rational& radicand)
{
    if (radicand.sign() < 0) {
        throw std::domain_error("make_sqrt_rational: negative radicand");
    }
    if (coefficient.is_zero() || radicand.is_zero()) {
        return {};
    }
    return SqrtRational::from_parts(coefficient.sign(), coefficient * coefficient * radicand);
}

BigInt factorial(std::int64_t n)
{
    if (n < 0) {
        throw std::domain_error("factorial of negative argument " + std::to_string(n));
    }
    thread_local std::vector<BigInt> memo{BigInt(1)};
    while (static_cast<std::int64_t>(memo.size()) <= n) {
        memo.push_back(memo.back() * static_cast<unsigned long>(memo.size()));
    }
    return memo[static_cast<std::size_t>(n)];
}

int parity_sign(const BigInt& n)
{
    return mpz_even_p(n.get_mpz_t()) ? 1 : -1;
}

std::string to_decimal(const SqrtRational& value, int significant_digits)
{
    if (significant_digits < 1) {
        throw std::invalid_argument("to_decimal: need at least one significant digit");
    }
    if (value.is_zero()) {
        return "0";
    }
    const BigInt p = value.radicand().numerator();
    const BigInt q = value.radicand().denominator();
    auto pow10 = [](long e) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
        return r;
    };
    // X = p/q * 100^k as a fraction num/den; floor(sqrt(X)) == floor(sqrt(floor(X))).
    auto scaled = [&](long k, BigInt& num, BigInt& den) {
        num = p;
        den = q;
        if (k >= 0) {
            num *= pow10(2 * k);
        } else {
            den *= pow10(-2 * k);
        }
    };
    long magnitude = (static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
                      static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10))) / 2;
    long k = significant_digits - magnitude;
    BigInt num;
    BigInt den;
    BigInt root;
    for (;;) {
        scaled(k, num, den);
        BigInt floor_x = num / den;
        mpz_sqrt(root.get_mpz_t(), floor_x.get_mpz_t());
        if (root != 0 && root.get_str().size() >= static_cast<std::size_t>(significant_digits)) {
            break;
        }
        ++k;
    }
    long extra = static_cast<long>(root.get_str().size()) - significant_digits;
    BigInt unit = pow10(extra);
    BigInt kept = root / unit;
    // Round half-up: sqrt(X) >= (kept + 1/2) * unit  <=>  4 num >= (2 kept + 1)^2 unit^2 den.
    BigInt twice_plus_one = 2 * kept + 1;
    if (4 * num >= twice_plus_one * twice_plus_one * unit * unit * den) {
        kept += 1;
    }
    // value = kept * 10^(extra - k)
    long point = static_cast<long>(significant_digits) + extra - k;
    std::string kept_digits = kept.get_str();
    if (static_cast<long>(kept_digits.size()) > significant_digits) {
        kept_digits.pop_back();
        ++point;
    }
    std::string out = value.sign() < 0 ? "-" : "";
    if (point <= 0) {
        out += "0." + std::string(static_cast<std::size_t>(-point), '0') + kept_digits;
    } else if (point >= static_cast<long>(kept_digits.size())) {
        out += kept_digits + std::string(static_cast<std::size_t>(point) - kept_digits.size(), '0');
    } else {
        out += kept_digits.substr(0, static_cast<std::size_t>(point)) + "." +
               kept_digits.substr(static_cast<std::size_t>(point));
    }
    return out;
}

} // namespace regge3j
