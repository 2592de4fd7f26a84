#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace regge3j {

using BigInt = mpz_class;

///
/// Exact rational number, always in lowest terms with a positive
/// denominator.
///
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const BigInt& value) : q_(value) {}
    /// Throws std::domain_error on a zero denominator.
    Rational(const BigInt& numerator, const BigInt& denominator);

    const mpq_class& get() const { return q_; }
    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.q_, b.q_) <=> 0;
    }

    /// "p/q", always with the slash ("4/1", "0/1").
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }
    /// Accepts "p/q" or "p"; normalizes to lowest terms.
    static Rational parse(std::string_view text);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpq_class q_;
};

///
/// A real number of the form sign · √radicand with rational radicand.
///
/// Every 3-j and super 3-j value has this shape, and the form is closed
/// under multiplication. The pair (sign, radicand) is canonical: two values
/// are equal as reals iff the pairs are identical.
///
class SqrtRational {
public:
    /// Zero.
    SqrtRational() = default;

    /// Throws std::domain_error unless sign ∈ {-1,0,1}, radicand ≥ 0 and
    /// (sign == 0) == (radicand == 0).
    static SqrtRational from_parts(int sign, Rational radicand);

    static SqrtRational one() { return from_parts(1, Rational(1)); }

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    /// The square of the value, sign² · radicand.
    const Rational& square() const { return radicand_; }

    SqrtRational operator-() const;
    /// Throws std::domain_error on zero.
    SqrtRational reciprocal() const;

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);
    friend SqrtRational operator/(const SqrtRational& a, const SqrtRational& b)
    {
        return a * b.reciprocal();
    }

    friend bool operator==(const SqrtRational&, const SqrtRational&) = default;

    /// Human-readable form such as "-sqrt(1/3)" or "0".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const SqrtRational& v) { return os << v.to_string(); }

    /// {"sign":s,"radicand":"p/q"}, compact, keys in that order.
    std::string to_json() const;
    /// Inverse of to_json(); throws std::invalid_argument on malformed input.
    static SqrtRational from_json(std::string_view text);

private:
    int sign_ = 0;
    Rational radicand_;
};

/// coefficient · √radicand in canonical form. Throws std::domain_error when
/// radicand < 0.
SqrtRational make_sqrt_rational(const Rational& coefficient, const Rational& radicand);

/// √r for r ≥ 0.
inline SqrtRational sqrt_of(const Rational& r) { return make_sqrt_rational(Rational(1), r); }

inline SqrtRational multiply(const SqrtRational& a, const SqrtRational& b) { return a * b; }

/// n!, memoized per thread. Throws std::domain_error for n < 0.
BigInt factorial(std::int64_t n);

/// (-1)^n.
constexpr int parity_sign(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }
int parity_sign(const BigInt& n);

/// Decimal rendering for display only, correctly rounded to the given number
/// of significant digits, e.g. "0.577350269190", "-1.41421356237", "0".
std::string to_decimal(const SqrtRational& value, int significant_digits = 12);

} // namespace regge3j
