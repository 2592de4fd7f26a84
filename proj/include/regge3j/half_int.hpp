#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace regge3j {

///
/// An exact integer or half-odd-integer, stored as twice its value.
///
/// Spins j, projections m and the combinations j ± m are all of this type.
/// Arithmetic never leaves the doubled-integer representation, so nothing
/// is ever rounded.
///
class HalfInt {
public:
    /// Largest accepted |twice()| when parsing text.
    static constexpr std::int64_t max_twice = std::int64_t{1} << 40;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t integer_value) : twice_(2 * integer_value) {}

    static constexpr HalfInt from_twice(std::int64_t twice)
    {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_half_odd() const { return !is_integer(); }

    /// Mathematical floor, so floor(-1/2) == -1.
    constexpr std::int64_t floor() const
    {
        return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
    }

    /// The integer value; throws std::domain_error for a half-odd value.
    std::int64_t to_integer() const;

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    /// Strict textual form: "2", "-3", "3/2", "-1/2". No whitespace, no
    /// leading zeros, no "+", and "n/2" only for odd n.
    static HalfInt parse(std::string_view text);
    static std::optional<HalfInt> try_parse(std::string_view text);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const HalfInt& v) { return os << v.to_string(); }

private:
    std::int64_t twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// x / 2 when it is again an integer or half-odd-integer.
constexpr std::optional<HalfInt> halve(HalfInt x)
{
    if (x.twice() % 2 != 0) {
        return std::nullopt;
    }
    return HalfInt::from_twice(x.twice() / 2);
}

constexpr HalfInt operator""_hi(unsigned long long v)
{
    return HalfInt(static_cast<std::int64_t>(v));
}

} // namespace regge3j
