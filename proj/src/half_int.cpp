#include "regge3j/half_int.hpp"

#include <charconv>
#include <stdexcept>

namespace regge3j {

std::int64_t HalfInt::to_integer() const
{
    if (!is_integer()) {
        throw std::domain_error("HalfInt: " + to_string() + " is not an integer");
    }
    return twice_ / 2;
}

namespace {

// Digits only, no leading zero unless the number is exactly "0".
std::optional<std::int64_t> parse_magnitude(std::string_view digits)
{
    if (digits.empty() || (digits.size() > 1 && digits.front() == '0')) {
        return std::nullopt;
    }
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        return std::nullopt;
    }
    return value;
}

} // namespace

std::optional<HalfInt> HalfInt::try_parse(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    bool half = false;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (text.substr(slash + 1) != "2") {
            return std::nullopt;
        }
        text = text.substr(0, slash);
        half = true;
    }
    auto magnitude = parse_magnitude(text);
    if (!magnitude || *magnitude > max_twice) {
        return std::nullopt;
    }
    std::int64_t twice = half ? *magnitude : 2 * *magnitude;
    if (half && *magnitude % 2 == 0) {
        return std::nullopt;
    }
    if (twice > max_twice || (negative && twice == 0)) {
        return std::nullopt;
    }
    return from_twice(negative ? -twice : twice);
}

HalfInt HalfInt::parse(std::string_view text)
{
    if (auto h = try_parse(text)) {
        return *h;
    }
    throw std::invalid_argument("malformed half-integer '" + std::string(text) + "'");
}

std::string HalfInt::to_string() const
{
    if (is_integer()) {
        return std::to_string(twice_ / 2);
    }
    return std::to_string(twice_) + "/2";
}

} // namespace regge3j
