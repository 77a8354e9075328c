#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "sl2/errors.hpp"

namespace sl2 {

/// An element of ½ℤ stored as its double.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(long twice) { HalfInt h; h.twice_ = twice; return h; }

    /// Throws DomainError unless 2x is an integer.
    explicit HalfInt(double x) {
        double tw = 2.0 * x;
        if (!std::isfinite(tw) || std::abs(tw - std::round(tw)) > 1e-9)
            throw DomainError("not a half-integer: " + std::to_string(x));
        twice_ = static_cast<long>(std::lround(tw));
    }

    constexpr long twice() const { return twice_; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice_); }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    long twice_ = 0;
};

} // namespace sl2
