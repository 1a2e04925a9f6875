#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rydgate {

// Exact half-integer angular momentum quantum number, stored as 2j.
// All triangle and projection-parity checks on HalfInt are exact integer
// arithmetic; conversion to double happens only at evaluation boundaries.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int j) : twice_(2 * j) {}  // NOLINT: implicit from integer j
    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }

    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

  private:
    int twice_ = 0;
};

namespace halfint_literals {
constexpr HalfInt operator""_half(unsigned long long twice) {
    return HalfInt::from_twice(static_cast<int>(twice));
}
}  // namespace halfint_literals

// |j1-j2| <= j <= j1+j2 with integer perimeter.
constexpr bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
    if ((a.twice() + b.twice() + c.twice()) % 2 != 0) return false;
    return c.twice() >= std::abs(a.twice() - b.twice()) && c.twice() <= a.twice() + b.twice();
}

// m runs over {-j, -j+1, ..., j}: bounded and same parity as j.
constexpr bool projection_ok(HalfInt j, HalfInt m) {
    if (std::abs(m.twice()) > j.twice()) return false;
    return (j.twice() - m.twice()) % 2 == 0;
}

}  // namespace rydgate
