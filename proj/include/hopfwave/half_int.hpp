#pragma once

#include "hopfwave/rational.hpp"

#include <string>

namespace hopfwave {

/// Half-integer stored as twice its value, so j = twice/2.
struct HalfInt {
    int twice = 0;

    HalfInt() = default;
    explicit HalfInt(int twice_value) : twice(twice_value) {}

    static HalfInt whole(int n) { return HalfInt(2 * n); }

    bool is_integer() const { return twice % 2 == 0; }
    Rational value() const { return make_rational(twice, 2); }
    double to_double() const { return twice / 2.0; }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }

    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
    friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
    friend bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
    friend bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
    friend bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }
};

inline std::string to_string(HalfInt h) {
    if (h.twice % 2 == 0) return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

/// Accepts "2", "-3/2" or "1.5"-style halves.
HalfInt parse_half_int(const std::string& text);

} // namespace hopfwave
