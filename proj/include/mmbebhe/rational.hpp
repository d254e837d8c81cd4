#pragma once

#include <cstdint>
#include <string>

namespace mmbebhe {

/// Exact rational with int64 numerator/denominator, always reduced,
/// denominator positive. Intermediates run through __int128; a reduced
/// result outside int64 throws std::overflow_error. Every quantity the
/// reference pipeline produces stays far below that bound (cross products
/// top out near 3.2e15 for kMaxPixels-sized images).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator*(const Rational& other) const;
    Rational operator/(const Rational& other) const;

    bool operator==(const Rational& other) const = default;
    bool operator<(const Rational& other) const;
    bool operator<=(const Rational& other) const { return !(other < *this); }
    bool operator>(const Rational& other) const { return other < *this; }
    bool operator>=(const Rational& other) const { return !(*this < other); }

    Rational abs() const;

    /// Largest integer <= value.
    std::int64_t floor() const;

    /// Nearest integer, halves away from zero.
    std::int64_t round_nearest() const;

    /// Decimal rendering with at most max_frac_digits fractional digits,
    /// rounded half away from zero, trailing zeros trimmed: "75", "88.375",
    /// "0.333333".
    std::string to_decimal(int max_frac_digits = 6) const;

    /// Closest double. For statistics only; correctness checks stay exact.
    double to_double() const;

private:
    static Rational normalized(__int128 num, __int128 den);

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace mmbebhe
