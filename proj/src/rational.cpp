#include "mmbebhe/rational.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

namespace mmbebhe {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rational Rational::normalized(__int128 num, __int128 den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        den = 1;
    } else {
        const __int128 g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    if (num > kInt64Max || num < kInt64Min || den > kInt64Max) {
        throw std::overflow_error("Rational: reduced value exceeds 64 bits");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = normalized(num, den);
}

Rational Rational::operator-() const {
    return normalized(-static_cast<__int128>(num_), den_);
}

Rational Rational::operator+(const Rational& other) const {
    return normalized(static_cast<__int128>(num_) * other.den_ +
                          static_cast<__int128>(other.num_) * den_,
                      static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
    return normalized(static_cast<__int128>(num_) * other.den_ -
                          static_cast<__int128>(other.num_) * den_,
                      static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator*(const Rational& other) const {
    return normalized(static_cast<__int128>(num_) * other.num_,
                      static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator/(const Rational& other) const {
    if (other.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    return normalized(static_cast<__int128>(num_) * other.den_,
                      static_cast<__int128>(den_) * other.num_);
}

bool Rational::operator<(const Rational& other) const {
    // Denominators are positive, so cross multiplication preserves order.
    return static_cast<__int128>(num_) * other.den_ < static_cast<__int128>(other.num_) * den_;
}

Rational Rational::abs() const {
    return num_ < 0 ? -*this : *this;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
        --q;
    }
    return q;
}

std::int64_t Rational::round_nearest() const {
    const std::int64_t magnitude_num = num_ < 0 ? -num_ : num_;
    std::int64_t q = magnitude_num / den_;
    const std::int64_t r = magnitude_num % den_;
    if (static_cast<__int128>(r) * 2 >= den_) {  // halves away from zero
        ++q;
    }
    return num_ < 0 ? -q : q;
}

std::string Rational::to_decimal(int max_frac_digits) const {
    assert(max_frac_digits >= 0);
    const std::int64_t magnitude = num_ < 0 ? -num_ : num_;
    std::int64_t int_part = magnitude / den_;
    __int128 rem = magnitude % den_;

    std::string digits;
    digits.reserve(static_cast<std::size_t>(max_frac_digits));
    for (int i = 0; i < max_frac_digits && rem != 0; ++i) {
        rem *= 10;
        digits.push_back(static_cast<char>('0' + static_cast<int>(rem / den_)));
        rem %= den_;
    }
    // Round the final digit half away from zero, carrying leftward.
    if (rem != 0 && rem * 2 >= den_) {
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i) {
            if (digits[static_cast<std::size_t>(i)] != '9') {
                ++digits[static_cast<std::size_t>(i)];
                break;
            }
            digits[static_cast<std::size_t>(i)] = '0';
        }
        if (i < 0) {
            ++int_part;
            digits.clear();
        }
    }
    while (!digits.empty() && digits.back() == '0') {
        digits.pop_back();
    }

    std::string out = std::to_string(int_part);
    if (!digits.empty()) {
        out += '.';
        out += digits;
    }
    if (num_ < 0 && (int_part != 0 || !digits.empty())) {
        out.insert(out.begin(), '-');
    }
    return out;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

}  // namespace mmbebhe
