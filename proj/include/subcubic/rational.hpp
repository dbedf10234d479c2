#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace subcubic {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. No floating point is ever involved except in
/// to_decimal(), which is a display helper.
class Rational {
public:
    using Integer = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p/q" or a bare integer "p" (optional leading sign on p).
    /// Decimal points, exponents and zero denominators are rejected.
    static Rational parse(std::string_view text);

    Integer numerator() const;
    Integer denominator() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Rounded decimal rendering for human display only.
    std::string to_decimal(int places = 6) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_rational value_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace subcubic
