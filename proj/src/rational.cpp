#include "subcubic/rational.hpp"

#include <cctype>
#include <ostream>

#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

Rational::Integer parse_integer(std::string_view digits, bool allow_sign, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        negative = digits[0] == '-';
        i = 1;
    }
    if (i == digits.size()) {
        throw ParseError("not a fraction: '" + std::string(whole) + "'");
    }
    Rational::Integer value = 0;
    for (; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
            throw ParseError("not a fraction: '" + std::string(whole) + "' (use p/q, decimals are not accepted)");
        }
        value = value * 10 + (digits[i] - '0');
    }
    return negative ? Rational::Integer(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ParseError("zero denominator");
    }
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, true, text), Integer(1));
    }
    const Integer num = parse_integer(text.substr(0, slash), true, text);
    const Integer den = parse_integer(text.substr(slash + 1), false, text);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Rational::Integer Rational::numerator() const { return boost::multiprecision::numerator(value_); }

Rational::Integer Rational::denominator() const { return boost::multiprecision::denominator(value_); }

int Rational::sign() const { return value_.sign(); }

bool Rational::is_integer() const { return denominator() == 1; }

std::string Rational::to_string() const {
    if (is_integer()) {
        return numerator().str();
    }
    return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_decimal(int places) const {
    Integer scale = 1;
    for (int i = 0; i < places; ++i) {
        scale *= 10;
    }
    const Integer num = numerator();
    const Integer den = denominator();
    const bool negative = num < 0;
    const Integer mag = negative ? Integer(-num) : num;
    // round half away from zero
    const Integer scaled = (2 * mag * scale + den) / (2 * den);
    const Integer whole = scaled / scale;
    std::string frac = Integer(scaled % scale).str();
    if (static_cast<int>(frac.size()) < places) {
        frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    }
    std::string out = (negative && scaled != 0) ? "-" : "";
    out += whole.str();
    if (places > 0) {
        out += "." + frac;
    }
    return out;
}

Rational Rational::operator-() const { return Rational(boost::multiprecision::cpp_rational(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace subcubic
