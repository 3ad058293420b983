#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ouroboros {

/// Exact arbitrary-precision fraction, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT: implicit on purpose, integers are rationals
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses "a" or "a/b" with optional leading sign on the numerator. Throws DomainError
    /// on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string numerator_string() const { return value_.get_num().get_str(); }
    std::string denominator_string() const { return value_.get_den().get_str(); }

    /// "num/den", with "/den" omitted when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace ouroboros
