#include "ouroboros/rational.hpp"

#include <cctype>

#include "ouroboros/error.hpp"

namespace ouroboros {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpz_class takes long; fall back to the decimal string where long is 32-bit.
    if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
        value_ = mpq_class(static_cast<long>(value));
    } else {
        value_ = mpq_class(mpz_class(std::to_string(value)));
    }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class d(std::string{den});
    if (d == 0) throw DomainError("zero denominator");
    mpq_class q(mpz_class(std::string{num}), d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

}  // namespace ouroboros
