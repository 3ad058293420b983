#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ouroboros/rational.hpp"

namespace ouroboros {

/// The variables c1..cn, optionally followed by lambda. Variable indices are 1-based:
/// c_i has index i and lambda (when adjoined) has index n + 1.
class VarSpace {
public:
    explicit VarSpace(std::size_t n, bool lambda_adjoined = false);

    std::size_t n() const { return n_; }
    bool lambda_adjoined() const { return lambda_; }
    std::size_t var_count() const { return n_ + (lambda_ ? 1 : 0); }
    std::size_t lambda_index() const;

    VarSpace with_lambda() const { return VarSpace(n_, true); }
    VarSpace without_lambda() const { return VarSpace(n_, false); }

    /// Machine name: "c1".."cn" or "lambda".
    std::string name(std::size_t index) const;

    friend bool operator==(const VarSpace&, const VarSpace&) = default;

private:
    std::size_t n_;
    bool lambda_;
};

using Exponent = std::uint32_t;

/// Exponent vector over a VarSpace. Ordered graded-lexicographically: higher total degree is
/// greater, ties broken by the first differing exponent (c1 > c2 > ... > cn > lambda).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t var_count) : exps_(var_count, 0) {}
    explicit Monomial(std::vector<Exponent> exps);

    std::size_t size() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const { return exps_; }
    std::uint64_t total_degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    void set(std::size_t i, Exponent e);

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    struct Hash {
        std::size_t operator()(const Monomial& m) const noexcept;
    };

private:
    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

struct Term {
    Rational coefficient;
    Monomial monomial;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Total degree with a distinguished MinusInfinity for the zero polynomial.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    static Degree of(std::uint64_t d) { return Degree(static_cast<std::int64_t>(d)); }

    bool is_minus_infinity() const { return value_ < 0; }
    /// Throws DomainError for MinusInfinity.
    std::uint64_t value() const;

    friend Degree operator+(Degree a, Degree b);
    friend bool operator==(Degree, Degree) = default;
    friend auto operator<=>(Degree, Degree) = default;

    std::string to_string() const;

private:
    Degree() = default;
    explicit Degree(std::int64_t v) : value_(v) {}
    std::int64_t value_ = -1;
};

/// Sparse multivariate polynomial with exact rational coefficients, held in canonical form:
/// terms strictly descending in graded-lex order, no zero coefficients, no repeated monomials.
/// The zero polynomial has no terms. Values are immutable once built.
class Polynomial {
public:
    explicit Polynomial(VarSpace vs) : vs_(vs) {}

    static Polynomial constant(VarSpace vs, const Rational& value);
    static Polynomial variable(VarSpace vs, std::size_t index);
    /// Normalizes arbitrary input: merges repeated monomials, drops zeros, sorts.
    static Polynomial from_terms(VarSpace vs, std::vector<Term> terms);

    const VarSpace& varspace() const { return vs_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Degree total_degree() const;
    /// Largest exponent of the given variable over all terms; 0 for the zero polynomial.
    Exponent degree_in(std::size_t index) const;

    Rational evaluate(std::span<const Rational> point) const;
    Polynomial substitute(std::size_t index, const Polynomial& replacement) const;

    /// Moves the polynomial into another VarSpace with the same n, adjoining or dropping
    /// lambda. Dropping requires that lambda does not occur.
    Polynomial embed(const VarSpace& target) const;

    Polynomial operator-() const;
    Polynomial scaled(const Rational& factor) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// True when the term list satisfies every canonical-form invariant.
    bool is_canonical() const;

private:
    Polynomial(VarSpace vs, std::vector<Term> sorted_terms)
        : vs_(vs), terms_(std::move(sorted_terms)) {}

    VarSpace vs_;
    std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// c1 + ... + cn; lambda is never included.
Polynomial sum_of_variables(const VarSpace& vs);

}  // namespace ouroboros
