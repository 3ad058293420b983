#include "ouroboros/polynomial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ouroboros/error.hpp"

namespace ouroboros {

// ---- VarSpace ---------------------------------------------------------------

VarSpace::VarSpace(std::size_t n, bool lambda_adjoined) : n_(n), lambda_(lambda_adjoined) {
    if (n == 0) throw DomainError("variable space needs n >= 1");
}

std::size_t VarSpace::lambda_index() const {
    if (!lambda_) throw DomainError("lambda is not adjoined to this variable space");
    return n_ + 1;
}

std::string VarSpace::name(std::size_t index) const {
    if (index == 0 || index > var_count()) {
        throw DomainError("variable index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(var_count()));
    }
    if (index == n_ + 1) return "lambda";
    return "c" + std::to_string(index);
}

// ---- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (Exponent e : exps_) degree_ += e;
}

void Monomial::set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.exps_.resize(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
}

std::size_t Monomial::Hash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent e : m.exps_) {
        h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

// ---- Degree -----------------------------------------------------------------

std::uint64_t Degree::value() const {
    if (is_minus_infinity()) throw DomainError("degree of the zero polynomial is -infinity");
    return static_cast<std::uint64_t>(value_);
}

Degree operator+(Degree a, Degree b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return Degree::minus_infinity();
    return Degree(a.value_ + b.value_);
}

std::string Degree::to_string() const {
    return is_minus_infinity() ? std::string("-inf") : std::to_string(value_);
}

// ---- Polynomial -------------------------------------------------------------

namespace {

void require_same_space(const Polynomial& a, const Polynomial& b) {
    if (a.varspace() != b.varspace()) {
        throw VarSpaceMismatch("n=" + std::to_string(a.varspace().n()) +
                               (a.varspace().lambda_adjoined() ? "+lambda" : "") + " vs n=" +
                               std::to_string(b.varspace().n()) +
                               (b.varspace().lambda_adjoined() ? "+lambda" : ""));
    }
}

bool term_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

using Accumulator = std::unordered_map<Monomial, Rational, Monomial::Hash>;

std::vector<Term> drain_sorted(Accumulator& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [mono, coeff] : acc) {
        if (!coeff.is_zero()) out.push_back(Term{std::move(coeff), mono});
    }
    std::sort(out.begin(), out.end(), term_greater);
    return out;
}

}  // namespace

Polynomial Polynomial::constant(VarSpace vs, const Rational& value) {
    if (value.is_zero()) return Polynomial(vs);
    return Polynomial(vs, {Term{value, Monomial(vs.var_count())}});
}

Polynomial Polynomial::variable(VarSpace vs, std::size_t index) {
    if (index == 0 || index > vs.var_count()) {
        throw DomainError("variable index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(vs.var_count()));
    }
    Monomial m(vs.var_count());
    m.set(index - 1, 1);
    return Polynomial(vs, {Term{Rational(1), std::move(m)}});
}

Polynomial Polynomial::from_terms(VarSpace vs, std::vector<Term> terms) {
    std::map<Monomial, Rational, std::greater<>> merged;
    for (auto& t : terms) {
        if (t.monomial.size() != vs.var_count()) {
            throw DomainError("monomial has " + std::to_string(t.monomial.size()) +
                              " exponents, variable space has " + std::to_string(vs.var_count()));
        }
        merged[std::move(t.monomial)] += t.coefficient;
    }
    std::vector<Term> out;
    out.reserve(merged.size());
    for (auto& [mono, coeff] : merged) {
        if (!coeff.is_zero()) out.push_back(Term{coeff, mono});
    }
    return Polynomial(vs, std::move(out));
}

Degree Polynomial::total_degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    return Degree::of(terms_.front().monomial.total_degree());
}

Exponent Polynomial::degree_in(std::size_t index) const {
    if (index == 0 || index > vs_.var_count()) {
        throw DomainError("variable index " + std::to_string(index) + " out of range");
    }
    Exponent best = 0;
    for (const auto& t : terms_) best = std::max(best, t.monomial[index - 1]);
    return best;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != vs_.var_count()) {
        throw DomainError("evaluation point has " + std::to_string(point.size()) +
                          " coordinates, expected " + std::to_string(vs_.var_count()));
    }
    Rational total;
    for (const auto& t : terms_) {
        Rational value = t.coefficient;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (Exponent e = t.monomial[i]; e != 0) value *= pow(point[i], e);
        }
        total += value;
    }
    return total;
}

Polynomial Polynomial::substitute(std::size_t index, const Polynomial& replacement) const {
    if (index == 0 || index > vs_.var_count()) {
        throw DomainError("substitution index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(vs_.var_count()));
    }
    require_same_space(*this, replacement);
    const std::size_t slot = index - 1;

    // Group by the exponent of the substituted variable: a = sum_e q_e * x^e.
    std::map<Exponent, std::vector<Term>> groups;
    for (const auto& t : terms_) {
        Monomial rest = t.monomial;
        Exponent e = rest[slot];
        rest.set(slot, 0);
        groups[e].push_back(Term{t.coefficient, std::move(rest)});
    }

    Polynomial result(vs_);
    Polynomial power = constant(vs_, Rational(1));
    Exponent power_exp = 0;
    for (auto& [e, group] : groups) {
        while (power_exp < e) {
            power = power * replacement;
            ++power_exp;
        }
        result += Polynomial(vs_, std::move(group)) * power;
    }
    return result;
}

Polynomial Polynomial::embed(const VarSpace& target) const {
    if (target.n() != vs_.n()) {
        throw VarSpaceMismatch("cannot embed n=" + std::to_string(vs_.n()) + " into n=" +
                               std::to_string(target.n()));
    }
    if (target == vs_) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto exps = t.monomial.exponents();
        std::vector<Exponent> moved(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(vs_.n()));
        if (target.lambda_adjoined()) {
            moved.push_back(0);
        } else if (exps.back() != 0) {
            throw DomainError("cannot drop lambda from a polynomial that depends on it");
        }
        out.push_back(Term{t.coefficient, Monomial(std::move(moved))});
    }
    // Adjoining or dropping a trailing zero exponent preserves the graded-lex order.
    return Polynomial(target, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coefficient = -t.coefficient;
    return Polynomial(vs_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (factor.is_zero()) return Polynomial(vs_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coefficient *= factor;
    return Polynomial(vs_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_space(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        auto c = ia->monomial <=> ib->monomial;
        if (c > 0) {
            out.push_back(*ia++);
        } else if (c < 0) {
            out.push_back(*ib++);
        } else {
            Rational sum = ia->coefficient + ib->coefficient;
            if (!sum.is_zero()) out.push_back(Term{std::move(sum), ia->monomial});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.terms_.end());
    out.insert(out.end(), ib, b.terms_.end());
    return Polynomial(a.vs_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_space(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.vs_);
    if (b.terms_.size() == 1 && b.terms_.front().monomial.is_one()) return a.scaled(b.terms_.front().coefficient);
    if (a.terms_.size() == 1 && a.terms_.front().monomial.is_one()) return b.scaled(a.terms_.front().coefficient);

    Accumulator acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Rational prod = ta.coefficient * tb.coefficient;
            auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial, prod);
            if (!inserted) it->second += prod;
        }
    }
    return Polynomial(a.vs_, drain_sorted(acc));
}

bool Polynomial::is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coefficient.is_zero()) return false;
        if (terms_[i].monomial.size() != vs_.var_count()) return false;
        if (i > 0 && !(terms_[i - 1].monomial > terms_[i].monomial)) return false;
    }
    return true;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(base.varspace(), Rational(1));
    Polynomial b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

Polynomial sum_of_variables(const VarSpace& vs) {
    std::vector<Term> terms;
    terms.reserve(vs.n());
    for (std::size_t i = 0; i < vs.n(); ++i) {
        Monomial m(vs.var_count());
        m.set(i, 1);
        terms.push_back(Term{Rational(1), std::move(m)});
    }
    return Polynomial::from_terms(vs, std::move(terms));
}

}  // namespace ouroboros
