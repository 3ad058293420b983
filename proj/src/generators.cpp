#include "ouroboros/generators.hpp"

#include <random>
#include <string>

#include "ouroboros/error.hpp"

namespace ouroboros {

namespace {

void require_index(std::size_t n, std::size_t k) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (k < 1 || k > n) {
        throw DomainError("k=" + std::to_string(k) + " out of range 1.." + std::to_string(n));
    }
}

// sum of c_i over i in {1..n} \ {k}; the empty sum (n = 1) is 0.
Polynomial sum_excluding(const VarSpace& vs, std::size_t k) {
    return sum_of_variables(vs) - Polynomial::variable(vs, k);
}

}  // namespace

LinearForm::LinearForm(VarSpace vs, std::vector<Polynomial> xcoeffs)
    : vs_(vs), xcoeffs_(std::move(xcoeffs)) {
    if (xcoeffs_.size() != vs_.n()) {
        throw DomainError("linear form needs " + std::to_string(vs_.n()) + " coefficients, got " +
                          std::to_string(xcoeffs_.size()));
    }
    for (const auto& c : xcoeffs_) {
        if (c.varspace() != vs_) throw VarSpaceMismatch("linear form coefficient");
    }
}

const Polynomial& LinearForm::coefficient(std::size_t i) const {
    if (i < 1 || i > xcoeffs_.size()) throw DomainError("x index out of range");
    return xcoeffs_[i - 1];
}

LinearForm LinearForm::compose(std::span<const LinearForm> args) const {
    if (args.size() != arity()) {
        throw DomainError("composition needs " + std::to_string(arity()) + " arguments, got " +
                          std::to_string(args.size()));
    }
    // f(g_1, ..., g_n) = sum_i a_i g_i = sum_j (sum_i a_i * g_i[j]) x_j
    std::vector<Polynomial> out(arity(), Polynomial(vs_));
    for (std::size_t i = 0; i < arity(); ++i) {
        if (args[i].varspace() != vs_ || args[i].arity() != arity()) {
            throw VarSpaceMismatch("composed linear form");
        }
        for (std::size_t j = 0; j < arity(); ++j) {
            out[j] += xcoeffs_[i] * args[i].xcoeffs_[j];
        }
    }
    return LinearForm(vs_, std::move(out));
}

Polynomial gen_p(std::size_t n, std::size_t k, std::size_t j) {
    require_index(n, k);
    if (j < 1) throw DomainError("j must be >= 1");
    const VarSpace vs(n);
    const Polynomial ck = Polynomial::variable(vs, k);
    const Polynomial one = Polynomial::constant(vs, Rational(1));
    const auto e = static_cast<unsigned>(j);
    return pow(ck, e + 1) + (pow(sum_of_variables(vs), e) - pow(ck, e) - one) * ck;
}

Polynomial gen_quadratic(std::size_t n, std::size_t k) {
    require_index(n, k);
    const VarSpace vs(n);
    const Polynomial ck = Polynomial::variable(vs, k);
    const Polynomial one = Polynomial::constant(vs, Rational(1));
    return ck * ck + (sum_excluding(vs, k) - one) * ck;
}

std::pair<Polynomial, Polynomial> quadratic_roots(std::size_t n, std::size_t k) {
    require_index(n, k);
    const VarSpace vs(n);
    return {Polynomial(vs), Polynomial::constant(vs, Rational(1)) - sum_excluding(vs, k)};
}

LinearForm base_form(std::size_t n) {
    if (n < 1) throw DomainError("n must be >= 1");
    const VarSpace vs(n);
    std::vector<Polynomial> coeffs;
    coeffs.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) coeffs.push_back(Polynomial::variable(vs, i));
    return LinearForm(vs, std::move(coeffs));
}

LinearForm self_compose(const LinearForm& form, std::int64_t p) {
    if (p < 0) throw DomainError("iteration count must be >= 0");
    LinearForm current = form;
    for (std::int64_t step = 0; step < p; ++step) {
        std::vector<LinearForm> args(form.arity(), current);
        current = form.compose(args);
    }
    return current;
}

LinearForm closed_form_iterate(std::size_t n, std::int64_t p) {
    if (p < 0) throw DomainError("iteration count must be >= 0");
    LinearForm f = base_form(n);
    const Polynomial factor = pow(sum_of_variables(f.varspace()), static_cast<unsigned>(p));
    std::vector<Polynomial> coeffs;
    coeffs.reserve(n);
    for (const auto& c : f.coefficients()) coeffs.push_back(factor * c);
    return LinearForm(f.varspace(), std::move(coeffs));
}

bool is_ouroboros_numeric(std::span<const Rational> coeffs, std::size_t samples, std::uint64_t seed) {
    if (coeffs.empty()) throw DomainError("coefficient vector is empty");
    if (samples < 1) throw DomainError("samples must be >= 1");

    auto apply = [&](auto&& arg_at) {
        Rational acc;
        for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * arg_at(i);
        return acc;
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    std::vector<Rational> x(coeffs.size());
    for (std::size_t s = 0; s < samples; ++s) {
        for (auto& xi : x) {
            std::int64_t a = num(rng);
            xi = Rational(a, den(rng));
        }
        const Rational fx = apply([&](std::size_t i) { return x[i]; });
        const Rational ffx = apply([&](std::size_t) { return fx; });
        if (ffx != fx) return false;
    }
    return true;
}

}  // namespace ouroboros
