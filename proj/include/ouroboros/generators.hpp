#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ouroboros/polynomial.hpp"

namespace ouroboros {

/// A linear form sum_i a_i x_i whose coefficients a_i are polynomials in c1..cn.
/// Represents f(x) = sum c_i x_i and every iterate of its complete self-composition.
class LinearForm {
public:
    LinearForm(VarSpace vs, std::vector<Polynomial> xcoeffs);

    const VarSpace& varspace() const { return vs_; }
    std::size_t arity() const { return xcoeffs_.size(); }
    /// Coefficient of x_i, 1-based.
    const Polynomial& coefficient(std::size_t i) const;
    std::span<const Polynomial> coefficients() const { return xcoeffs_; }

    /// Substitutes args[i] for x_{i+1}; the result is again linear in x.
    LinearForm compose(std::span<const LinearForm> args) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    VarSpace vs_;
    std::vector<Polynomial> xcoeffs_;
};

/// p(k, j) = c_k^(j+1) + ((c1 + ... + cn)^j - c_k^j - 1) c_k, in VarSpace(n).
/// Requires n >= 1, 1 <= k <= n, j >= 1.
Polynomial gen_p(std::size_t n, std::size_t k, std::size_t j);

/// c_k^2 + (sum_{i != k} c_i - 1) c_k. Coincides with gen_p(n, k, 1).
Polynomial gen_quadratic(std::size_t n, std::size_t k);

/// Both roots of gen_quadratic(n, k) read as a quadratic in c_k: first the zero root,
/// then 1 - sum_{i != k} c_i.
std::pair<Polynomial, Polynomial> quadratic_roots(std::size_t n, std::size_t k);

/// f(x) = c1 x1 + ... + cn xn.
LinearForm base_form(std::size_t n);

/// The p-th complete self-composition: form_0 = form, form_p = form(form_{p-1}, ..., form_{p-1}).
/// Computed by actual substitution, never from the closed form.
LinearForm self_compose(const LinearForm& form, std::int64_t p);

/// (c1 + ... + cn)^p * f, expanded.
LinearForm closed_form_iterate(std::size_t n, std::int64_t p);

/// Checks f(f(x), ..., f(x)) == f(x) exactly at `samples` seeded random rational points x.
/// Ignores the codomain; only the functional equation is tested.
bool is_ouroboros_numeric(std::span<const Rational> coeffs, std::size_t samples, std::uint64_t seed);

}  // namespace ouroboros
