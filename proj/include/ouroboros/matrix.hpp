#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ouroboros/polynomial.hpp"

namespace ouroboros {

/// Dense rows x cols grid of polynomials over one VarSpace. Indices are 0-based.
class PolyMatrix {
public:
    /// `entries` is row-major and must hold rows * cols polynomials over `vs`.
    PolyMatrix(VarSpace vs, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

    const VarSpace& varspace() const { return vs_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Polynomial& at(std::size_t row, std::size_t col) const;
    const std::vector<Polynomial>& entries() const { return entries_; }

    PolyMatrix with_rows_swapped(std::size_t a, std::size_t b) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    VarSpace vs_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> entries_;
};

/// Entry (k-1, j-1) = gen_p(n, k, j) for k in 1..n, j in 1..m.
PolyMatrix build_matrix(std::size_t n, std::size_t m);

/// Product of the diagonal entries. This is what the Ouroboros literature calls the
/// trace of a square Ouroboros matrix, and the (n^2 + 3n)/2 degree law applies to it.
Polynomial trace_product(const PolyMatrix& m);

/// Conventional trace (sum of the diagonal), provided for contrast.
Polynomial trace_sum(const PolyMatrix& m);

/// (n^2 + 3n) / 2.
std::uint64_t trace_degree_formula(std::uint64_t n);

/// Sum of the diagonal total degrees, i.e. the degree of trace_product without expanding it.
/// Throws DomainError when a diagonal entry is zero.
std::uint64_t degree_of_trace(const PolyMatrix& m);

/// Leibniz expansion sum_sigma sign(sigma) prod_i m(sigma(i), i).
/// `workers == 0` picks std::thread::hardware_concurrency(). The result does not depend on
/// the worker count.
Polynomial determinant_leibniz(const PolyMatrix& m, unsigned workers = 0);

/// First-row cofactor expansion; independent of determinant_leibniz.
Polynomial determinant_cofactor(const PolyMatrix& m);

/// det(M - lambda I) over the VarSpace with lambda adjoined.
Polynomial char_poly(const PolyMatrix& m);

}  // namespace ouroboros
