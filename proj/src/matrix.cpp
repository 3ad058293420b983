#include "ouroboros/matrix.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "ouroboros/error.hpp"
#include "ouroboros/generators.hpp"
#include "ouroboros/permutation.hpp"

namespace ouroboros {

PolyMatrix::PolyMatrix(VarSpace vs, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : vs_(vs), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw DomainError("matrix dimensions must be >= 1");
    if (entries_.size() != rows_ * cols_) {
        throw DomainError("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                          std::to_string(entries_.size()));
    }
    for (const auto& e : entries_) {
        if (e.varspace() != vs_) throw VarSpaceMismatch("matrix entry");
    }
}

const Polynomial& PolyMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw DomainError("matrix index out of range");
    return entries_[row * cols_ + col];
}

PolyMatrix PolyMatrix::with_rows_swapped(std::size_t a, std::size_t b) const {
    if (a >= rows_ || b >= rows_) throw DomainError("row index out of range");
    std::vector<Polynomial> out = entries_;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(out[a * cols_ + c], out[b * cols_ + c]);
    return PolyMatrix(vs_, rows_, cols_, std::move(out));
}

PolyMatrix build_matrix(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1) throw DomainError("build_matrix needs n >= 1 and m >= 1");
    std::vector<Polynomial> entries;
    entries.reserve(n * m);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 1; j <= m; ++j) entries.push_back(gen_p(n, k, j));
    }
    return PolyMatrix(VarSpace(n), n, m, std::move(entries));
}

namespace {

void require_square(const PolyMatrix& m, const char* op) {
    if (!m.is_square()) {
        throw DomainError(std::string(op) + " needs a square matrix, got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
    }
}

// Depth-first walk over partial permutations. Columns are fixed from last to first so the
// large high-degree columns are multiplied while the running product is still small, and
// each partial product is shared by every permutation extending it.
class LeibnizWalker {
public:
    explicit LeibnizWalker(const PolyMatrix& m)
        : m_(m), n_(m.rows()), sigma_(n_, 0), used_(n_, false), acc_(m.varspace()) {}

    Polynomial run_branch(std::size_t top_row) {
        const std::size_t col = n_ - 1;
        const Polynomial& e = m_.at(top_row, col);
        if (!e.is_zero()) {
            assign(col, top_row);
            descend(col, e);
            release(top_row);
        }
        return std::move(acc_);
    }

private:
    void assign(std::size_t col, std::size_t row) {
        sigma_[col] = row + 1;
        used_[row] = true;
    }
    void release(std::size_t row) { used_[row] = false; }

    void descend(std::size_t col, const Polynomial& prefix) {
        if (col == 0) {
            acc_ += sign(Permutation(sigma_)) > 0 ? prefix : -prefix;
            return;
        }
        const std::size_t next = col - 1;
        for (std::size_t row = 0; row < n_; ++row) {
            if (used_[row]) continue;
            const Polynomial& e = m_.at(row, next);
            if (e.is_zero()) continue;
            assign(next, row);
            descend(next, prefix * e);
            release(row);
        }
    }

    const PolyMatrix& m_;
    std::size_t n_;
    std::vector<std::size_t> sigma_;
    std::vector<bool> used_;
    Polynomial acc_;
};

Polynomial cofactor_expand(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
    if (rows.size() == 1) return m.at(rows.front(), cols.front());
    const std::size_t row = rows.front();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    Polynomial det(m.varspace());
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        const Polynomial& e = m.at(row, cols[pos]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t q = 0; q < cols.size(); ++q) {
            if (q != pos) sub_cols.push_back(cols[q]);
        }
        Polynomial minor = cofactor_expand(m, sub_rows, sub_cols);
        Polynomial term = e * minor;
        det += (pos % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

Polynomial trace_product(const PolyMatrix& m) {
    require_square(m, "trace_product");
    Polynomial out = Polynomial::constant(m.varspace(), Rational(1));
    for (std::size_t i = 0; i < m.rows(); ++i) out *= m.at(i, i);
    return out;
}

Polynomial trace_sum(const PolyMatrix& m) {
    require_square(m, "trace_sum");
    Polynomial out(m.varspace());
    for (std::size_t i = 0; i < m.rows(); ++i) out += m.at(i, i);
    return out;
}

std::uint64_t trace_degree_formula(std::uint64_t n) {
    if (n < 1) throw DomainError("trace_degree_formula needs n >= 1");
    // n(n + 3) / 2 with one of n, n + 3 even; guard the multiplication.
    std::uint64_t a = n;
    std::uint64_t b = n + 3;
    if (b < n) throw DomainError("n too large");
    if (a % 2 == 0) a /= 2; else b /= 2;
    if (a > std::numeric_limits<std::uint64_t>::max() / b) throw DomainError("degree overflows 64 bits");
    return a * b;
}

std::uint64_t degree_of_trace(const PolyMatrix& m) {
    require_square(m, "degree_of_trace");
    Degree total = Degree::of(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Polynomial& d = m.at(i, i);
        if (d.is_zero()) {
            throw DomainError("diagonal entry " + std::to_string(i + 1) + " is zero; degree is -infinity");
        }
        total = total + d.total_degree();
    }
    return total.value();
}

Polynomial determinant_leibniz(const PolyMatrix& m, unsigned workers) {
    require_square(m, "determinant_leibniz");
    const std::size_t n = m.rows();
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    // One branch per row placed in the last column; branch b goes to worker b % workers.
    std::vector<Polynomial> partial(n, Polynomial(m.varspace()));
    auto run = [&](unsigned w) {
        for (std::size_t b = w; b < n; b += workers) partial[b] = LeibnizWalker(m).run_branch(b);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run, w));
        for (auto& j : jobs) j.get();
    }

    Polynomial det(m.varspace());
    for (const auto& p : partial) det += p;
    return det;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
    require_square(m, "determinant_cofactor");
    std::vector<std::size_t> rows(m.rows());
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = cols[i] = i;
    return cofactor_expand(m, rows, cols);
}

Polynomial char_poly(const PolyMatrix& m) {
    require_square(m, "char_poly");
    if (m.varspace().lambda_adjoined()) throw DomainError("char_poly input already uses lambda");
    const VarSpace vs = m.varspace().with_lambda();
    const Polynomial lambda = Polynomial::variable(vs, vs.lambda_index());
    std::vector<Polynomial> shifted;
    shifted.reserve(m.entries().size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Polynomial e = m.at(r, c).embed(vs);
            shifted.push_back(r == c ? e - lambda : std::move(e));
        }
    }
    return determinant_leibniz(PolyMatrix(vs, m.rows(), m.cols(), std::move(shifted)));
}

}  // namespace ouroboros
