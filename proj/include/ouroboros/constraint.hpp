#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ouroboros/polynomial.hpp"

namespace ouroboros {

/// Exact rational point whose coordinates sum to 1.
class SimplexPoint {
public:
    /// Throws DomainError when the coordinates are empty or do not sum to exactly 1.
    explicit SimplexPoint(std::vector<Rational> coords);

    std::size_t size() const { return coords_.size(); }
    std::span<const Rational> coords() const { return coords_; }

private:
    std::vector<Rational> coords_;
};

struct VerificationFailure {
    std::size_t n;
    std::size_t k;
    std::size_t j;
    std::string detail;

    friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationReport {
    std::uint64_t cases_total = 0;
    std::uint64_t cases_passed = 0;
    std::vector<VerificationFailure> failures;

    bool all_passed() const { return failures.empty() && cases_passed == cases_total; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Normal form modulo (c1 + ... + cn - 1): eliminates c_n via c_n := 1 - c1 - ... - c_{n-1}.
/// Lambda, if present, is left alone.
Polynomial reduce_mod_constraint(const Polynomial& a);

/// n integers drawn uniformly from [1, 1000], each divided by their sum. Deterministic in seed.
SimplexPoint sample_simplex(std::size_t n, std::uint64_t seed);

/// True iff `a` evaluates to exactly 0 at `pt`.
bool verify_point(const Polynomial& a, const SimplexPoint& pt);

/// For every n <= n_max, k <= n, j <= j_max: one symbolic case (gen_p reduces to 0) and,
/// when samples > 0, one point case covering `samples` simplex points seeded seed..seed+samples-1.
VerificationReport verify_vanishing_suite(std::size_t n_max, std::size_t j_max, std::size_t samples,
                                          std::uint64_t seed, unsigned workers = 0);

}  // namespace ouroboros
