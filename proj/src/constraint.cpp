#include "ouroboros/constraint.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "ouroboros/error.hpp"
#include "ouroboros/generators.hpp"

namespace ouroboros {

SimplexPoint::SimplexPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("simplex point needs at least one coordinate");
    Rational total;
    for (const auto& c : coords_) total += c;
    if (!total.is_one()) throw DomainError("simplex coordinates sum to " + total.to_string() + ", not 1");
}

Polynomial reduce_mod_constraint(const Polynomial& a) {
    const VarSpace& vs = a.varspace();
    const std::size_t n = vs.n();
    Polynomial replacement = Polynomial::constant(vs, Rational(1));
    for (std::size_t i = 1; i < n; ++i) replacement -= Polynomial::variable(vs, i);
    return a.substitute(n, replacement);
}

SimplexPoint sample_simplex(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw DomainError("sample_simplex needs n >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> draw(1, 1000);
    std::vector<std::int64_t> weights(n);
    std::int64_t total = 0;
    for (auto& w : weights) {
        w = draw(rng);
        total += w;
    }
    std::vector<Rational> coords;
    coords.reserve(n);
    for (auto w : weights) coords.emplace_back(w, total);
    return SimplexPoint(std::move(coords));
}

bool verify_point(const Polynomial& a, const SimplexPoint& pt) {
    const VarSpace& vs = a.varspace();
    if (pt.size() != vs.n()) {
        throw DomainError("point has " + std::to_string(pt.size()) + " coordinates, polynomial has n=" +
                          std::to_string(vs.n()));
    }
    if (vs.lambda_adjoined() && a.degree_in(vs.lambda_index()) != 0) {
        throw DomainError("verify_point needs a lambda-free polynomial");
    }
    std::vector<Rational> point(pt.coords().begin(), pt.coords().end());
    if (vs.lambda_adjoined()) point.emplace_back(0);
    return a.evaluate(point).is_zero();
}

namespace {

struct CaseOutcome {
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::vector<VerificationFailure> failures;
};

CaseOutcome run_case(std::size_t n, std::size_t k, std::size_t j, std::span<const SimplexPoint> points) {
    CaseOutcome out;
    const Polynomial p = gen_p(n, k, j);

    ++out.total;
    const Polynomial reduced = reduce_mod_constraint(p);
    if (reduced.is_zero()) {
        ++out.passed;
    } else {
        out.failures.push_back({n, k, j, "symbolic reduction left " + std::to_string(reduced.term_count()) + " terms"});
    }

    if (!points.empty()) {
        ++out.total;
        std::size_t bad = 0;
        for (const auto& pt : points) {
            if (!verify_point(p, pt)) ++bad;
        }
        if (bad == 0) {
            ++out.passed;
        } else {
            out.failures.push_back({n, k, j, std::to_string(bad) + " of " + std::to_string(points.size()) +
                                                  " sample points did not vanish"});
        }
    }
    return out;
}

}  // namespace

VerificationReport verify_vanishing_suite(std::size_t n_max, std::size_t j_max, std::size_t samples,
                                          std::uint64_t seed, unsigned workers) {
    if (n_max < 1 || j_max < 1) throw DomainError("verify needs n_max >= 1 and j_max >= 1");

    struct Case {
        std::size_t n, k, j;
    };
    std::vector<Case> cases;
    std::vector<std::vector<SimplexPoint>> points(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t s = 0; s < samples; ++s) points[n].push_back(sample_simplex(n, seed + s));
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t j = 1; j <= j_max; ++j) cases.push_back({n, k, j});
        }
    }

    std::vector<CaseOutcome> outcomes(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            const auto& c = cases[i];
            outcomes[i] = run_case(c.n, c.k, c.j, points[c.n]);
        }
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    // Merge in case order so the report is independent of scheduling.
    VerificationReport report;
    for (auto& o : outcomes) {
        report.cases_total += o.total;
        report.cases_passed += o.passed;
        for (auto& f : o.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

}  // namespace ouroboros
