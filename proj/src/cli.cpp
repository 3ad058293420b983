#include "ouroboros/cli.hpp"

#include <cstdint>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ouroboros/constraint.hpp"
#include "ouroboros/error.hpp"
#include "ouroboros/generators.hpp"
#include "ouroboros/io.hpp"
#include "ouroboros/matrix.hpp"

namespace ouroboros {

namespace {

// Largest n for which trace-degree builds the matrix instead of using the formula.
constexpr std::size_t kTraceDegreeBuildLimit = 12;

std::size_t positive(std::int64_t v, const char* flag) {
    if (v < 1) throw DomainError(std::string(flag) + " must be >= 1, got " + std::to_string(v));
    return static_cast<std::size_t>(v);
}

std::size_t non_negative(std::int64_t v, const char* flag) {
    if (v < 0) throw DomainError(std::string(flag) + " must be >= 0, got " + std::to_string(v));
    return static_cast<std::size_t>(v);
}

struct Options {
    std::string format = "plain";
    std::uint64_t seed = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t j = 0;
    std::int64_t m = 0;
    std::int64_t n_max = 0;
    std::int64_t j_max = 0;
    std::int64_t samples = 0;
    bool standard = false;
    bool formula_only = false;
    std::string method = "leibniz";
};

std::string render(const Polynomial& p, const std::string& format) {
    if (format == "json") return render_json(p);
    if (format == "latex") return render_latex(p);
    return render_plain(p);
}

std::string render(const PolyMatrix& m, const std::string& format) {
    if (format == "json") return render_json(m);
    if (format == "latex") return render_latex(m);
    return render_plain(m);
}

std::string render_roots(std::size_t n, std::size_t k, const std::string& format) {
    auto [zero, other] = quadratic_roots(n, k);
    const VarSpace vs(n);
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["variable"] = vs.name(k);
        doc["roots"] = nlohmann::ordered_json::array(
            {nlohmann::ordered_json::parse(render_json(zero)), nlohmann::ordered_json::parse(render_json(other))});
        return doc.dump();
    }
    const std::string var = format == "latex" ? "c_" + (k < 10 ? std::to_string(k) : "{" + std::to_string(k) + "}")
                                              : vs.name(k);
    return var + " = " + render(zero, format) + "\n" + var + " = " + render(other, format);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ouroboros polynomial and matrix toolkit", "ouroboros"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "latex"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();

    std::function<int()> action;

    auto* gen = app.add_subcommand("gen", "Print the Ouroboros polynomial p(k, j) over c1..cn");
    gen->add_option("--n", opt.n)->required();
    gen->add_option("--k", opt.k)->required();
    gen->add_option("--j", opt.j)->required();
    gen->callback([&] {
        action = [&] {
            out << render(gen_p(positive(opt.n, "--n"), positive(opt.k, "--k"), positive(opt.j, "--j")), opt.format)
                << "\n";
            return kExitOk;
        };
    });

    auto* matrix = app.add_subcommand("matrix", "Print the n x m Ouroboros matrix");
    matrix->add_option("--n", opt.n)->required();
    matrix->add_option("--m", opt.m)->required();
    matrix->callback([&] {
        action = [&] {
            out << render(build_matrix(positive(opt.n, "--n"), positive(opt.m, "--m")), opt.format) << "\n";
            return kExitOk;
        };
    });

    auto* trace = app.add_subcommand("trace", "Product of the diagonal (or the usual sum with --standard)");
    trace->add_option("--n", opt.n)->required();
    trace->add_flag("--standard", opt.standard, "Sum the diagonal instead");
    trace->callback([&] {
        action = [&] {
            const PolyMatrix mat = build_matrix(positive(opt.n, "--n"), positive(opt.n, "--n"));
            out << render(opt.standard ? trace_sum(mat) : trace_product(mat), opt.format) << "\n";
            return kExitOk;
        };
    });

    auto* trace_degree = app.add_subcommand("trace-degree", "Degree of the product trace");
    trace_degree->add_option("--n", opt.n)->required();
    trace_degree->add_flag("--formula-only", opt.formula_only, "Use (n^2+3n)/2 without building the matrix");
    trace_degree->callback([&] {
        action = [&] {
            const std::size_t n = positive(opt.n, "--n");
            if (opt.formula_only) {
                out << trace_degree_formula(n) << "\n";
                return kExitOk;
            }
            if (n > kTraceDegreeBuildLimit) {
                throw DomainError("trace-degree builds the matrix only for n <= " +
                                  std::to_string(kTraceDegreeBuildLimit) + "; pass --formula-only for larger n");
            }
            out << degree_of_trace(build_matrix(n, n)) << "\n";
            return kExitOk;
        };
    });

    auto* det = app.add_subcommand("det", "Determinant of the square Ouroboros matrix");
    det->add_option("--n", opt.n)->required();
    det->add_option("--method", opt.method)->check(CLI::IsMember({"leibniz", "cofactor"}))->capture_default_str();
    det->callback([&] {
        action = [&] {
            const std::size_t n = positive(opt.n, "--n");
            const PolyMatrix mat = build_matrix(n, n);
            out << render(opt.method == "cofactor" ? determinant_cofactor(mat) : determinant_leibniz(mat), opt.format)
                << "\n";
            return kExitOk;
        };
    });

    auto* charpoly = app.add_subcommand("charpoly", "det(M - lambda I) of the square Ouroboros matrix");
    charpoly->add_option("--n", opt.n)->required();
    charpoly->callback([&] {
        action = [&] {
            const std::size_t n = positive(opt.n, "--n");
            out << render(char_poly(build_matrix(n, n)), opt.format) << "\n";
            return kExitOk;
        };
    });

    auto* verify = app.add_subcommand("verify", "Check that every p(k, j) vanishes on c1 + ... + cn = 1");
    verify->add_option("--n-max", opt.n_max)->required();
    verify->add_option("--j-max", opt.j_max)->required();
    verify->add_option("--samples", opt.samples)->required();
    verify->callback([&] {
        action = [&] {
            const VerificationReport report =
                verify_vanishing_suite(positive(opt.n_max, "--n-max"), positive(opt.j_max, "--j-max"),
                                       non_negative(opt.samples, "--samples"), opt.seed);
            out << (opt.format == "json" ? render_json(report) : render_plain(report)) << "\n";
            return report.all_passed() ? kExitOk : kExitVerificationFailed;
        };
    });

    auto* roots = app.add_subcommand("roots", "Both roots of the quadratic identity for c_k");
    roots->add_option("--n", opt.n)->required();
    roots->add_option("--k", opt.k)->required();
    roots->callback([&] {
        action = [&] {
            out << render_roots(positive(opt.n, "--n"), positive(opt.k, "--k"), opt.format) << "\n";
            return kExitOk;
        };
    });

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("ouroboros");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

}  // namespace ouroboros
