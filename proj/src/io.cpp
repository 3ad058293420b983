#include "ouroboros/io.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

#include "ouroboros/error.hpp"

namespace ouroboros {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vars_json(const VarSpace& vs) {
    ordered_json vars = ordered_json::array();
    for (std::size_t i = 1; i <= vs.var_count(); ++i) vars.push_back(vs.name(i));
    return vars;
}

ordered_json terms_json(const Polynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : p.terms()) {
        ordered_json exps = ordered_json::array();
        for (Exponent e : t.monomial.exponents()) exps.push_back(e);
        terms.push_back(ordered_json{{"coeff", t.coefficient.to_string()}, {"exps", std::move(exps)}});
    }
    return terms;
}

VarSpace parse_vars(const ordered_json& doc) {
    if (!doc.contains("vars")) throw ParseError("vars", "missing field");
    const auto& vars = doc["vars"];
    if (!vars.is_array() || vars.empty()) throw ParseError("vars", "expected a non-empty array");
    std::size_t n = vars.size();
    bool lambda = false;
    if (vars.back().is_string() && vars.back().get<std::string>() == "lambda") {
        lambda = true;
        --n;
    }
    if (n == 0) throw ParseError("vars", "at least one c variable is required");
    for (std::size_t i = 0; i < n; ++i) {
        const std::string field = "vars[" + std::to_string(i) + "]";
        if (!vars[i].is_string()) throw ParseError(field, "expected a string");
        if (vars[i].get<std::string>() != "c" + std::to_string(i + 1)) {
            throw ParseError(field, "expected \"c" + std::to_string(i + 1) + "\"");
        }
    }
    return VarSpace(n, lambda);
}

Term parse_term(const ordered_json& item, std::size_t index, const VarSpace& vs) {
    const std::string base = "terms[" + std::to_string(index) + "]";
    if (!item.is_object()) throw ParseError(base, "expected an object");

    if (!item.contains("coeff")) throw ParseError(base + ".coeff", "missing field");
    const auto& coeff = item["coeff"];
    if (!coeff.is_string()) throw ParseError(base + ".coeff", "expected a \"num/den\" string");
    Rational value;
    try {
        value = Rational::parse(coeff.get<std::string>());
    } catch (const DomainError& e) {
        throw ParseError(base + ".coeff", e.what());
    }

    if (!item.contains("exps")) throw ParseError(base + ".exps", "missing field");
    const auto& exps = item["exps"];
    if (!exps.is_array()) throw ParseError(base + ".exps", "expected an array");
    if (exps.size() != vs.var_count()) {
        throw ParseError(base + ".exps", "expected " + std::to_string(vs.var_count()) + " exponents, got " +
                                             std::to_string(exps.size()));
    }
    std::vector<Exponent> out;
    out.reserve(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const std::string field = base + ".exps[" + std::to_string(i) + "]";
        const auto& e = exps[i];
        if (e.is_number_integer() && e.get<std::int64_t>() < 0) throw ParseError(field, "negative exponent");
        if (!e.is_number_unsigned()) throw ParseError(field, "expected a non-negative integer");
        auto v = e.get<std::uint64_t>();
        if (v > std::numeric_limits<Exponent>::max()) throw ParseError(field, "exponent too large");
        out.push_back(static_cast<Exponent>(v));
    }
    return Term{std::move(value), Monomial(std::move(out))};
}

// Shared layout for the LaTeX and plain renderers.
struct Style {
    bool latex;

    std::string variable(const VarSpace& vs, std::size_t index) const {
        if (index == vs.n() + 1) return latex ? "\\lambda" : "lambda";
        std::string digits = std::to_string(index);
        if (!latex) return "c" + digits;
        return digits.size() == 1 ? "c_" + digits : "c_{" + digits + "}";
    }

    std::string power(Exponent e) const {
        std::string digits = std::to_string(e);
        if (latex && digits.size() > 1) return "^{" + digits + "}";
        return "^" + digits;
    }

    // |r|, written as a standalone number.
    std::string magnitude(const Rational& r) const {
        const Rational a = r.sign() < 0 ? -r : r;
        if (a.is_integer()) return a.numerator_string();
        if (latex) return "\\frac{" + a.numerator_string() + "}{" + a.denominator_string() + "}";
        return a.to_string();
    }

    // |r| as a prefix to a non-trivial monomial; omitted when 1.
    std::string factor(const Rational& r) const {
        const Rational a = r.sign() < 0 ? -r : r;
        if (a.is_one()) return "";
        if (a.is_integer() || latex) return magnitude(a);
        return "(" + a.to_string() + ")";
    }

    std::string polynomial(const Polynomial& p) const {
        if (p.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : p.terms()) {
            if (t.coefficient.sign() < 0) {
                out += "-";
            } else if (!first) {
                out += "+";
            }
            first = false;
            if (t.monomial.is_one()) {
                out += magnitude(t.coefficient);
                continue;
            }
            out += factor(t.coefficient);
            for (std::size_t i = 0; i < t.monomial.size(); ++i) {
                Exponent e = t.monomial[i];
                if (e == 0) continue;
                out += variable(p.varspace(), i + 1);
                if (e > 1) out += power(e);
            }
        }
        return out;
    }
};

}  // namespace

std::string render_json(const Polynomial& p) {
    ordered_json doc;
    doc["vars"] = vars_json(p.varspace());
    doc["terms"] = terms_json(p);
    return doc.dump();
}

std::string render_json(const PolyMatrix& m) {
    ordered_json doc;
    doc["vars"] = vars_json(m.varspace());
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(terms_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump();
}

std::string render_json(const VerificationReport& r) {
    ordered_json doc;
    doc["cases_total"] = r.cases_total;
    doc["cases_passed"] = r.cases_passed;
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.failures) {
        failures.push_back(ordered_json{{"n", f.n}, {"k", f.k}, {"j", f.j}, {"detail", f.detail}});
    }
    doc["failures"] = std::move(failures);
    return doc.dump();
}

Polynomial parse_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("document", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
    const VarSpace vs = parse_vars(doc);

    if (!doc.contains("terms")) throw ParseError("terms", "missing field");
    const auto& terms = doc["terms"];
    if (!terms.is_array()) throw ParseError("terms", "expected an array");
    std::vector<Term> parsed;
    parsed.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) parsed.push_back(parse_term(terms[i], i, vs));
    return Polynomial::from_terms(vs, std::move(parsed));
}

std::string render_latex(const Polynomial& p) { return Style{true}.polynomial(p); }

std::string render_plain(const Polynomial& p) { return Style{false}.polynomial(p); }

std::string render_latex(const PolyMatrix& m) {
    std::ostringstream os;
    os << "\\begin{bmatrix}\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) os << " & ";
            os << render_latex(m.at(r, c));
        }
        if (r + 1 < m.rows()) os << " \\\\";
        os << "\n";
    }
    os << "\\end{bmatrix}";
    return os.str();
}

std::string render_plain(const PolyMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0) os << "\n";
        os << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) os << ", ";
            os << render_plain(m.at(r, c));
        }
        os << "]";
    }
    return os.str();
}

std::string render_plain(const VerificationReport& r) {
    std::ostringstream os;
    os << "cases_total: " << r.cases_total << "\n";
    os << "cases_passed: " << r.cases_passed << "\n";
    os << "failures: " << r.failures.size();
    for (const auto& f : r.failures) {
        os << "\n  n=" << f.n << " k=" << f.k << " j=" << f.j << ": " << f.detail;
    }
    return os.str();
}

}  // namespace ouroboros
