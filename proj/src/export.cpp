#include "qzx/export.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <sstream>

namespace qzx {

namespace {

using Json = nlohmann::ordered_json;

Json exponent_to_json(const NCPoly& p) {
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms()) {
        Json t;
        t["word"] = w.letters();
        t["num"] = c.num().str();
        t["den"] = c.den().str();
        terms.push_back(std::move(t));
    }
    return terms;
}

NCPoly exponent_from_json(const Json& terms) {
    if (!terms.is_array()) throw parse_error("exponent must be an array of terms");
    NCPoly p;
    for (const auto& t : terms) {
        const Word w(t.at("word").get<std::string>());
        const QPoly num = QPoly::parse(t.at("num").get<std::string>());
        const QPoly den = QPoly::parse(t.at("den").get<std::string>());
        QRat c(num, den);
        if (c.num() != num || c.den() != den)
            throw parse_error("coefficient is not in canonical form: " +
                              t.at("num").get<std::string>() + "/" +
                              t.at("den").get<std::string>());
        if (c.is_zero()) throw parse_error("stored zero coefficient");
        if (!p.coeff(w).is_zero()) throw parse_error("duplicate word in exponent");
        p += NCPoly::monomial(w, c);
    }
    return p;
}

std::string variant_label(const Factorization& f) {
    return f.classical ? "classical" : to_string(f.variant);
}

// Render one coefficient for LaTeX: \frac{num}{den} or the bare numerator.
std::string latex_coeff(const QRat& c) {
    if (c.den().is_one()) {
        const std::string n = c.num().str();
        return "\\left(" + n + "\\right)";
    }
    return "\\frac{" + c.num().str() + "}{" + c.den().str() + "}";
}

std::string latex_exponent(const NCPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        if (!first) out << "+";
        first = false;
        out << latex_coeff(c) << w.letters();
    }
    if (first) out << "0";
    return out.str();
}

std::string latex_base(const Factorization& f, int base_exponent) {
    std::ostringstream out;
    switch (f.convention) {
        case Convention::eq_power:
        case Convention::e_lower:
            out << "e";
            break;
        case Convention::E_upper:
            out << "E";
            break;
    }
    if (base_exponent == 1)
        out << "_q";
    else
        out << "_{q^{" << base_exponent << "}}";
    return out.str();
}

} // namespace

Provenance make_provenance(std::string config) {
    Provenance p;
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm utc{};
    gmtime_r(&t, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    p.generated_at = buf;
    p.config = std::move(config);
    return p;
}

std::string serialize_factorization(const Factorization& f, const Provenance& prov) {
    Json doc;
    doc["qzx-format-version"] = kFormatVersion;
    doc["variant"] = variant_label(f);
    if (f.classical) doc["source-variant"] = to_string(f.variant);
    doc["base-convention"] = to_string(f.convention);
    doc["order"] = f.order;
    Json factors = Json::array();
    for (const auto& factor : f.factors) {
        Json jf;
        jf["grade"] = factor.grade;
        jf["base-exponent"] = factor.base_exponent;
        jf["exponent"] = exponent_to_json(factor.exponent);
        factors.push_back(std::move(jf));
    }
    doc["factors"] = std::move(factors);
    Json jp;
    jp["tool"] = kToolName;
    jp["version"] = kToolVersion;
    jp["generated-at"] = prov.generated_at;
    jp["config"] = prov.config;
    doc["provenance"] = std::move(jp);
    return doc.dump(2) + "\n";
}

Factorization parse_factorization(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed document: ") + e.what());
    }
    try {
        if (doc.at("qzx-format-version").get<int>() != kFormatVersion)
            throw parse_error("unsupported qzx-format-version");
        Factorization f;
        const std::string variant = doc.at("variant").get<std::string>();
        if (variant == "classical") {
            f.classical = true;
            f.variant = variant_from_string(doc.at("source-variant").get<std::string>());
        } else {
            f.variant = variant_from_string(variant);
        }
        f.convention = convention_from_string(doc.at("base-convention").get<std::string>());
        f.order = doc.at("order").get<int>();
        if (f.order < 0 || f.order > kMaxOrder) throw parse_error("order out of range");
        for (const auto& jf : doc.at("factors")) {
            Factor factor;
            factor.grade = jf.at("grade").get<int>();
            factor.base_exponent = jf.at("base-exponent").get<int>();
            factor.exponent = exponent_from_json(jf.at("exponent"));
            f.factors.push_back(std::move(factor));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed document: ") + e.what());
    }
}

std::string to_text(const Factorization& f) {
    std::ostringstream out;
    const char* lhs = nullptr;
    const char* prefix = nullptr;
    const bool product_form = f.variant != Variant::qbch;
    out << variant_label(f);
    if (f.classical) out << " (from " << to_string(f.variant) << ")";
    out << " factorization, order " << f.order << ", base convention "
        << to_string(f.convention) << "\n";
    if (product_form) {
        lhs = "exp[x(A+B)]";
        prefix = "exp[xA] exp[xB]";
        out << "  " << lhs << " = " << prefix << " * factors below\n";
    } else {
        out << "  exp[xA] exp[xB] = exp[S(x)],  S(x) = x(A+B) + terms below\n";
    }
    for (const auto& factor : f.factors) {
        if (product_form) {
            out << "  grade " << factor.grade << " (base q^" << factor.base_exponent
                << "): x^" << factor.grade << " * ( ";
        } else {
            out << "  grade " << factor.grade << ": x^" << factor.grade << " * ( ";
        }
        bool first = true;
        for (const auto& [w, c] : factor.exponent.terms()) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.str() << ")*" << w.letters();
        }
        if (first) out << "0";
        out << " )\n";
    }
    return out.str();
}

std::string to_latex(const Factorization& f) {
    std::ostringstream out;
    if (f.classical) {
        out << "e^{x(A+B)} = e^{xA}\\, e^{xB}";
        for (const auto& factor : f.factors) {
            out << "\\, e^{x^{" << factor.grade << "}\\left("
                << latex_exponent(factor.exponent) << "\\right)}";
        }
        out << "\n";
        return out.str();
    }
    if (f.variant == Variant::qbch) {
        out << "e_q^{xA}\\, e_q^{xB} = e_q^{x(A+B)";
        for (const auto& factor : f.factors)
            out << "+x^{" << factor.grade << "}\\left(" << latex_exponent(factor.exponent)
                << "\\right)";
        out << "}\n";
        return out.str();
    }
    const bool series_arg = f.convention != Convention::eq_power;
    const auto wrap = [&](const std::string& arg) {
        return series_arg ? "\\left(" + arg + "\\right)" : "^{" + arg + "}";
    };
    out << latex_base(f, 1) << wrap("x(A+B)") << " = " << latex_base(f, 1) << wrap("xA")
        << "\\, " << latex_base(f, 1) << wrap("xB");
    for (const auto& factor : f.factors) {
        std::ostringstream arg;
        arg << "x^{" << factor.grade << "}\\left(" << latex_exponent(factor.exponent)
            << "\\right)";
        out << "\\, " << latex_base(f, factor.base_exponent) << wrap(arg.str());
    }
    out << "\n";
    return out.str();
}

} // namespace qzx
