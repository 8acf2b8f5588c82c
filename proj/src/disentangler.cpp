#include "qzx/disentangler.hpp"

#include <sstream>

namespace qzx {

namespace {

void check_order(int order, int cap) {
    if (order < 2 || order > cap || cap > kMaxOrder) {
        std::ostringstream msg;
        msg << "derivation order must be in [2, " << std::min(cap, kMaxOrder) << "]";
        throw invalid_order_error(msg.str());
    }
}

GradedSeries generator_sum_exp(int order) {
    return qexp(NCPoly::gen_a() + NCPoly::gen_b(), 1, 1, order);
}

/// e_q^{xA} e_q^{xB} truncated at the given order.
GradedSeries prefix_product(int order) {
    return series_mul(qexp(NCPoly::gen_a(), 1, 1, order),
                      qexp(NCPoly::gen_b(), 1, 1, order));
}

QRat one_minus_q_pow(int n) {
    // (1 - q^n) for n >= 1
    return QRat(QPoly(1) - QPoly::monomial(1, static_cast<unsigned>(n)));
}

} // namespace

std::string to_string(Variant v) {
    switch (v) {
        case Variant::escalating: return "escalating";
        case Variant::uniform: return "uniform";
        case Variant::qbch: return "qbch";
    }
    return "?";
}

std::string to_string(Convention c) {
    switch (c) {
        case Convention::eq_power: return "eq-power";
        case Convention::e_lower: return "e-lower";
        case Convention::E_upper: return "E-upper";
    }
    return "?";
}

Variant variant_from_string(const std::string& s) {
    if (s == "escalating") return Variant::escalating;
    if (s == "uniform") return Variant::uniform;
    if (s == "qbch") return Variant::qbch;
    throw parse_error("unknown variant: " + s);
}

Convention convention_from_string(const std::string& s) {
    if (s == "eq-power") return Convention::eq_power;
    if (s == "e-lower") return Convention::e_lower;
    if (s == "E-upper") return Convention::E_upper;
    throw parse_error("unknown base convention: " + s);
}

Factorization derive_zassenhaus(Variant variant, int order, int cap) {
    if (variant == Variant::qbch)
        throw invalid_order_error("qbch is derived by derive_qbch");
    check_order(order, cap);

    Factorization f;
    f.variant = variant;
    f.order = order;

    // Left-multiply by the factor inverses in reverse order, then peel the
    // lowest surviving grade one step at a time.
    GradedSeries h = series_mul(
        series_inverse(qexp(NCPoly::gen_b(), 1, 1, order)),
        series_mul(series_inverse(qexp(NCPoly::gen_a(), 1, 1, order)),
                   generator_sum_exp(order)));
    for (int n = 2; n <= order; ++n) {
        const NCPoly exponent = h[n];
        const int base = variant == Variant::escalating ? n : 1;
        h = series_mul(series_inverse(qexp(exponent, base, n, order)), h);
        f.factors.push_back({n, base, exponent});
    }
    if (!(h == GradedSeries::identity(order)))
        throw error("peeling failed to reduce to the identity");
    return f;
}

Factorization derive_qbch(int order, int cap) {
    check_order(order, cap);

    Factorization f;
    f.variant = Variant::qbch;
    f.order = order;

    const GradedSeries product = prefix_product(order);
    GradedSeries exponent(order);
    exponent.at(1) = NCPoly::gen_a() + NCPoly::gen_b();
    for (int n = 2; n <= order; ++n) {
        // Z_n is the gap at x^n between the product and the exponential of
        // the partial sum; it enters the exponential linearly at grade n.
        const NCPoly z = product[n] - qexp_of(exponent, 1)[n];
        exponent.at(n) = z;
        f.factors.push_back({n, 1, z});
    }
    if (!(qexp_of(exponent, 1) == product))
        throw error("q-BCH exponent failed to reproduce the product");
    return f;
}

Factorization classical_limit(const Factorization& f) {
    Factorization r = f;
    r.classical = true;
    for (auto& factor : r.factors) {
        try {
            factor.exponent = factor.exponent.evaluated_at(Rational(1));
        } catch (const pole_error&) {
            std::ostringstream msg;
            msg << "pole at q = 1 in the grade-" << factor.grade << " exponent";
            throw pole_error(msg.str());
        }
    }
    return r;
}

Factorization transform_variant(const Factorization& f, Convention target) {
    if (f.variant != Variant::escalating || f.classical ||
        f.convention != Convention::eq_power)
        throw invalid_order_error(
            "convention transforms take an escalating factorization in the "
            "eq-power convention");
    if (target == Convention::eq_power) return f;

    Factorization r = f;
    r.convention = target;
    const QRat one_minus_q = one_minus_q_pow(1);
    for (auto& factor : r.factors) {
        NCPoly w = factor.exponent;
        if (target == Convention::E_upper) w = w.coeffs_q_inverse();
        // A -> A/(1-q), B -> B/(1-q) scales the grade-n exponent by
        // (1-q)^{-n}; converting e_{q^n}^{W} to the target series multiplies
        // by (1-q^n).
        QRat scale = one_minus_q_pow(factor.grade);
        for (int j = 0; j < factor.grade; ++j) scale /= one_minus_q;
        factor.exponent = w.scaled(scale);
    }
    return r;
}

GradedSeries verify_reconstruction(const Factorization& f, int order) {
    if (f.order < order)
        throw order_mismatch_error("factorization was derived at a lower order");

    const NCPoly a = NCPoly::gen_a();
    const NCPoly b = NCPoly::gen_b();
    const NCPoly sum = a + b;

    if (f.variant == Variant::qbch) {
        GradedSeries exponent(order);
        exponent.at(1) = sum;
        for (const auto& factor : f.factors)
            if (factor.grade <= order) exponent.at(factor.grade) = factor.exponent;
        const GradedSeries lhs =
            f.classical ? exp_classical_of(exponent) : qexp_of(exponent, 1);
        const GradedSeries rhs =
            f.classical ? series_mul(exp_classical(a, 1, order), exp_classical(b, 1, order))
                        : prefix_product(order);
        return lhs - rhs;
    }

    GradedSeries product(order);
    GradedSeries lhs(order);
    if (f.classical) {
        product = series_mul(exp_classical(a, 1, order), exp_classical(b, 1, order));
        for (const auto& factor : f.factors) {
            if (factor.grade > order) continue;
            product = series_mul(product, exp_classical(factor.exponent, factor.grade, order));
        }
        lhs = exp_classical(sum, 1, order);
    } else {
        switch (f.convention) {
            case Convention::eq_power: {
                product = prefix_product(order);
                for (const auto& factor : f.factors) {
                    if (factor.grade > order) continue;
                    product = series_mul(
                        product, qexp(factor.exponent, factor.base_exponent, factor.grade, order));
                }
                lhs = generator_sum_exp(order);
                break;
            }
            case Convention::e_lower:
            case Convention::E_upper: {
                // e_q(x^g W) = e_q^{x^g W/(1-q)}; E_q additionally inverts the
                // base of every exponential.
                const int dir = f.convention == Convention::e_lower ? 1 : -1;
                const auto factor_series = [&](const NCPoly& w, int base, int grade) {
                    const QRat scale = one_minus_q_pow(base).inverse();
                    return qexp(w.scaled(scale), dir * base, grade, order);
                };
                product = series_mul(factor_series(a, 1, 1), factor_series(b, 1, 1));
                for (const auto& factor : f.factors) {
                    if (factor.grade > order) continue;
                    product = series_mul(
                        product, factor_series(factor.exponent, factor.base_exponent, factor.grade));
                }
                lhs = factor_series(sum, 1, 1);
                break;
            }
        }
    }
    return lhs - product;
}

namespace closed_form {

namespace {

const NCPoly& gen_a() {
    static const NCPoly a = NCPoly::gen_a();
    return a;
}
const NCPoly& gen_b() {
    static const NCPoly b = NCPoly::gen_b();
    return b;
}

void require_grade(int grade, int lo, int hi) {
    if (grade < lo || grade > hi)
        throw invalid_order_error("no closed form stored for this grade");
}

} // namespace

NCPoly escalating_exponent(int grade) {
    require_grade(grade, 2, 4);
    const NCPoly& a = gen_a();
    const NCPoly& b = gen_b();
    const NCPoly ab1 = q_commutator(a, b, -1); // [A,B]_{1/q}
    switch (grade) {
        case 2:
            return ab1.scaled(-q_power(1) / q_int(2));
        case 3: {
            const NCPoly t1 = q_commutator(a, ab1, -2).scaled(q_power(3) / q_factorial(3));
            const NCPoly t2 = q_commutator(ab1, b, 1).scaled(-q_power(1) / q_int(3));
            return t1 + t2;
        }
        default: {
            const NCPoly inner = q_commutator(a, ab1, -2);
            const NCPoly t1 = q_commutator(a, inner, -3).scaled(-q_power(6));
            const NCPoly t2 = q_commutator(inner, b, 1).scaled(q_power(3) * q_int(3));
            const NCPoly t3 =
                q_commutator(q_commutator(ab1, b, 1), b, 2).scaled(-q_power(1) * q_int(3));
            return (t1 + t2 + t3).scaled(q_factorial(4).inverse());
        }
    }
}

NCPoly escalating_exponent_alt(int grade) {
    require_grade(grade, 2, 3);
    const NCPoly ba = q_commutator(gen_b(), gen_a(), 1); // [B,A]_q
    if (grade == 2) return ba.scaled(q_int(2).inverse());
    const NCPoly t1 = q_commutator(ba, gen_b(), 1).scaled(q_int(3).inverse());
    const NCPoly t2 = q_commutator(ba, gen_a(), 2).scaled(q_factorial(3).inverse());
    return t1 + t2;
}

NCPoly uniform_exponent(int grade) {
    require_grade(grade, 2, 4);
    const NCPoly& a = gen_a();
    const NCPoly& b = gen_b();
    const NCPoly ba = q_commutator(b, a, 1);
    switch (grade) {
        case 2:
            return ba.scaled(q_int(2).inverse());
        case 3:
            return q_commutator(ba, a, 2).scaled(q_factorial(3).inverse()) +
                   q_commutator(ba, b, 1).scaled(q_int(3).inverse());
        default: {
            const QRat inv24 = (q_int(2) * q_int(4)).inverse();
            const NCPoly t1 =
                q_commutator(q_commutator(ba, a, 2), a, 3).scaled(q_factorial(4).inverse());
            const NCPoly t2 = q_commutator(q_commutator(ba, b, 2), b, 3).scaled(inv24);
            const NCPoly t3 = q_commutator(q_commutator(ba, a, 2), b, 1).scaled(inv24);
            const NCPoly t4 = q_commutator(ba, ba, 1).scaled(
                q_power(1) / (q_int(2) * q_int(2) * q_int(4)));
            return t1 + t2 + t3 + t4;
        }
    }
}

NCPoly qbch_term(int grade) {
    require_grade(grade, 2, 3);
    const NCPoly& a = gen_a();
    const NCPoly& b = gen_b();
    if (grade == 2) return q_commutator(a, b, -1).scaled(q_power(1) / q_int(2));
    const NCPoly ab = q_commutator(a, b, 1);
    const NCPoly sum = q_commutator(a, ab, -1) + q_commutator(ab, b, -1);
    return sum.scaled(q_power(2) / (q_int(2) * QRat(6)));
}

NCPoly classical_zassenhaus_exponent(int grade) {
    require_grade(grade, 2, 4);
    const NCPoly& a = gen_a();
    const NCPoly& b = gen_b();
    const NCPoly ab = q_commutator(a, b, 0);
    switch (grade) {
        case 2:
            return ab.scaled(QRat(Rational(-1, 2)));
        case 3:
            return q_commutator(a, ab, 0).scaled(QRat(Rational(1, 6))) +
                   q_commutator(ab, b, 0).scaled(QRat(Rational(-1, 3)));
        default: {
            const NCPoly t1 = q_commutator(a, q_commutator(a, ab, 0), 0).scaled(QRat(-1));
            const NCPoly t2 = q_commutator(q_commutator(a, ab, 0), b, 0).scaled(QRat(3));
            const NCPoly t3 = q_commutator(q_commutator(ab, b, 0), b, 0).scaled(QRat(-3));
            return (t1 + t2 + t3).scaled(QRat(Rational(1, 24)));
        }
    }
}

NCPoly classical_bch_term(int grade) {
    require_grade(grade, 2, 3);
    const NCPoly ab = q_commutator(gen_a(), gen_b(), 0);
    if (grade == 2) return ab.scaled(QRat(Rational(1, 2)));
    const NCPoly sum = q_commutator(gen_a(), ab, 0) + q_commutator(ab, gen_b(), 0);
    return sum.scaled(QRat(Rational(1, 12)));
}

} // namespace closed_form

ClosedFormComparison compare_closed_form(std::string label, int grade,
                                         const NCPoly& derived, const NCPoly& reference) {
    ClosedFormComparison c;
    c.label = std::move(label);
    c.grade = grade;
    const NCPoly diff = derived - reference;
    c.match = diff.is_zero();
    for (const auto& [w, unused] : diff.terms())
        c.diffs.push_back({w, derived.coeff(w), reference.coeff(w)});
    return c;
}

std::string format_comparison(const ClosedFormComparison& c) {
    std::ostringstream out;
    if (c.match) {
        out << c.label << " (grade " << c.grade << "): matches the closed form exactly";
        return out.str();
    }
    out << c.label << " (grade " << c.grade
        << "): DISCREPANCY, derived result kept as ground truth\n";
    for (const auto& d : c.diffs)
        out << "    word " << d.word.letters() << ": derived " << d.derived.str()
            << "  vs closed form " << d.reference.str() << "\n";
    return out.str();
}

} // namespace qzx
