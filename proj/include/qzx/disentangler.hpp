#pragma once

#include <string>
#include <vector>

#include "qzx/gseries.hpp"

namespace qzx {

enum class Variant { escalating, uniform, qbch };

/// Base convention of the exponentials in a factorization:
///   eq_power — the Jackson series sum x^n/[n]! (the derivation convention);
///   e_lower  — e_q(x) = e_q^{x/(1-q)};
///   E_upper  — E_q(x) = e_{1/q}^{x/(1-q)}.
enum class Convention { eq_power, e_lower, E_upper };

/// One exponential factor: the q-exponential with base q^base_exponent of
/// x^grade times the exponent polynomial. For the qbch variant the entries
/// are instead the additive x^grade terms of the single exponent series.
struct Factor {
    int grade = 0;
    int base_exponent = 1;
    NCPoly exponent;

    bool operator==(const Factor& rhs) const = default;
};

/// An ordered disentanglement of e_q^{x(A+B)} (or, for qbch, the combined
/// exponent of e_q^{xA} e_q^{xB}) derived to a fixed truncation order. The
/// grade-0/1 prefix e_q^{xA} e_q^{xB} is implicit; factors start at grade 2.
struct Factorization {
    Variant variant = Variant::escalating;
    Convention convention = Convention::eq_power;
    /// True after the q -> 1 limit: coefficients are rational constants and
    /// all exponentials are classical.
    bool classical = false;
    int order = 0;
    std::vector<Factor> factors;

    bool operator==(const Factorization& rhs) const = default;
};

std::string to_string(Variant v);
std::string to_string(Convention c);
Variant variant_from_string(const std::string& s);
Convention convention_from_string(const std::string& s);

/// Order-by-order peeling of e_q^{x(A+B)} into the prefix e_q^{xA} e_q^{xB}
/// followed by one factor per grade 2..order; the escalating variant uses
/// base q^n at grade n, the uniform variant base q throughout. The peel is
/// certified internally: the residual after removing every factor must be
/// the identity through the truncation order.
Factorization derive_zassenhaus(Variant variant, int order, int cap = kMaxOrder);

/// Solves e_q^{S(x)} = e_q^{xA} e_q^{xB} for S(x) = x(A+B) + sum x^n Z_n,
/// grade by grade; each Z_n enters linearly through the j = 1 term of the
/// exponential sum.
Factorization derive_qbch(int order, int cap = kMaxOrder);

/// Evaluate every coefficient at q = 1. Throws pole_error (with the grade
/// identified) if any coefficient has a pole there.
Factorization classical_limit(const Factorization& f);

/// Rewrite an escalating factorization in the e_q(x) or E_q(x) convention.
/// The generators are rescaled by 1/(1-q) and each grade-n factor exponent
/// becomes (1-q^n)/(1-q)^n times the old one (with every coefficient mapped
/// through q -> 1/q first for E_upper).
Factorization transform_variant(const Factorization& f, Convention target);

/// Multiply all factors in order and subtract the left-hand side the variant
/// factorizes; zero through the given order certifies the factorization.
GradedSeries verify_reconstruction(const Factorization& f, int order);

/// Closed nested-q-commutator expressions for the low grades, used as
/// cross-checks of the solver output (which is authoritative when they
/// disagree).
namespace closed_form {

/// Escalating-base exponents, grades 2..4, in the [A,B]_{1/q} form.
NCPoly escalating_exponent(int grade);
/// The equivalent [B,A]_q form of the escalating exponents, grades 2..3.
NCPoly escalating_exponent_alt(int grade);
/// Uniform-base exponents as printed in the source formulas, grades 2..4.
NCPoly uniform_exponent(int grade);
/// q-BCH exponent terms as printed, grades 2..3.
NCPoly qbch_term(int grade);
/// Classical Zassenhaus exponents, grades 2..4.
NCPoly classical_zassenhaus_exponent(int grade);
/// Classical BCH exponent terms, grades 2..3.
NCPoly classical_bch_term(int grade);

} // namespace closed_form

/// Per-word difference between a derived exponent and a closed-form
/// reference for the same grade.
struct TermDiff {
    Word word;
    QRat derived;
    QRat reference;
};

/// Machine-checked comparison of one derived exponent against its closed
/// form; `diffs` lists every word whose coefficients disagree.
struct ClosedFormComparison {
    std::string label;
    int grade = 0;
    bool match = false;
    std::vector<TermDiff> diffs;
};

ClosedFormComparison compare_closed_form(std::string label, int grade,
                                         const NCPoly& derived, const NCPoly& reference);

std::string format_comparison(const ClosedFormComparison& c);

} // namespace qzx
