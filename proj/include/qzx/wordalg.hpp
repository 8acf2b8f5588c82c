#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qzx/qfield.hpp"

namespace qzx {

/// A word over the two-letter alphabet {A, B}; the empty word is the algebra
/// identity. Ordering is graded lexicographic with A < B, which fixes the
/// serialization order of polynomial terms.
class Word {
  public:
    Word() = default;
    explicit Word(std::string letters);

    static Word a() { return Word("A"); }
    static Word b() { return Word("B"); }

    const std::string& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    int count(char letter) const;

    /// Concatenation.
    Word operator*(const Word& rhs) const;

    bool operator==(const Word& rhs) const = default;
    bool operator<(const Word& rhs) const {
        if (letters_.size() != rhs.letters_.size())
            return letters_.size() < rhs.letters_.size();
        return letters_ < rhs.letters_;
    }

  private:
    std::string letters_;
};

/// Element of the free noncommutative algebra on A and B over the rational
/// functions of q: a finite map word -> coefficient with no stored zeros.
class NCPoly {
  public:
    NCPoly() = default;

    static NCPoly zero() { return {}; }
    /// The empty-word monomial with coefficient 1.
    static NCPoly identity();
    static NCPoly gen_a();
    static NCPoly gen_b();
    static NCPoly monomial(Word w, QRat coeff);

    const std::map<Word, QRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of a word (zero if absent).
    QRat coeff(const Word& w) const;
    size_t term_count() const { return terms_.size(); }

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& rhs);
    NCPoly& operator-=(const NCPoly& rhs);
    friend NCPoly operator+(NCPoly lhs, const NCPoly& rhs) { return lhs += rhs; }
    friend NCPoly operator-(NCPoly lhs, const NCPoly& rhs) { return lhs -= rhs; }
    /// Word-concatenation product extended bilinearly; noncommutative.
    friend NCPoly operator*(const NCPoly& lhs, const NCPoly& rhs);

    NCPoly scaled(const QRat& s) const;

    bool operator==(const NCPoly& rhs) const = default;

    /// True when every word has the given length.
    bool homogeneous_of_length(int n) const;
    /// True when every word contains at least one of the given letter.
    bool every_word_contains(char letter) const;

    /// Replace every coefficient by its exact value at q0 (as a constant).
    /// Throws pole_error if any coefficient has a pole there.
    NCPoly evaluated_at(const Rational& q0) const;
    /// Apply q -> 1/q to every coefficient.
    NCPoly coeffs_q_inverse() const;

    /// Kill every word containing the given letter (the substitution
    /// letter -> 0, an algebra homomorphism).
    NCPoly with_letter_zeroed(char letter) const;

  private:
    std::map<Word, QRat> terms_;
    void add_term(const Word& w, const QRat& c);
};

/// [X,Y]_{q^k} = XY - q^k YX. k = 0 gives the classical commutator.
NCPoly q_commutator(const NCPoly& x, const NCPoly& y, int k);

/// The tower of nested q-commutators with escalating bases:
/// level 1 is [B,A]_q, level n is [previous, A]_{q^n}. Homogeneous of word
/// length n+1 with exactly one B per word. Throws invalid_order_error for
/// n < 1.
NCPoly nested_commutator(int n);

/// Normal form in the quotient by the relation BA = q^{base_exp} AB: every
/// word is rewritten to A-before-B order, each transposition contributing a
/// factor q^{base_exp}. The default base_exp = 1 is the rewrite BA -> qAB.
NCPoly normal_order(const NCPoly& p, int base_exp = 1);

} // namespace qzx
