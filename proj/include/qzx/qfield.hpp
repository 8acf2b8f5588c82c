#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qzx/errors.hpp"

namespace qzx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse univariate polynomial in the formal parameter q with
/// arbitrary-precision integer coefficients. Terms are stored with strictly
/// increasing exponents and no zero coefficients; the zero polynomial is the
/// empty term list.
class QPoly {
  public:
    using Term = std::pair<unsigned, BigInt>;

    QPoly() = default;
    QPoly(long constant);
    explicit QPoly(BigInt constant);

    /// coeff * q^exp
    static QPoly monomial(BigInt coeff, unsigned exp);
    /// The polynomial q.
    static QPoly variable();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Degree in q; -1 for the zero polynomial.
    int degree() const;
    const BigInt& leading_coeff() const;
    const std::vector<Term>& terms() const { return terms_; }
    /// Coefficient of q^exp (zero if absent).
    BigInt coeff(unsigned exp) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);

    bool operator==(const QPoly& rhs) const = default;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const;
    /// this / content(); zero stays zero. Preserves the sign of the leading
    /// coefficient.
    QPoly primitive_part() const;
    /// Primitive gcd over Z[q] with positive leading coefficient
    /// (zero if both inputs are zero).
    static QPoly gcd(const QPoly& a, const QPoly& b);
    /// Exact quotient; throws error if d does not divide this over Z[q].
    QPoly divided_by(const QPoly& d) const;

    /// Exact evaluation at a rational point.
    Rational eval(const Rational& q0) const;

    /// Canonical text form, ascending exponents: "1+q+q^2", "-q", "0".
    std::string str() const;
    /// Inverse of str(); accepts any sum of integer-coefficient q-monomials.
    static QPoly parse(std::string_view text);

  private:
    std::vector<Term> terms_;
    void prune();
};

/// Exact rational function in q: a ratio of integer-coefficient polynomials
/// kept in canonical form (no common polynomial factor, no common integer
/// content, positive leading denominator coefficient). Structural equality of
/// canonical forms is semantic equality.
class QRat {
  public:
    QRat() : num_(), den_(1) {}
    QRat(long constant) : num_(constant), den_(1) {}
    QRat(const Rational& constant);
    QRat(QPoly numerator) : num_(std::move(numerator)), den_(1) {}
    QRat(QPoly numerator, QPoly denominator);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QRat operator-() const;
    QRat& operator+=(const QRat& rhs);
    QRat& operator-=(const QRat& rhs);
    QRat& operator*=(const QRat& rhs);
    QRat& operator/=(const QRat& rhs);
    friend QRat operator+(QRat lhs, const QRat& rhs) { return lhs += rhs; }
    friend QRat operator-(QRat lhs, const QRat& rhs) { return lhs -= rhs; }
    friend QRat operator*(QRat lhs, const QRat& rhs) { return lhs *= rhs; }
    friend QRat operator/(QRat lhs, const QRat& rhs) { return lhs /= rhs; }

    QRat inverse() const;

    bool operator==(const QRat& rhs) const = default;

    /// Exact evaluation at a rational point; throws pole_error when the
    /// reduced denominator vanishes there. Because the stored form is fully
    /// reduced, removable singularities evaluate correctly.
    Rational eval(const Rational& q0) const;

    /// The substitution q -> 1/q, renormalized to the canonical form.
    QRat subst_q_inverse() const;

    /// "num/den", with "/den" omitted when the denominator is 1.
    std::string str() const;

  private:
    QPoly num_, den_;
    void normalize();
};

/// The q-integer [n]_{q^k} = (1 - q^{kn})/(1 - q^k). Negative bases come out
/// with a pure q-power denominator. Throws invalid_base_error for k = 0.
QRat q_int(unsigned n, int k = 1);

/// [n]_{q^k}! = [n][n-1]...[1] with base q^k; [0]! = 1.
QRat q_factorial(unsigned n, int k = 1);

/// q^e as a rational function (denominator power for e < 0).
QRat q_power(long e);

} // namespace qzx
