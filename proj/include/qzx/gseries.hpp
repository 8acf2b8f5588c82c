#pragma once

#include <vector>

#include "qzx/wordalg.hpp"

namespace qzx {

/// Default truncation order for derivations.
inline constexpr int kDefaultOrder = 6;
/// Hard cap: the x^N coefficient can touch up to 2^N words, which stays
/// tractable in exact arithmetic up to here.
inline constexpr int kMaxOrder = 10;

/// Formal power series in x truncated at a fixed order, with free-algebra
/// coefficients: coeffs[n] is the x^n coefficient.
class GradedSeries {
  public:
    explicit GradedSeries(int order);

    static GradedSeries identity(int order);
    static GradedSeries constant(const NCPoly& value, int order);

    int order() const { return order_; }
    const NCPoly& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
    NCPoly& at(int n) { return coeffs_[static_cast<size_t>(n)]; }

    bool is_zero() const;
    bool operator==(const GradedSeries& rhs) const = default;

    /// Copy truncated to a lower order.
    GradedSeries truncated(int order) const;

    GradedSeries operator-() const;
    GradedSeries& operator+=(const GradedSeries& rhs);
    GradedSeries& operator-=(const GradedSeries& rhs);
    friend GradedSeries operator+(GradedSeries lhs, const GradedSeries& rhs) {
        return lhs += rhs;
    }
    friend GradedSeries operator-(GradedSeries lhs, const GradedSeries& rhs) {
        return lhs -= rhs;
    }

    /// True when the x^n coefficient is homogeneous of word length n for all n.
    bool graded_homogeneous() const;

  private:
    int order_;
    std::vector<NCPoly> coeffs_;
};

/// The q-exponential factor e_{q^m} of x^g W, truncated at order N:
/// sum over j with g*j <= N of x^{gj} W^j / [j]_{q^m}!.
/// Throws invalid_base_error for m = 0.
GradedSeries qexp(const NCPoly& w, int m, int g, int order);

/// Classical exponential factor exp(x^g W) with integer factorials (the q=1
/// counterpart of qexp, used for classical-limit factorizations).
GradedSeries exp_classical(const NCPoly& w, int g, int order);

/// Cauchy product truncated at the common order.
/// Throws order_mismatch_error when the orders differ.
GradedSeries series_mul(const GradedSeries& lhs, const GradedSeries& rhs);

/// Two-sided inverse of a series with constant term I, by unit-triangular
/// recursion. Throws not_invertible_error otherwise.
GradedSeries series_inverse(const GradedSeries& s);

/// e_{q^m} of a series with zero constant term, via exact truncated powers:
/// sum of S^j / [j]_{q^m}!.
GradedSeries qexp_of(const GradedSeries& s, int m);

/// Classical counterpart of qexp_of (integer factorials).
GradedSeries exp_classical_of(const GradedSeries& s);

/// The conjugation series e_{1/q}^{-qxA} B e_q^{xA}; its x^n coefficient is
/// nested_commutator(n)/[n]! (and B at n = 0).
GradedSeries conj_expand(int order);

/// Jackson q-derivative: new x^n coefficient is [n+1] times the old x^{n+1}
/// coefficient; the truncation order drops by one.
GradedSeries q_derivative(const GradedSeries& s);

/// Formal q-antiderivative: new x^n coefficient is the old x^{n-1}
/// coefficient divided by [n], constant term zero. The truncation order is
/// kept, dropping what would be the x^{order+1} coefficient.
GradedSeries q_antiderivative(const GradedSeries& s);

/// The substitution x -> q^k x: the x^n coefficient picks up q^{kn}.
GradedSeries scale_argument(const GradedSeries& s, int k);

} // namespace qzx
