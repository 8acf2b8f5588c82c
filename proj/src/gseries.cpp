#include "qzx/gseries.hpp"

namespace qzx {

GradedSeries::GradedSeries(int order) : order_(order) {
    if (order < 0) throw invalid_order_error("series order must be nonnegative");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

GradedSeries GradedSeries::identity(int order) {
    GradedSeries s(order);
    s.coeffs_[0] = NCPoly::identity();
    return s;
}

GradedSeries GradedSeries::constant(const NCPoly& value, int order) {
    GradedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

bool GradedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

GradedSeries GradedSeries::truncated(int order) const {
    if (order > order_) throw invalid_order_error("cannot truncate to a higher order");
    GradedSeries s(order);
    for (int n = 0; n <= order; ++n) s.coeffs_[static_cast<size_t>(n)] = (*this)[n];
    return s;
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries s(order_);
    for (int n = 0; n <= order_; ++n) s.coeffs_[static_cast<size_t>(n)] = -(*this)[n];
    return s;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& rhs) {
    if (order_ != rhs.order_) throw order_mismatch_error("series order mismatch");
    for (int n = 0; n <= order_; ++n) coeffs_[static_cast<size_t>(n)] += rhs[n];
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& rhs) {
    if (order_ != rhs.order_) throw order_mismatch_error("series order mismatch");
    for (int n = 0; n <= order_; ++n) coeffs_[static_cast<size_t>(n)] -= rhs[n];
    return *this;
}

bool GradedSeries::graded_homogeneous() const {
    for (int n = 0; n <= order_; ++n)
        if (!(*this)[n].homogeneous_of_length(n)) return false;
    return true;
}

GradedSeries qexp(const NCPoly& w, int m, int g, int order) {
    if (m == 0) throw invalid_base_error("q-exponential base exponent must be nonzero");
    if (g < 1) throw invalid_order_error("q-exponential grade must be positive");
    GradedSeries s = GradedSeries::identity(order);
    NCPoly power = NCPoly::identity();
    QRat fact(1);
    for (int j = 1; g * j <= order; ++j) {
        power = power * w;
        fact *= q_int(static_cast<unsigned>(j), m);
        s.at(g * j) = power.scaled(fact.inverse());
    }
    return s;
}

GradedSeries exp_classical(const NCPoly& w, int g, int order) {
    if (g < 1) throw invalid_order_error("exponential grade must be positive");
    GradedSeries s = GradedSeries::identity(order);
    NCPoly power = NCPoly::identity();
    QRat fact(1);
    for (int j = 1; g * j <= order; ++j) {
        power = power * w;
        fact *= QRat(j);
        s.at(g * j) = power.scaled(fact.inverse());
    }
    return s;
}

GradedSeries series_mul(const GradedSeries& lhs, const GradedSeries& rhs) {
    if (lhs.order() != rhs.order()) throw order_mismatch_error("series order mismatch");
    const int n = lhs.order();
    GradedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (lhs[i].is_zero()) continue;
        for (int j = 0; j + i <= n; ++j) {
            if (rhs[j].is_zero()) continue;
            r.at(i + j) += lhs[i] * rhs[j];
        }
    }
    return r;
}

GradedSeries series_inverse(const GradedSeries& s) {
    if (s[0] != NCPoly::identity())
        throw not_invertible_error("series inverse requires constant term I");
    const int n = s.order();
    GradedSeries t = GradedSeries::identity(n);
    for (int k = 1; k <= n; ++k) {
        NCPoly acc;
        for (int j = 1; j <= k; ++j) acc += s[j] * t[k - j];
        t.at(k) = -acc;
    }
    return t;
}

namespace {

GradedSeries exp_of_impl(const GradedSeries& s, const QRat* base_ints, int order) {
    GradedSeries r = GradedSeries::identity(order);
    GradedSeries power = GradedSeries::identity(order);
    QRat fact(1);
    for (int j = 1; j <= order; ++j) {
        power = series_mul(power, s);
        fact *= base_ints[j];
        if (power.is_zero()) break;
        GradedSeries term(order);
        for (int n = 0; n <= order; ++n) term.at(n) = power[n].scaled(fact.inverse());
        r += term;
    }
    return r;
}

} // namespace

GradedSeries qexp_of(const GradedSeries& s, int m) {
    if (m == 0) throw invalid_base_error("q-exponential base exponent must be nonzero");
    if (!s[0].is_zero())
        throw not_invertible_error("series exponential requires zero constant term");
    const int order = s.order();
    std::vector<QRat> ints(static_cast<size_t>(order) + 1);
    for (int j = 1; j <= order; ++j) ints[static_cast<size_t>(j)] = q_int(static_cast<unsigned>(j), m);
    return exp_of_impl(s, ints.data(), order);
}

GradedSeries exp_classical_of(const GradedSeries& s) {
    if (!s[0].is_zero())
        throw not_invertible_error("series exponential requires zero constant term");
    const int order = s.order();
    std::vector<QRat> ints(static_cast<size_t>(order) + 1);
    for (int j = 1; j <= order; ++j) ints[static_cast<size_t>(j)] = QRat(j);
    return exp_of_impl(s, ints.data(), order);
}

GradedSeries conj_expand(int order) {
    const NCPoly a = NCPoly::gen_a();
    const NCPoly minus_qa = a.scaled(-q_power(1));
    const GradedSeries left = qexp(minus_qa, -1, 1, order);
    const GradedSeries middle = GradedSeries::constant(NCPoly::gen_b(), order);
    const GradedSeries right = qexp(a, 1, 1, order);
    return series_mul(series_mul(left, middle), right);
}

GradedSeries q_derivative(const GradedSeries& s) {
    if (s.order() == 0) return GradedSeries(0);
    GradedSeries r(s.order() - 1);
    for (int n = 0; n < s.order(); ++n)
        r.at(n) = s[n + 1].scaled(q_int(static_cast<unsigned>(n) + 1, 1));
    return r;
}

GradedSeries q_antiderivative(const GradedSeries& s) {
    GradedSeries r(s.order());
    for (int n = 1; n <= s.order(); ++n)
        r.at(n) = s[n - 1].scaled(q_int(static_cast<unsigned>(n), 1).inverse());
    return r;
}

GradedSeries scale_argument(const GradedSeries& s, int k) {
    GradedSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n)
        r.at(n) = s[n].scaled(q_power(static_cast<long>(k) * n));
    return r;
}

} // namespace qzx
