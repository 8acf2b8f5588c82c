#include <doctest.h>

#include "qzx/gseries.hpp"
#include "support.hpp"

using namespace qzx;
using qzx::testing::Rng;

namespace {

const NCPoly A = NCPoly::gen_a();
const NCPoly B = NCPoly::gen_b();

bool equal_through(const GradedSeries& s, const GradedSeries& t, int order) {
    for (int n = 0; n <= order; ++n)
        if (!(s[n] == t[n])) return false;
    return true;
}

GradedSeries times_poly(const NCPoly& p, const GradedSeries& s) {
    GradedSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r.at(n) = p * s[n];
    return r;
}

} // namespace

TEST_CASE("q-exponential of a single generator") {
    const GradedSeries e = qexp(A, 1, 1, 3);
    CHECK(e[0] == NCPoly::identity());
    CHECK(e[1] == A);
    CHECK(e[2] == (A * A).scaled(q_int(2).inverse()));
    CHECK(e[3] == (A * A * A).scaled((q_int(2) * q_int(3)).inverse()));
    CHECK(e.graded_homogeneous());
}

TEST_CASE("q-exponential edge cases") {
    CHECK(qexp(NCPoly::zero(), 3, 1, 5) == GradedSeries::identity(5));
    CHECK_THROWS_AS(qexp(A, 0, 1, 3), invalid_base_error);
    const NCPoly c = A + B.scaled(q_power(1));
    const GradedSeries e = qexp(c, 2, 2, 4);
    CHECK(e[1].is_zero());
    CHECK(e[2] == c);
    CHECK(e[4] == (c * c).scaled(QRat(QPoly(1) + QPoly::monomial(1, 2)).inverse()));
}

TEST_CASE("series multiplication") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = qzx::testing::rand_int(rng, 1, 4);
        const GradedSeries s = qzx::testing::random_series(rng, order);
        CHECK(series_mul(s, GradedSeries::identity(order)) == s);
        CHECK(series_mul(GradedSeries::identity(order), s) == s);
    }
    for (int trial = 0; trial < 15; ++trial) {
        const int order = 3;
        const GradedSeries s = qzx::testing::random_series(rng, order);
        const GradedSeries t = qzx::testing::random_series(rng, order);
        const GradedSeries u = qzx::testing::random_series(rng, order);
        CHECK(series_mul(series_mul(s, t), u) == series_mul(s, series_mul(t, u)));
    }
    CHECK_THROWS_AS(series_mul(GradedSeries(2), GradedSeries(3)), order_mismatch_error);
}

TEST_CASE("opposite-base exponentials invert each other") {
    Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const NCPoly w = qzx::testing::random_ncpoly(rng, 2, 2);
        int m = qzx::testing::rand_int(rng, -3, 3);
        if (m == 0) m = 1;
        const int g = qzx::testing::rand_int(rng, 1, 2);
        const int order = qzx::testing::rand_int(rng, 2, 4);
        const GradedSeries e = qexp(w, m, g, order);
        const GradedSeries einv = qexp(-w, -m, g, order);
        CHECK(series_mul(e, einv) == GradedSeries::identity(order));
        CHECK(series_mul(einv, e) == GradedSeries::identity(order));
    }
}

TEST_CASE("series inversion") {
    CHECK(series_inverse(GradedSeries::identity(4)) == GradedSeries::identity(4));
    // the generic unit-triangular inverse reproduces the closed form
    CHECK(series_inverse(qexp(A, 1, 1, 5)) == qexp(-A, -1, 1, 5));
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = qzx::testing::rand_int(rng, 1, 4);
        GradedSeries s = qzx::testing::random_series(rng, order);
        s.at(0) = NCPoly::identity();
        const GradedSeries t = series_inverse(s);
        CHECK(series_mul(s, t) == GradedSeries::identity(order));
        CHECK(series_mul(t, s) == GradedSeries::identity(order));
        CHECK(series_inverse(t) == s);
    }
    GradedSeries bad = GradedSeries::constant(A, 3);
    CHECK_THROWS_AS(series_inverse(bad), not_invertible_error);
}

TEST_CASE("conjugation expansion reproduces the nested commutator tower") {
    const int order = 5;
    const GradedSeries conj = conj_expand(order);
    CHECK(conj[0] == B);
    CHECK(conj[1] == q_commutator(B, A, 1));
    CHECK(conj[2] == q_commutator(q_commutator(B, A, 1), A, 2).scaled(
                         q_factorial(2).inverse()));
    for (int n = 1; n <= order; ++n)
        CHECK(conj[n] == nested_commutator(n).scaled(q_factorial(unsigned(n)).inverse()));
}

TEST_CASE("q-derivative") {
    // eigen-relation of the q-exponential
    Rng rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        const NCPoly w = qzx::testing::random_ncpoly(rng, 2, 2);
        const int order = qzx::testing::rand_int(rng, 1, 4);
        const GradedSeries e = qexp(w, 1, 1, order);
        CHECK(q_derivative(e) == times_poly(w, e).truncated(order - 1));
    }
    CHECK(q_derivative(GradedSeries::constant(B, 3)).is_zero());
    GradedSeries x2(3);
    x2.at(2) = NCPoly::identity();
    GradedSeries expect(2);
    expect.at(1) = NCPoly::identity().scaled(q_int(2));
    CHECK(q_derivative(x2) == expect);
}

TEST_CASE("q-antiderivative") {
    Rng rng(25);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = qzx::testing::rand_int(rng, 1, 4);
        const GradedSeries s = qzx::testing::random_series(rng, order);
        CHECK(q_derivative(q_antiderivative(s)) == s.truncated(order - 1));
    }
    CHECK(q_antiderivative(GradedSeries(3)).is_zero());
    GradedSeries xb(3);
    xb.at(1) = B;
    CHECK(q_antiderivative(GradedSeries::constant(B, 3)) == xb);
}

TEST_CASE("both q-Leibniz forms hold") {
    Rng rng(26);
    for (int trial = 0; trial < 50; ++trial) {
        const int order = qzx::testing::rand_int(rng, 1, 4);
        const GradedSeries f = qzx::testing::random_series(rng, order);
        const GradedSeries g = qzx::testing::random_series(rng, order);
        const GradedSeries lhs = q_derivative(series_mul(f, g));
        const GradedSeries rhs1 =
            series_mul(q_derivative(f), g.truncated(order - 1)) +
            series_mul(scale_argument(f, 1).truncated(order - 1), q_derivative(g));
        const GradedSeries rhs2 =
            series_mul(q_derivative(f), scale_argument(g, 1).truncated(order - 1)) +
            series_mul(f.truncated(order - 1), q_derivative(g));
        CHECK(lhs == rhs1);
        CHECK(lhs == rhs2);
    }
}

TEST_CASE("argument scaling") {
    Rng rng(27);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = qzx::testing::rand_int(rng, 0, 4);
        const GradedSeries s = qzx::testing::random_series(rng, order);
        CHECK(scale_argument(s, 0) == s);
        CHECK(scale_argument(scale_argument(s, 1), -1) == s);
        CHECK(scale_argument(scale_argument(s, 2), 1) == scale_argument(s, 3));
    }
}

TEST_CASE("defining differential equation of the q-exponential") {
    const int order = 5;
    const GradedSeries f = qexp(A + B, 1, 1, order);
    CHECK(q_derivative(f) == times_poly(A + B, f).truncated(order - 1));
}

TEST_CASE("series exponential of an inhomogeneous exponent") {
    // matches the single-factor exponential when only one grade is present
    const NCPoly c = A + B;
    GradedSeries s(4);
    s.at(2) = c;
    CHECK(qexp_of(s, 2) == qexp(c, 2, 2, 4));
    GradedSeries bad = GradedSeries::constant(c, 3);
    CHECK_THROWS_AS(qexp_of(bad, 1), not_invertible_error);
    CHECK_THROWS_AS(qexp_of(s, 0), invalid_base_error);
}

TEST_CASE("grade homogeneity of derivation-style series") {
    CHECK(qexp(A + B, 1, 1, 6).graded_homogeneous());
    CHECK(series_mul(qexp(A, 1, 1, 6), qexp(B, 1, 1, 6)).graded_homogeneous());
    CHECK(conj_expand(6).graded_homogeneous() == false); // constant term is B
}
