#include <doctest.h>

#include "qzx/wordalg.hpp"
#include "support.hpp"

using namespace qzx;
using qzx::testing::Rng;

namespace {

const NCPoly A = NCPoly::gen_a();
const NCPoly B = NCPoly::gen_b();
const NCPoly I = NCPoly::identity();

NCPoly mono(const char* w, QRat c) { return NCPoly::monomial(Word(w), std::move(c)); }

} // namespace

TEST_CASE("free-algebra multiplication") {
    CHECK(A * B == mono("AB", QRat(1)));
    CHECK((A + B) * (A + B) ==
          mono("AA", QRat(1)) + mono("AB", QRat(1)) + mono("BA", QRat(1)) +
              mono("BB", QRat(1)));
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const NCPoly p = qzx::testing::random_ncpoly(rng);
        CHECK(I * p == p);
        CHECK(p * I == p);
    }
}

TEST_CASE("multiplication is associative") {
    Rng rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const NCPoly p = qzx::testing::random_ncpoly(rng);
        const NCPoly r = qzx::testing::random_ncpoly(rng);
        const NCPoly s = qzx::testing::random_ncpoly(rng);
        CHECK((p * r) * s == p * (r * s));
    }
}

TEST_CASE("q-commutator basics") {
    CHECK(q_commutator(A, B, 1) == mono("AB", QRat(1)) + mono("BA", -q_power(1)));
    CHECK(q_commutator(A, A, 0).is_zero());
    CHECK(q_commutator(B, A, 1) == q_commutator(A, B, -1).scaled(-q_power(1)));
}

TEST_CASE("q-antisymmetry on random pairs") {
    Rng rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        const NCPoly x = qzx::testing::random_ncpoly(rng);
        const NCPoly y = qzx::testing::random_ncpoly(rng);
        const int k = qzx::testing::rand_int(rng, -3, 3);
        CHECK(q_commutator(y, x, k) == q_commutator(x, y, -k).scaled(-q_power(k)));
    }
}

TEST_CASE("the self q-commutator does not vanish away from q = 1") {
    Rng rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        const NCPoly x = qzx::testing::random_ncpoly(rng);
        CHECK(q_commutator(x, x, 1) == (x * x).scaled(QRat(QPoly(1) - QPoly::variable())));
    }
}

TEST_CASE("nested commutator tower") {
    CHECK(nested_commutator(1) == mono("BA", QRat(1)) + mono("AB", -q_power(1)));
    CHECK(nested_commutator(2) ==
          mono("BAA", QRat(1)) +
              mono("ABA", -QRat(QPoly::monomial(1, 1) + QPoly::monomial(1, 2))) +
              mono("AAB", q_power(3)));
    for (int n = 1; n <= 5; ++n) {
        const NCPoly x = nested_commutator(n);
        CHECK(x.homogeneous_of_length(n + 1));
        for (const auto& [w, c] : x.terms()) CHECK(w.count('B') == 1);
    }
    CHECK_THROWS_AS(nested_commutator(0), invalid_order_error);
}

TEST_CASE("normal ordering under BA -> qAB") {
    CHECK(normal_order(mono("BA", QRat(1))) == mono("AB", q_power(1)));
    const NCPoly c2 =
        (mono("BA", QRat(1)) + mono("AB", -q_power(1))).scaled(q_int(2).inverse());
    CHECK(normal_order(c2).is_zero());
    CHECK(normal_order(mono("AAB", QRat(1))) == mono("AAB", QRat(1)));
    CHECK(normal_order(mono("BBAA", QRat(1))) == mono("AABB", q_power(4)));
}

TEST_CASE("normal ordering is idempotent and a homomorphism onto normal forms") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const NCPoly p = qzx::testing::random_ncpoly(rng);
        const NCPoly r = qzx::testing::random_ncpoly(rng);
        const int k = qzx::testing::rand_int(rng, -2, 2);
        CHECK(normal_order(normal_order(p, k), k) == normal_order(p, k));
        CHECK(normal_order(p * r, k) ==
              normal_order(normal_order(p, k) * normal_order(r, k), k));
    }
}

TEST_CASE("q-binomial expansion agrees with normal ordering") {
    // (A+B)^n normal-orders to sum_k gbinom(n,k) A^k B^{n-k} with the
    // Gaussian binomials from the Pascal recurrence; this pins the exact
    // convention the numeric clock/shift check relies on.
    const int max_n = 6;
    std::vector<std::vector<QRat>> gb(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        gb[n].assign(n + 1, QRat(0));
        gb[n][0] = QRat(1);
        gb[n][static_cast<size_t>(n)] = QRat(1);
        for (int k = 1; k < n; ++k)
            gb[n][static_cast<size_t>(k)] =
                gb[n - 1][k - 1] + q_power(k) * gb[n - 1][static_cast<size_t>(k)];
    }
    NCPoly power = I;
    for (int n = 1; n <= max_n; ++n) {
        power = power * (A + B);
        NCPoly expected;
        for (int k = 0; k <= n; ++k) {
            std::string w(static_cast<size_t>(k), 'A');
            w.append(static_cast<size_t>(n - k), 'B');
            expected += mono(w.c_str(), gb[n][static_cast<size_t>(k)]);
        }
        CHECK(normal_order(power) == expected);
    }
}

TEST_CASE("letter substitutions") {
    const NCPoly p = mono("AB", QRat(1)) + mono("AA", QRat(2)) + mono("B", QRat(3));
    CHECK(p.with_letter_zeroed('B') == mono("AA", QRat(2)));
    CHECK(p.every_word_contains('A') == false);
    CHECK((mono("AB", QRat(1)) + mono("BA", QRat(5))).every_word_contains('A'));
}

TEST_CASE("word validation") {
    CHECK_THROWS_AS(Word("AXB"), parse_error);
    CHECK(Word("").length() == 0);
    CHECK(Word("AB") < Word("BA"));
    CHECK(Word("BB") < Word("AAA"));
}
