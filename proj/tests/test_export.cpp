#include <doctest.h>

#include "qzx/export.hpp"
#include "support.hpp"

using namespace qzx;

TEST_CASE("document round trip is lossless for every derivable factorization") {
    const Provenance prov = make_provenance("unit test");
    std::vector<Factorization> all;
    for (int order = 2; order <= 5; ++order) {
        all.push_back(derive_zassenhaus(Variant::escalating, order));
        all.push_back(derive_zassenhaus(Variant::uniform, order));
        all.push_back(derive_qbch(order));
    }
    all.push_back(classical_limit(derive_zassenhaus(Variant::escalating, 4)));
    all.push_back(classical_limit(derive_qbch(3)));
    all.push_back(transform_variant(derive_zassenhaus(Variant::escalating, 4),
                                    Convention::e_lower));
    all.push_back(transform_variant(derive_zassenhaus(Variant::escalating, 4),
                                    Convention::E_upper));
    for (const auto& f : all) {
        const std::string doc = serialize_factorization(f, prov);
        CHECK(parse_factorization(doc) == f);
    }
}

TEST_CASE("documents carry the format version and provenance") {
    const auto f = derive_zassenhaus(Variant::escalating, 2);
    const std::string doc = serialize_factorization(f, make_provenance("cfg line"));
    CHECK(doc.find("\"qzx-format-version\": 1") != std::string::npos);
    CHECK(doc.find("\"tool\": \"qzx\"") != std::string::npos);
    CHECK(doc.find("\"config\": \"cfg line\"") != std::string::npos);
    CHECK(doc.find("\"variant\": \"escalating\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_factorization("not json"), parse_error);
    CHECK_THROWS_AS(parse_factorization("{}"), parse_error);
    const char* wrong_version = R"({"qzx-format-version": 2, "variant": "escalating",
        "base-convention": "eq-power", "order": 2, "factors": []})";
    CHECK_THROWS_AS(parse_factorization(wrong_version), parse_error);
    // non-canonical coefficient: 2q/2 reduces to q
    const char* non_canonical = R"({"qzx-format-version": 1, "variant": "escalating",
        "base-convention": "eq-power", "order": 2,
        "factors": [{"grade": 2, "base-exponent": 2,
                     "exponent": [{"word": "AB", "num": "2q", "den": "2"}]}]})";
    CHECK_THROWS_AS(parse_factorization(non_canonical), parse_error);
    const char* bad_word = R"({"qzx-format-version": 1, "variant": "escalating",
        "base-convention": "eq-power", "order": 2,
        "factors": [{"grade": 2, "base-exponent": 2,
                     "exponent": [{"word": "AXB", "num": "q", "den": "1"}]}]})";
    CHECK_THROWS_AS(parse_factorization(bad_word), parse_error);
}

TEST_CASE("text rendering") {
    const auto f = derive_zassenhaus(Variant::escalating, 2);
    const std::string text = to_text(f);
    CHECK(text.find("grade 2 (base q^2)") != std::string::npos);
    CHECK(text.find("(-q/(1+q))*AB") != std::string::npos);
    CHECK(text.find("(1/(1+q))*BA") != std::string::npos);
}

TEST_CASE("latex rendering is deterministic and shows the escalating bases") {
    const auto f = derive_zassenhaus(Variant::escalating, 3);
    const std::string first = to_latex(f);
    const std::string second = to_latex(derive_zassenhaus(Variant::escalating, 3));
    CHECK(first == second);
    CHECK(first.find("e_q^{x(A+B)} = e_q^{xA}") != std::string::npos);
    CHECK(first.find("e_{q^{2}}^{x^{2}") != std::string::npos);
    CHECK(first.find("e_{q^{3}}^{x^{3}") != std::string::npos);
    CHECK(first.find("\\frac{-q}{1+q}AB") != std::string::npos);
    CHECK(first.find("\\frac{1}{1+q}BA") != std::string::npos);

    const auto cl = classical_limit(f);
    const std::string classical = to_latex(cl);
    CHECK(classical.find("e^{x(A+B)} = e^{xA}") != std::string::npos);
}
