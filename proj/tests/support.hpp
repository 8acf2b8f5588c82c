#pragma once

#include <random>
#include <string>

#include "qzx/gseries.hpp"

namespace qzx::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline QPoly random_qpoly(Rng& rng, int max_deg = 2, int max_coeff = 3,
                          bool allow_zero = true) {
    QPoly p;
    const int deg = rand_int(rng, 0, max_deg);
    for (int e = 0; e <= deg; ++e) {
        const int c = rand_int(rng, -max_coeff, max_coeff);
        if (c != 0) p += QPoly::monomial(c, static_cast<unsigned>(e));
    }
    if (!allow_zero && p.is_zero()) p += QPoly(1);
    return p;
}

inline QRat random_qrat(Rng& rng, int max_deg = 2) {
    return QRat(random_qpoly(rng, max_deg), random_qpoly(rng, max_deg, 3, false));
}

inline QRat random_nonzero_qrat(Rng& rng, int max_deg = 2) {
    QRat r = random_qrat(rng, max_deg);
    while (r.is_zero()) r = random_qrat(rng, max_deg);
    return r;
}

inline Word random_word(Rng& rng, int max_len = 3) {
    std::string s;
    const int len = rand_int(rng, 0, max_len);
    for (int i = 0; i < len; ++i) s += rand_int(rng, 0, 1) ? 'B' : 'A';
    return Word(s);
}

inline NCPoly random_ncpoly(Rng& rng, int max_terms = 3, int max_len = 3) {
    NCPoly p;
    const int terms = rand_int(rng, 0, max_terms);
    for (int i = 0; i < terms; ++i)
        p += NCPoly::monomial(random_word(rng, max_len), random_qrat(rng, 1));
    return p;
}

inline GradedSeries random_series(Rng& rng, int order, int max_terms = 2,
                                  int max_len = 2) {
    GradedSeries s(order);
    for (int n = 0; n <= order; ++n) s.at(n) = random_ncpoly(rng, max_terms, max_len);
    return s;
}

} // namespace qzx::testing
