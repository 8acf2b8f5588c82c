#include "qzx/wordalg.hpp"

#include <algorithm>

namespace qzx {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'A' && c != 'B')
            throw parse_error("word letters must be 'A' or 'B'");
}

int Word::count(char letter) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

Word Word::operator*(const Word& rhs) const {
    Word r;
    r.letters_ = letters_ + rhs.letters_;
    return r;
}

NCPoly NCPoly::identity() { return monomial(Word(), QRat(1)); }
NCPoly NCPoly::gen_a() { return monomial(Word::a(), QRat(1)); }
NCPoly NCPoly::gen_b() { return monomial(Word::b(), QRat(1)); }

NCPoly NCPoly::monomial(Word w, QRat coeff) {
    NCPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(std::move(w), std::move(coeff));
    return p;
}

QRat NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QRat() : it->second;
}

void NCPoly::add_term(const Word& w, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& lhs, const NCPoly& rhs) {
    NCPoly r;
    for (const auto& [wa, ca] : lhs.terms_)
        for (const auto& [wb, cb] : rhs.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

NCPoly NCPoly::scaled(const QRat& s) const {
    if (s.is_zero()) return {};
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        QRat sc = c * s;
        if (!sc.is_zero()) r.terms_.emplace(w, std::move(sc));
    }
    return r;
}

bool NCPoly::homogeneous_of_length(int n) const {
    for (const auto& [w, c] : terms_)
        if (w.length() != n) return false;
    return true;
}

bool NCPoly::every_word_contains(char letter) const {
    for (const auto& [w, c] : terms_)
        if (w.count(letter) == 0) return false;
    return true;
}

NCPoly NCPoly::evaluated_at(const Rational& q0) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, QRat(c.eval(q0)));
    return r;
}

NCPoly NCPoly::coeffs_q_inverse() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.subst_q_inverse());
    return r;
}

NCPoly NCPoly::with_letter_zeroed(char letter) const {
    NCPoly r;
    for (const auto& [w, c] : terms_)
        if (w.count(letter) == 0) r.terms_.emplace(w, c);
    return r;
}

NCPoly q_commutator(const NCPoly& x, const NCPoly& y, int k) {
    return x * y - (y * x).scaled(q_power(k));
}

NCPoly nested_commutator(int n) {
    if (n < 1) throw invalid_order_error("nested commutator level must be >= 1");
    NCPoly x = q_commutator(NCPoly::gen_b(), NCPoly::gen_a(), 1);
    for (int level = 2; level <= n; ++level)
        x = q_commutator(x, NCPoly::gen_a(), level);
    return x;
}

NCPoly normal_order(const NCPoly& p, int base_exp) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        // Each BA -> q^k AB swap removes exactly one inversion, so the
        // exhausted rewrite multiplies by q^{k * inversions}.
        long inversions = 0;
        long bs_seen = 0;
        for (char letter : w.letters()) {
            if (letter == 'B')
                ++bs_seen;
            else
                inversions += bs_seen;
        }
        std::string sorted(static_cast<size_t>(w.count('A')), 'A');
        sorted.append(static_cast<size_t>(w.count('B')), 'B');
        r += NCPoly::monomial(Word(std::move(sorted)),
                              c * q_power(static_cast<long>(base_exp) * inversions));
    }
    return r;
}

} // namespace qzx
