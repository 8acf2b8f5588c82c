#include "qzx/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qzx {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Dense coefficient vector, index = exponent.
std::vector<BigInt> to_dense(const QPoly& p) {
    std::vector<BigInt> d(static_cast<size_t>(std::max(p.degree(), -1) + 1));
    for (const auto& [e, c] : p.terms()) d[e] = c;
    return d;
}

QPoly from_dense(const std::vector<BigInt>& d) {
    QPoly r;
    for (size_t e = 0; e < d.size(); ++e)
        if (d[e] != 0) r += QPoly::monomial(d[e], static_cast<unsigned>(e));
    return r;
}

int dense_degree(const std::vector<BigInt>& d) {
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
        if (d[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// Pseudo-remainder of a by b over Z[q]: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const int db = dense_degree(b);
    const BigInt& lb = b[static_cast<size_t>(db)];
    int da = dense_degree(a);
    while (da >= db) {
        const BigInt top = a[static_cast<size_t>(da)];
        for (auto& c : a) c *= lb;
        const int shift = da - db;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + shift)] -= top * b[static_cast<size_t>(i)];
        da = dense_degree(a);
    }
    a.resize(static_cast<size_t>(da + 1));
    return a;
}

} // namespace

QPoly::QPoly(long constant) {
    if (constant != 0) terms_.push_back({0u, BigInt(constant)});
}

QPoly::QPoly(BigInt constant) {
    if (constant != 0) terms_.push_back({0u, std::move(constant)});
}

QPoly QPoly::monomial(BigInt coeff, unsigned exp) {
    QPoly p;
    if (coeff != 0) p.terms_.push_back({exp, std::move(coeff)});
    return p;
}

QPoly QPoly::variable() { return monomial(1, 1); }

bool QPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int QPoly::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.back().first);
}

const BigInt& QPoly::leading_coeff() const {
    static const BigInt zero{0};
    return terms_.empty() ? zero : terms_.back().second;
}

BigInt QPoly::coeff(unsigned exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, unsigned e) { return t.first < e; });
    return (it != terms_.end() && it->first == exp) ? it->second : BigInt(0);
}

void QPoly::prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second == 0; }),
                 terms_.end());
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() && j != rhs.terms_.end()) {
        if (i->first < j->first) {
            merged.push_back(*i++);
        } else if (j->first < i->first) {
            merged.push_back(*j++);
        } else {
            BigInt c = i->second + j->second;
            if (c != 0) merged.push_back({i->first, std::move(c)});
            ++i, ++j;
        }
    }
    merged.insert(merged.end(), i, terms_.end());
    merged.insert(merged.end(), j, rhs.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) { return *this += -rhs; }

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> d(static_cast<size_t>(lhs.degree() + rhs.degree() + 1));
    for (const auto& [ea, ca] : lhs.terms())
        for (const auto& [eb, cb] : rhs.terms()) d[ea + eb] += ca * cb;
    return from_dense(d);
}

BigInt QPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return {};
    const BigInt g = content();
    QPoly r = *this;
    for (auto& [e, c] : r.terms_) c /= g;
    return r;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.primitive_part().leading_coeff() > 0
                                ? b.primitive_part()
                                : -b.primitive_part();
    if (b.is_zero()) return a.primitive_part().leading_coeff() > 0
                                ? a.primitive_part()
                                : -a.primitive_part();
    std::vector<BigInt> u = to_dense(a.primitive_part());
    std::vector<BigInt> v = to_dense(b.primitive_part());
    if (dense_degree(u) < dense_degree(v)) std::swap(u, v);
    while (dense_degree(v) >= 0) {
        std::vector<BigInt> r = pseudo_rem(u, v);
        u = std::move(v);
        v = to_dense(from_dense(r).primitive_part());
    }
    QPoly g = from_dense(u);
    if (g.leading_coeff() < 0) g = -g;
    return g;
}

QPoly QPoly::divided_by(const QPoly& d) const {
    if (d.is_zero()) throw divide_by_zero_error("polynomial division by zero");
    if (is_zero()) return {};
    std::vector<BigInt> rem = to_dense(*this);
    const std::vector<BigInt> dd = to_dense(d);
    const int degd = dense_degree(dd);
    const BigInt& lead = dd[static_cast<size_t>(degd)];
    int degr = dense_degree(rem);
    if (degr < degd) throw error("inexact polynomial division");
    std::vector<BigInt> quot(static_cast<size_t>(degr - degd + 1));
    while (degr >= degd) {
        const BigInt& top = rem[static_cast<size_t>(degr)];
        if (top % lead != 0) throw error("inexact polynomial division");
        const BigInt qc = top / lead;
        const int shift = degr - degd;
        quot[static_cast<size_t>(shift)] = qc;
        for (int i = 0; i <= degd; ++i)
            rem[static_cast<size_t>(i + shift)] -= qc * dd[static_cast<size_t>(i)];
        degr = dense_degree(rem);
    }
    if (degr >= 0) throw error("inexact polynomial division");
    return from_dense(quot);
}

Rational QPoly::eval(const Rational& q0) const {
    Rational acc = 0;
    // Horner over the sparse terms, highest exponent first.
    unsigned prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            acc = Rational(c);
            prev = e;
            first = false;
            continue;
        }
        Rational p = 1;
        for (unsigned k = 0; k < prev - e; ++k) p *= q0;
        acc = acc * p + Rational(c);
        prev = e;
    }
    if (first) return 0;
    Rational p = 1;
    for (unsigned k = 0; k < prev; ++k) p *= q0;
    return acc * p;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (mag != 1 || e == 0) out << mag.str();
        if (e >= 1) {
            out << 'q';
            if (e > 1) out << '^' << e;
        }
    }
    return out.str();
}

QPoly QPoly::parse(std::string_view text) {
    QPoly result;
    size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw parse_error("empty polynomial string");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw parse_error("expected '+' or '-' between polynomial terms");
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
        unsigned exp = 0;
        skip_ws();
        if (i < text.size() && text[i] == 'q') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string ed;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    ed += text[i++];
                if (ed.empty()) throw parse_error("missing exponent after '^'");
                exp = static_cast<unsigned>(std::stoul(ed));
            }
        } else if (digits.empty()) {
            throw parse_error("malformed polynomial term");
        }
        if (sign < 0) coeff = -coeff;
        result += monomial(std::move(coeff), exp);
        any = true;
    }
    if (!any) throw parse_error("empty polynomial string");
    return result;
}

QRat::QRat(const Rational& constant)
    : num_(QPoly(BigInt(boost::multiprecision::numerator(constant)))),
      den_(QPoly(BigInt(boost::multiprecision::denominator(constant)))) {
    normalize();
}

QRat::QRat(QPoly numerator, QPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw divide_by_zero_error("zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    const QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    const BigInt c = int_gcd(num_.content(), den_.content());
    if (c > 1) {
        num_ = num_.divided_by(QPoly(c));
        den_ = den_.divided_by(QPoly(c));
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat& QRat::operator+=(const QRat& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& rhs) { return *this += -rhs; }

QRat& QRat::operator*=(const QRat& rhs) {
    num_ = num_ * rhs.num_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& rhs) {
    if (rhs.is_zero()) throw divide_by_zero_error("division by zero rational function");
    num_ = num_ * rhs.den_;
    den_ = den_ * rhs.num_;
    normalize();
    return *this;
}

QRat QRat::inverse() const {
    if (is_zero()) throw divide_by_zero_error("inverse of zero");
    return QRat(den_, num_);
}

Rational QRat::eval(const Rational& q0) const {
    const Rational d = den_.eval(q0);
    if (d == 0) throw pole_error("pole at evaluation point");
    return num_.eval(q0) / d;
}

QRat QRat::subst_q_inverse() const {
    if (is_zero()) return {};
    const auto reverse = [](const QPoly& p) {
        const unsigned deg = static_cast<unsigned>(p.degree());
        QPoly r;
        for (const auto& [e, c] : p.terms()) r += QPoly::monomial(c, deg - e);
        return r;
    };
    const int dn = num_.degree();
    const int dd = den_.degree();
    QPoly n = reverse(num_);
    QPoly d = reverse(den_);
    if (dd > dn)
        n = n * QPoly::monomial(1, static_cast<unsigned>(dd - dn));
    else if (dn > dd)
        d = d * QPoly::monomial(1, static_cast<unsigned>(dn - dd));
    return QRat(std::move(n), std::move(d));
}

std::string QRat::str() const {
    const auto wrapped = [](const QPoly& p) {
        std::string s = p.str();
        if (p.terms().size() > 1) return "(" + s + ")";
        return s;
    };
    if (den_.is_one()) return num_.str();
    return wrapped(num_) + "/" + wrapped(den_);
}

QRat q_int(unsigned n, int k) {
    if (k == 0) throw invalid_base_error("q-integer base exponent must be nonzero");
    QRat sum;
    for (unsigned j = 0; j < n; ++j)
        sum += q_power(static_cast<long>(k) * static_cast<long>(j));
    return sum;
}

QRat q_factorial(unsigned n, int k) {
    if (k == 0) throw invalid_base_error("q-factorial base exponent must be nonzero");
    QRat prod(1);
    for (unsigned j = 2; j <= n; ++j) prod *= q_int(j, k);
    return prod;
}

QRat q_power(long e) {
    if (e >= 0) return QRat(QPoly::monomial(1, static_cast<unsigned>(e)));
    return QRat(QPoly(1), QPoly::monomial(1, static_cast<unsigned>(-e)));
}

} // namespace qzx
