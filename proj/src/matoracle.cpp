#include "qzx/matoracle.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

namespace qzx {

namespace {

Rational rational_from_double(double v) {
    // Doubles are dyadic rationals; the conversion is exact.
    Rational r;
    int exp = 0;
    double mant = std::frexp(v, &exp);
    for (int i = 0; i < 64 && mant != std::floor(mant); ++i) {
        mant *= 2;
        --exp;
    }
    r = Rational(BigInt(static_cast<long long>(mant)));
    if (exp > 0)
        r *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        r /= Rational(BigInt(1) << -exp);
    return r;
}

double eval_coeff(const QRat& c, const Rational& q0) {
    return c.eval(q0).convert_to<double>();
}

Eigen::MatrixXd eval_ncpoly(const NCPoly& p, const Eigen::MatrixXd& a,
                            const Eigen::MatrixXd& b, const Rational& q0) {
    const auto dim = a.rows();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& [w, c] : p.terms()) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
        for (char letter : w.letters()) m = m * (letter == 'A' ? a : b);
        acc += eval_coeff(c, q0) * m;
    }
    return acc;
}

/// Truncated exponential factor sum_{j: g*j <= order} (x^g M)^j / d_j where
/// d_j is the running product of the supplied per-step divisors.
Eigen::MatrixXd exp_factor(const Eigen::MatrixXd& m, double x, int grade, int order,
                           const std::vector<double>& step_divisors) {
    const auto dim = m.rows();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(dim, dim);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(dim, dim);
    double fact = 1.0;
    const double xg = std::pow(x, grade);
    double xpow = 1.0;
    for (int j = 1; grade * j <= order; ++j) {
        power = power * m;
        xpow *= xg;
        fact *= step_divisors[static_cast<size_t>(j)];
        acc += (xpow / fact) * power;
    }
    return acc;
}

std::vector<double> q_int_steps(int order, int base_exp, const Rational& q0) {
    std::vector<double> steps(static_cast<size_t>(order) + 1, 1.0);
    for (int j = 1; j <= order; ++j)
        steps[static_cast<size_t>(j)] =
            q_int(static_cast<unsigned>(j), base_exp).eval(q0).convert_to<double>();
    return steps;
}

std::vector<double> classical_steps(int order) {
    std::vector<double> steps(static_cast<size_t>(order) + 1, 1.0);
    for (int j = 1; j <= order; ++j) steps[static_cast<size_t>(j)] = j;
    return steps;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& rs) {
    // Least squares on (log x, log r); all-zero residuals mean the
    // factorization is exact at these points.
    std::vector<double> lx, lr;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (rs[i] <= 0 || rs[i] < 1e-300) continue;
        lx.push_back(std::log(xs[i]));
        lr.push_back(std::log(rs[i]));
    }
    if (lx.empty()) return std::numeric_limits<double>::infinity();
    if (lx.size() == 1) return std::numeric_limits<double>::infinity();
    double mx = 0, mr = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        mr += lr[i];
    }
    mx /= static_cast<double>(lx.size());
    mr /= static_cast<double>(lx.size());
    double num = 0, den = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (lr[i] - mr);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

} // namespace

void OracleConfig::validate() const {
    if (dim < 2) throw config_error("oracle dimension must be >= 2");
    if (q0 <= 0.0) throw config_error("q0 must be positive");
    if (q0 == 1.0) throw config_error("q0 must differ from 1 (use the classical limit path)");
    if (x_samples.empty()) throw config_error("x_samples must be nonempty");
    for (size_t i = 0; i < x_samples.size(); ++i) {
        if (x_samples[i] <= 0) throw config_error("x_samples must be positive");
        if (i > 0 && x_samples[i] >= x_samples[i - 1])
            throw config_error("x_samples must be strictly decreasing");
    }
    if (entry_bound <= 0) throw config_error("entry_bound must be positive");
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sample_pair(const OracleConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(-cfg.entry_bound, cfg.entry_bound);
    const auto draw = [&] {
        Eigen::MatrixXd m(cfg.dim, cfg.dim);
        for (int i = 0; i < cfg.dim; ++i)
            for (int j = 0; j < cfg.dim; ++j) m(i, j) = dist(rng);
        return m;
    };
    while (true) {
        Eigen::MatrixXd a = draw();
        Eigen::MatrixXd b = draw();
        if ((a * b - b * a).norm() > 1e-8) return {a, b};
    }
}

SlopeReport residual_order(const Factorization& f, const OracleConfig& cfg) {
    auto [a, b] = sample_pair(cfg);
    return residual_order(f, cfg, a, b);
}

SlopeReport residual_order(const Factorization& f, const OracleConfig& cfg,
                           const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    cfg.validate();
    const int order = f.order;
    const Rational q0 =
        f.classical ? Rational(1) : rational_from_double(cfg.q0);

    const Eigen::MatrixXd sum = a + b;
    const Eigen::MatrixXd ma = a;
    const Eigen::MatrixXd mb = b;

    // Per-factor matrices and per-step divisors for the exponential sums.
    struct FactorData {
        Eigen::MatrixXd m;
        int grade;
        std::vector<double> steps;
    };
    std::vector<FactorData> factors;
    for (const auto& factor : f.factors) {
        if (factor.grade > order) continue;
        factors.push_back(
            {eval_ncpoly(factor.exponent, ma, mb, q0), factor.grade,
             f.classical ? classical_steps(order)
                         : q_int_steps(order, factor.base_exponent, q0)});
    }
    const std::vector<double> base_steps =
        f.classical ? classical_steps(order) : q_int_steps(order, 1, q0);

    SlopeReport report;
    for (double x : cfg.x_samples) {
        Eigen::MatrixXd lhs, rhs;
        if (f.variant == Variant::qbch) {
            // lhs: exponential of the combined exponent; rhs: the product.
            Eigen::MatrixXd s = x * sum;
            for (const auto& fd : factors) s += std::pow(x, fd.grade) * fd.m;
            lhs = exp_factor(s, 1.0, 1, order, base_steps);
            rhs = exp_factor(ma, x, 1, order, base_steps) *
                  exp_factor(mb, x, 1, order, base_steps);
        } else {
            lhs = exp_factor(sum, x, 1, order, base_steps);
            rhs = exp_factor(ma, x, 1, order, base_steps) *
                  exp_factor(mb, x, 1, order, base_steps);
            for (const auto& fd : factors)
                rhs = rhs * exp_factor(fd.m, x, fd.grade, order, fd.steps);
        }
        report.residuals.push_back((lhs - rhs).norm());
    }
    report.slope = fit_slope(cfg.x_samples, report.residuals);
    return report;
}

WeylReport weyl_check(int dim, int truncation) {
    if (dim < 2) throw config_error("weyl check needs dim >= 2");
    using Cplx = std::complex<double>;
    using MatC = Eigen::MatrixXcd;

    WeylReport report;
    report.dim = dim;
    report.truncation = truncation;

    const double two_pi = 6.283185307179586476925286766559;
    const Cplx omega = std::polar(1.0, two_pi / dim);

    // Clock Q and shift P with P Q = omega Q P; then A = Q, B = P satisfy
    // A B = omega^{-1} B A.
    MatC clock = MatC::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) clock(j, j) = std::pow(omega, j);
    MatC shift = MatC::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) shift((j - 1 + dim) % dim, j) = 1.0;

    const MatC a = clock;
    const MatC b = shift;
    report.commutator_residual = (a * b - (1.0 / omega) * b * a).norm();

    // Powers of A, B and A+B up to the truncation order.
    const auto powers = [&](const MatC& m) {
        std::vector<MatC> p(static_cast<size_t>(truncation) + 1);
        p[0] = MatC::Identity(dim, dim);
        for (int n = 1; n <= truncation; ++n) p[static_cast<size_t>(n)] = p[n - 1] * m;
        return p;
    };
    const auto pa = powers(a);
    const auto pb = powers(b);
    const auto ps = powers(a + b);

    // Gaussian binomials by the division-free Pascal recurrence
    // gb(n,k) = gb(n-1,k-1) + base^k gb(n-1,k), finite at roots of unity.
    const auto multiplied_up_residual = [&](const std::vector<MatC>& qa,
                                            const std::vector<MatC>& qb,
                                            const std::vector<MatC>& qs, const Cplx& base) {
        std::vector<std::vector<Cplx>> binom(static_cast<size_t>(truncation) + 1);
        for (int n = 0; n <= truncation; ++n) {
            binom[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, Cplx(0));
            binom[static_cast<size_t>(n)][0] = 1.0;
            binom[static_cast<size_t>(n)][static_cast<size_t>(n)] = 1.0;
            for (int k = 1; k < n; ++k)
                binom[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                    binom[n - 1][k - 1] + std::pow(base, k) * binom[n - 1][static_cast<size_t>(k)];
        }
        double worst = 0.0;
        for (int n = 0; n <= truncation; ++n) {
            MatC acc = MatC::Zero(qa[0].rows(), qa[0].cols());
            for (int k = 0; k <= n; ++k)
                acc += binom[static_cast<size_t>(n)][static_cast<size_t>(k)] *
                       qa[static_cast<size_t>(k)] * qb[static_cast<size_t>(n - k)];
            const double rel =
                (qs[static_cast<size_t>(n)] - acc).norm() / (1.0 + qs[static_cast<size_t>(n)].norm());
            worst = std::max(worst, rel);
        }
        return worst;
    };

    report.identity_residual = multiplied_up_residual(pa, pb, ps, omega);

    // Direct series comparison where the base-q factorials are nonzero
    // (grades below dim).
    {
        double worst = 0.0;
        Cplx fact = 1.0;
        std::vector<Cplx> inv_fact(static_cast<size_t>(dim), Cplx(1.0));
        for (int n = 1; n < dim; ++n) {
            const Cplx qi = (1.0 - std::pow(omega, n)) / (1.0 - omega);
            fact *= qi;
            inv_fact[static_cast<size_t>(n)] = 1.0 / fact;
        }
        for (int n = 0; n < dim; ++n) {
            MatC acc = MatC::Zero(dim, dim);
            for (int k = 0; k <= n; ++k)
                acc += inv_fact[static_cast<size_t>(k)] * inv_fact[static_cast<size_t>(n - k)] *
                       pa[static_cast<size_t>(k)] * pb[static_cast<size_t>(n - k)];
            const MatC want = inv_fact[static_cast<size_t>(n)] * ps[static_cast<size_t>(n)];
            worst = std::max(worst, (want - acc).norm());
        }
        report.series_residual = worst;
    }

    // A generic real pair must break the multiplied-up identity.
    {
        std::mt19937_64 rng(2026);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        MatC ra(dim, dim), rb(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                ra(i, j) = dist(rng);
                rb(i, j) = dist(rng);
            }
        report.generic_residual =
            multiplied_up_residual(powers(ra), powers(rb), powers(ra + rb), Cplx(0.7));
    }

    report.pass = report.commutator_residual < 1e-12 && report.series_residual < 1e-10 &&
                  report.identity_residual < 1e-10 && report.generic_residual > 1e-6;
    return report;
}

} // namespace qzx
