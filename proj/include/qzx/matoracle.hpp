#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

#include "qzx/disentangler.hpp"

namespace qzx {

/// Configuration for the numeric residual oracle.
struct OracleConfig {
    int dim = 4;
    double q0 = 0.7;
    std::vector<double> x_samples = {0.1, 0.05, 0.025};
    std::uint64_t seed = 42;
    double entry_bound = 1.0;
    /// Slack subtracted from the expected residual-order exponent.
    double tolerance = 0.5;

    /// Throws config_error on invalid settings (dim < 2, q0 <= 0 or q0 = 1,
    /// non-decreasing samples).
    void validate() const;
};

/// Two random dim x dim matrices with entries uniform in
/// [-entry_bound, entry_bound], reproducible from the seed; resampled until
/// the classical commutator is numerically nonzero.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sample_pair(const OracleConfig& cfg);

/// Result of a residual-scaling measurement.
struct SlopeReport {
    /// Least-squares slope of log(residual) against log(x). Infinite when
    /// every residual vanishes to machine precision.
    double slope = 0.0;
    std::vector<double> residuals;
};

/// Evaluates both sides of the factorization at the config's sample points,
/// with every series truncated at the derivation order and every coefficient
/// evaluated at q0, and fits the residual decay exponent. A factorization
/// exact through x^N must come out with slope >= N + 1 - tolerance.
/// Throws pole_error if a coefficient has a pole at q0.
SlopeReport residual_order(const Factorization& f, const OracleConfig& cfg);

/// Same measurement against externally supplied matrices (used for edge
/// cases such as B = 0).
SlopeReport residual_order(const Factorization& f, const OracleConfig& cfg,
                           const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Outcome of the clock/shift realization of the q-commutation relation
/// AB = q^{-1} BA with q a primitive dim-th root of unity.
struct WeylReport {
    int dim = 0;
    int truncation = 0;
    /// |AB - q^{-1} BA| for the clock/shift pair (machine zero).
    double commutator_residual = 0.0;
    /// Direct series residual of e_q^A e_q^B - e_q^{A+B}, checked
    /// coefficient-wise below grade dim (the base-q factorials vanish from
    /// grade dim on, so the raw series stops being evaluable there).
    double series_residual = 0.0;
    /// Residual of the multiplied-up identity
    /// (A+B)^n = sum_k gbinom_q(n,k) A^k B^{n-k}, checked through the full
    /// truncation order (Gaussian binomials stay finite at roots of unity).
    double identity_residual = 0.0;
    /// The same multiplied-up residual for a generic random pair, which must
    /// be far from zero (the identity needs the commutation relation).
    double generic_residual = 0.0;
    bool pass = false;
};

WeylReport weyl_check(int dim, int truncation = 12);

} // namespace qzx
