#pragma once

#include <numbers>
#include <optional>

#include "tfkit/grid.hpp"
#include "tfkit/kernels.hpp"
#include "tfkit/signal.hpp"

namespace tfkit {

/// Effective hbar for the e^{-j 2 pi} signal convention: with this value the
/// strong-uncertainty determinant bound equals the Heisenberg constant
/// 1/(16 pi^2).
inline constexpr double hbar_eff = 1.0 / (2.0 * std::numbers::pi);

/// Second central moments of a distribution over the (t, f) lattice.
/// Symmetric by construction: the single cov_tf field holds both
/// off-diagonal entries. total_mass is the normalization actually measured.
struct CovarianceMatrix {
    double var_t = 0.0;   // s^2
    double var_f = 0.0;   // Hz^2
    double cov_tf = 0.0;  // s*Hz
    double mean_t = 0.0;  // s
    double mean_f = 0.0;  // Hz
    double total_mass = 0.0;
};

/// Moments of the grid renormalized to unit mass. The signed distribution is
/// used as-is (negative lobes included). Throws std::domain_error when the
/// total mass is non-positive or below 1e-6 of sum |rho|.
CovarianceMatrix covariance(const TFGrid& rho);

struct HeisenbergResult {
    double lhs = 0.0;  // time spread * frequency spread, unnormalized moments
    double rhs = 0.0;  // ||a||^4 / 16 pi^2
    double ratio = 0.0;
    bool pass = false;
};

/// Time and frequency spreads about their means, measured from |a(t)|^2 and
/// |A(f)|^2 directly. Throws std::domain_error for a near-zero signal.
HeisenbergResult heisenberg_check(const SampledSignal& a, double tolerance = 1e-6);

struct Relation1Result {
    double lhs = 0.0;
    double rhs = 0.0;  // ||a||^2 / 2 pi
    double ratio = 0.0;
    double t0 = 0.0;
    double f0 = 0.0;
    bool pass = false;
};

/// sum of |t-t0|^2 + |f-f0|^2 against the distribution, with the grid mass
/// renormalized to ||a||^2. Requires a kernel satisfying both marginal
/// predicates on the grid's dual axes; refuses otherwise
/// (std::invalid_argument). Omitted t0/f0 default to the measured means,
/// which minimize the left side.
Relation1Result relation1_check(const TFGrid& rho, const SampledSignal& a, const Kernel& g,
                                std::optional<double> t0 = std::nullopt,
                                std::optional<double> f0 = std::nullopt,
                                double tolerance = 1e-6);

struct StrongUncertaintyResult {
    double det = 0.0;  // var_t var_f - cov_tf^2 - hbar_eff^2/4
    bool psd = false;
};

/// Determinant test of C + i (hbar_eff/2) J: nonnegative iff the
/// distribution's covariance is admissible.
StrongUncertaintyResult strong_uncertainty_check(const CovarianceMatrix& C);

/// Aggregate emitted by the report command.
struct UncertaintyReport {
    HeisenbergResult heisenberg;
    bool relation1_applicable = false;
    Relation1Result relation1;
    StrongUncertaintyResult strong;
    CovarianceMatrix covariance;
    double norm2 = 0.0;
    std::string kernel_name;
    bool kernel_time_marginal = false;
    bool kernel_freq_marginal = false;
};

}  // namespace tfkit
