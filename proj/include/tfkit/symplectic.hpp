#pragma once

#include <string>
#include <vector>

#include "tfkit/moments.hpp"
#include "tfkit/signal.hpp"

namespace tfkit {

/// Real 2x2 matrix; SL(2,R) membership (|det - 1| < 1e-10) is checked by the
/// operations that need it, so arbitrary candidates can be held and tested.
struct SL2Matrix {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;

    static SL2Matrix identity() { return {}; }
    static SL2Matrix rotation() { return {0.0, 1.0, -1.0, 0.0}; }          // J
    static SL2Matrix shear(double k) { return {1.0, 0.0, k, 1.0}; }       // t(k)
    static SL2Matrix dilation(double c);                                   // m(c), c > 0

    SL2Matrix operator*(const SL2Matrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    SL2Matrix transpose() const { return {a, c, b, d}; }
    SL2Matrix inverse() const { return {d, -b, -c, a}; }  // valid for det 1
    double det() const { return a * d - b * c; }
};

double max_abs_diff(const SL2Matrix& x, const SL2Matrix& y);

/// S^T J S == J to 1e-10 max-norm (equivalent to det == 1 in 2x2).
bool is_symplectic(const SL2Matrix& S);
void require_symplectic(const SL2Matrix& S);

/// Multiplying a(t) by e^{-j pi k t^2} shears covariance with this sign:
/// the effective matrix of the chirp action with parameter k is
/// shear(chirp_shear_sign * k). Pinned by a test on an uncorrelated Gaussian.
inline constexpr double chirp_shear_sign = -1.0;

struct GenToken {
    enum class Kind { J, Jinv, T, M };
    Kind kind = Kind::J;
    double value = 0.0;  // shear amount for T, scale for M
};

/// Factorization alphabet over {J, J^{-1}, t(k), m(c>0)}. The matrix the
/// word denotes is the left-to-right product of its token matrices.
struct GeneratorWord {
    std::vector<GenToken> tokens;
};

SL2Matrix token_matrix(const GenToken& t);

/// Left-to-right product of token matrices.
SL2Matrix word_matrix(const GeneratorWord& w);

/// Matrix the word's signal action actually realizes: same product but with
/// T(k) contributing shear(chirp_shear_sign * k).
SL2Matrix word_action_matrix(const GeneratorWord& w);

/// Decomposes S into generator tokens whose product reproduces S to 1e-12
/// max-norm. The exact word is unspecified; m(.) arguments are always
/// positive (a sign flip is absorbed as the J,J pair).
GeneratorWord factor(const SL2Matrix& S);

/// Word whose signal action realizes S (factor with T arguments negated to
/// cancel the chirp shear sign).
GeneratorWord realization_word(const SL2Matrix& S);

/// "J,T(2.0),M(0.5)" -> tokens; whitespace tolerated.
GeneratorWord parse_word(const std::string& text);
std::string to_string(const GeneratorWord& w);

/// Fourier transform of the signal sampled back onto its own time grid
/// (exact spectral permutation when the grid is self-dual, band-limited
/// evaluation otherwise). Realizes the J coordinate action on the WVD.
SampledSignal act_fourier(const SampledSignal& a);

/// Inverse transform; realizes J^{-1}.
SampledSignal act_inverse_fourier(const SampledSignal& a);

/// Pointwise multiplication by e^{-j pi k t^2} (the LFM shear). Warns on
/// stderr when the instantaneous frequency sweep leaves the sampled band.
SampledSignal act_chirp(const SampledSignal& a, double k);

/// Band-limited resampling a(t/c)/sqrt(c), c > 0, via evaluation of the
/// trigonometric interpolant. Throws std::domain_error when more than
/// max_tail_fraction of the result's energy lands in the grid edges
/// (time or frequency).
SampledSignal act_dilate(const SampledSignal& a, double c, double max_tail_fraction = 1e-3);

/// Applies the word's tokens right-to-left (operator order), so the result
/// realizes word_action_matrix(w).
SampledSignal act_word(const SampledSignal& a, const GeneratorWord& w);

/// C' = S C S^T; means transform as S (mean_t, mean_f). The strong
/// uncertainty determinant is invariant.
CovarianceMatrix pushforward(const CovarianceMatrix& C, const SL2Matrix& S);

}  // namespace tfkit
