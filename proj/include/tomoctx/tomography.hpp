#pragma once

#include <array>
#include <functional>

#include "tomoctx/angular.hpp"
#include "tomoctx/quad.hpp"
#include "tomoctx/types.hpp"

namespace tomoctx::tomography {

/// Spin tomogram: for fixed j, a map (m, alpha, beta) -> probability.
/// Kept as a function object so closed forms and dequantizer-computed symbols
/// can be compared at arbitrary points, not just on a grid.
struct Tomogram {
    TwiceJ j;
    std::function<double(int two_m, double alpha, double beta)> eval;

    double operator()(int two_m, double alpha, double beta) const {
        return eval(two_m, alpha, beta);
    }

    /// Probability read: quadrature-noise negatives in [-1e-10, 0) clamp to 0,
    /// anything more negative is an error.
    double prob(int two_m, double alpha, double beta) const;
};

/// Dual tomographic symbol; same shape as Tomogram but unconstrained in sign.
struct DualSymbol {
    TwiceJ j;
    std::function<double(int two_m, double alpha, double beta)> eval;

    double operator()(int two_m, double alpha, double beta) const {
        return eval(two_m, alpha, beta);
    }
};

/// Rotated projector U|jm><jm|U^dag: rank-1, trace 1.
Matrix dequantizer(TwiceJ j, int two_m, const angular::EulerAngles& ang);

/// Tomographic symbol omega(m, alpha, beta) = Tr[op * dequantizer].
/// The symbol is gamma-free for any source operator.
Tomogram tomogram_of(const Matrix& op, TwiceJ j);

/// Quantizer matrix (1/8pi^2) B^(j)_m(alpha, beta) built from the 3j-symbol chain.
Matrix quantizer(TwiceJ j, int two_m, double alpha, double beta);

/// Inverse map: integrates omega against the quantizer kernel over the full
/// measure. The gamma integral collapses to 2*pi analytically (the kernel is
/// gamma-free); full_gamma forces the 3D quadrature as a cross-check.
Matrix reconstruct(const Tomogram& tom, const quad::GridSpec& grid,
                   bool full_gamma = false);

/// Dual symbol omega^d(m, alpha, beta) = Tr[op * quantizer].
DualSymbol dual_symbol(const Matrix& op, TwiceJ j);

/// Tomographic pairing <A> = sum_m integral of omega_rho * omega^d_A over dOmega.
double pair_symbols(const Tomogram& state_tom, const DualSymbol& dual,
                    const quad::GridSpec& grid);

/// Tomogram of the rotated basis projector U_k diag(1,0,0) U_k^dag (qutrit).
Tomogram rotated_tomogram(const Matrix& k_unitary, TwiceJ j);

/// Fidelity Tr[P_k P_psi] from two projector tomograms via the sphere-integral
/// kernel; out-of-range m terms are zero.
double fidelity(const Tomogram& tom_k, const Tomogram& tom_psi,
                const quad::GridSpec& grid);

/// Parameters of the U(3) factorization d3 * O3 * d2^1 * O2^1 * d1^2.
struct U3Params {
    std::array<double, 3> theta{};  // each in [0, pi/2]
    std::array<double, 6> phi{};    // each in [0, 2*pi)
};

Matrix u3_matrix(const U3Params& p);

/// Tomogram of the U(3)-rotated basis projector at the identity rotation:
/// squared magnitudes of the first column of the U(3) matrix.
Vec3 unitary_tomogram(const U3Params& p);

/// Closed-form expressions printed for the qutrit scenarios; used as oracles
/// against the dequantizer/quantizer-computed symbols.
namespace closed_form {

/// Tomogram of rho(theta) = |psi><psi|, psi = (sin t, cos t, 0); m in {1,0,-1}.
double rho_tomogram(int m, double theta, double alpha, double beta);

/// Dual symbol of a real rank-1 projector |A><A| with components (a1, a0, am1).
double dual_projector_symbol(int m, double a1, double a0, double am1,
                             double alpha, double beta);

/// Appendix tomograms omega_k(m) for k in {1,2,3,4,5} at scenario angle phi.
/// (The omega_2(0) expression is read with sin^2(beta), matching normalization.)
double appendix_omega(int k, int m, double phi, double alpha, double beta);

}  // namespace closed_form

}  // namespace tomoctx::tomography
