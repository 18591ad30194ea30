#pragma once

#include "tomoctx/types.hpp"

namespace tomoctx::angular {

/// Euler angles (alpha, beta, gamma) of an SU(2) rotation.
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

double factorial(int n);

/// Jacobi polynomial P_n^{(a,b)}(x) via the three-term recurrence.
double jacobi_poly(int n, double a, double b, double x);

/// Wigner small-d matrix element d^j_{m'm}(beta).
/// Convention matches the explicit spin-1 matrix: d^1_{1,0} = +sin(beta)/sqrt(2).
double small_d(TwiceJ j, int two_m_row, int two_m_col, double beta);

/// Full rotation matrix element D^j_{m'm}(alpha,beta,gamma)
/// = exp(i m' gamma) d^j_{m'm}(beta) exp(i m alpha).
Complex wigner_D(TwiceJ j, int two_m_row, int two_m_col, const EulerAngles& ang);

/// The (2j+1)x(2j+1) matrix of D elements, rows/cols ordered m = j ... -j.
Matrix wigner_D_matrix(TwiceJ j, const EulerAngles& ang);

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3); returns 0 for invalid couplings.
double wigner_3j(int two_j1, int two_j2, int two_j3,
                 int two_m1, int two_m2, int two_m3);

}  // namespace tomoctx::angular
