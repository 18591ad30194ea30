#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tomoctx/angular.hpp"
#include "tomoctx/types.hpp"

namespace tomoctx::quad {

/// Quadrature grid over Euler angles: uniform periodic in alpha and gamma,
/// Gauss-Legendre in cos(beta).
struct GridSpec {
    int n_alpha = 64;
    int n_beta = 32;
    int n_gamma = 64;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Integral of f over dOmega = dalpha dgamma sin(beta) dbeta; f == 1 gives 8*pi^2.
/// NaN from the integrand aborts with the offending node in the message.
Complex integrate_euler(const std::function<Complex(const angular::EulerAngles&)>& f,
                        const GridSpec& grid);

/// Same measure with the gamma integral collapsed analytically to a factor 2*pi;
/// for integrands known to be gamma-independent.
Complex integrate_euler_gamma_free(
    const std::function<Complex(double alpha, double beta)>& f,
    const GridSpec& grid);

/// Normalized sphere average: integral of f(theta, phi) dn/(4*pi); f == 1 gives 1.
/// Uses n_beta nodes in cos(theta) and n_alpha in phi.
Complex integrate_sphere(const std::function<Complex(double theta, double phi)>& f,
                         const GridSpec& grid);

}  // namespace tomoctx::quad
