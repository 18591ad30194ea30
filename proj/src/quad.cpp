#include "tomoctx/quad.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tomoctx::quad {

namespace {

constexpr double kPi = std::numbers::pi;

void check_finite(Complex v, double alpha, double beta, double gamma) {
    if (std::isnan(v.real()) || std::isnan(v.imag()) ||
        std::isinf(v.real()) || std::isinf(v.imag()))
        throw std::runtime_error("integrate: non-finite integrand at node (alpha=" +
                                 std::to_string(alpha) + ", beta=" +
                                 std::to_string(beta) + ", gamma=" +
                                 std::to_string(gamma) + ")");
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    std::vector<double> nodes(n), weights(n);
    // Newton iteration on Legendre P_n from the Chebyshev initial guess.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return {nodes, weights};
}

Complex integrate_euler(const std::function<Complex(const angular::EulerAngles&)>& f,
                        const GridSpec& grid) {
    auto [bn, bw] = gauss_legendre(grid.n_beta);
    const double wa = 2.0 * kPi / grid.n_alpha;
    const double wg = 2.0 * kPi / grid.n_gamma;
    // Fixed summation order keeps results bit-stable.
    Complex total = 0.0;
    for (int ib = 0; ib < grid.n_beta; ++ib) {
        double beta = std::acos(bn[ib]);
        Complex slab = 0.0;
        for (int ia = 0; ia < grid.n_alpha; ++ia) {
            double alpha = wa * ia;
            for (int ig = 0; ig < grid.n_gamma; ++ig) {
                double gamma = wg * ig;
                Complex v = f({alpha, beta, gamma});
                check_finite(v, alpha, beta, gamma);
                slab += v;
            }
        }
        total += bw[ib] * slab;
    }
    return total * wa * wg;
}

Complex integrate_euler_gamma_free(
    const std::function<Complex(double alpha, double beta)>& f,
    const GridSpec& grid) {
    auto [bn, bw] = gauss_legendre(grid.n_beta);
    const double wa = 2.0 * kPi / grid.n_alpha;
    Complex total = 0.0;
    for (int ib = 0; ib < grid.n_beta; ++ib) {
        double beta = std::acos(bn[ib]);
        Complex slab = 0.0;
        for (int ia = 0; ia < grid.n_alpha; ++ia) {
            double alpha = wa * ia;
            Complex v = f(alpha, beta);
            check_finite(v, alpha, beta, 0.0);
            slab += v;
        }
        total += bw[ib] * slab;
    }
    return total * wa * (2.0 * kPi);
}

Complex integrate_sphere(const std::function<Complex(double theta, double phi)>& f,
                         const GridSpec& grid) {
    auto [tn, tw] = gauss_legendre(grid.n_beta);
    const double wp = 2.0 * kPi / grid.n_alpha;
    Complex total = 0.0;
    for (int it = 0; it < grid.n_beta; ++it) {
        double theta = std::acos(tn[it]);
        Complex slab = 0.0;
        for (int ip = 0; ip < grid.n_alpha; ++ip) {
            double phi = wp * ip;
            Complex v = f(theta, phi);
            check_finite(v, phi, theta, 0.0);
            slab += v;
        }
        total += tw[it] * slab;
    }
    return total * wp / (4.0 * kPi);
}

}  // namespace tomoctx::quad
