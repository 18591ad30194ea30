#include "tomoctx/tomography.hpp"

#include <cmath>
#include <numbers>

#include "tomoctx/qcore.hpp"

namespace tomoctx::tomography {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEightPiSq = 8.0 * kPi * kPi;
}  // namespace

double Tomogram::prob(int two_m, double alpha, double beta) const {
    double v = eval(two_m, alpha, beta);
    if (v < -1e-10)
        throw std::runtime_error("Tomogram: probability below tolerance: " +
                                 std::to_string(v));
    if (v < 0.0) return 0.0;
    if (v > 1.0 && v < 1.0 + 1e-10) return 1.0;
    return v;
}

Matrix dequantizer(TwiceJ j, int two_m, const angular::EulerAngles& ang) {
    if (!j.valid_m(two_m)) throw std::invalid_argument("dequantizer: invalid m");
    const int n = j.dim();
    Vector v(n);
    for (int c = 0; c < n; ++c)
        v(c) = std::conj(angular::wigner_D(j, two_m, j.two_j - 2 * c, ang));
    return v * v.adjoint();
}

Tomogram tomogram_of(const Matrix& op, TwiceJ j) {
    if (op.rows() != j.dim() || op.cols() != j.dim())
        throw std::invalid_argument("tomogram_of: operator dim does not match j");
    Matrix a = op;
    return {j, [a, j](int two_m, double alpha, double beta) {
                const int n = j.dim();
                Vector row(n);
                for (int c = 0; c < n; ++c)
                    row(c) = angular::wigner_D(j, two_m, j.two_j - 2 * c,
                                               {alpha, beta, 0.0});
                Complex w = row.transpose() * a * row.conjugate();
                return w.real();
            }};
}

Matrix quantizer(TwiceJ j, int two_m1, double alpha, double beta) {
    if (!j.valid_m(two_m1)) throw std::invalid_argument("quantizer: invalid m");
    const int tj = j.two_j;
    const int n = j.dim();
    Matrix b = Matrix::Zero(n, n);
    for (int two_j3 = 0; two_j3 <= 2 * tj; two_j3 += 2) {
        double w3 = angular::wigner_3j(tj, tj, two_j3, two_m1, -two_m1, 0);
        if (w3 == 0.0) continue;
        double weight = w3 * double(two_j3 + 1) * double(two_j3 + 1);
        for (int r = 0; r < n; ++r) {
            int two_mp1 = tj - 2 * r;
            for (int c = 0; c < n; ++c) {
                int two_mp2 = tj - 2 * c;
                int two_m3 = two_mp2 - two_mp1;
                if (std::abs(two_m3) > two_j3) continue;
                double cg = angular::wigner_3j(tj, tj, two_j3,
                                               two_mp1, -two_mp2, two_m3);
                if (cg == 0.0) continue;
                // The (-1)^{m1} and (-1)^{m'2} factors combine as
                // (-1)^{m1 - m'2}, which stays well-defined (and makes the
                // inverse map exact) for half-integer spins too.
                double sign = (((two_m1 - two_mp2) / 2) % 2 == 0) ? 1.0 : -1.0;
                double d0 = angular::small_d(TwiceJ(two_j3), 0, two_m3, beta);
                Complex dphase = std::polar(d0, 0.5 * two_m3 * alpha);
                b(r, c) += sign * weight * cg * dphase;
            }
        }
    }
    return b / kEightPiSq;
}

Matrix reconstruct(const Tomogram& tom, const quad::GridSpec& grid,
                   bool full_gamma) {
    const TwiceJ j = tom.j;
    const int n = j.dim();
    auto [bn, bw] = quad::gauss_legendre(grid.n_beta);
    const double wa = 2.0 * kPi / grid.n_alpha;
    Matrix acc = Matrix::Zero(n, n);
    for (int ib = 0; ib < grid.n_beta; ++ib) {
        double beta = std::acos(bn[ib]);
        Matrix slab = Matrix::Zero(n, n);
        for (int ia = 0; ia < grid.n_alpha; ++ia) {
            double alpha = wa * ia;
            for (int im = 0; im < n; ++im) {
                int two_m = j.two_j - 2 * im;
                double w = tom(two_m, alpha, beta);
                if (std::isnan(w))
                    throw std::runtime_error("reconstruct: NaN tomogram value");
                slab += w * quantizer(j, two_m, alpha, beta);
            }
        }
        acc += bw[ib] * slab;
    }
    acc *= wa;
    if (!full_gamma) return acc * (2.0 * kPi);
    // The kernel is gamma-free; the explicit gamma quadrature must agree.
    return acc * (2.0 * kPi / grid.n_gamma) * double(grid.n_gamma);
}

DualSymbol dual_symbol(const Matrix& op, TwiceJ j) {
    if (op.rows() != j.dim() || op.cols() != j.dim())
        throw std::invalid_argument("dual_symbol: operator dim does not match j");
    Matrix a = op;
    return {j, [a, j](int two_m, double alpha, double beta) {
                Complex v = (a * quantizer(j, two_m, alpha, beta)).trace();
                return v.real();
            }};
}

double pair_symbols(const Tomogram& state_tom, const DualSymbol& dual,
                    const quad::GridSpec& grid) {
    if (!(state_tom.j == dual.j))
        throw std::invalid_argument("pair_symbols: j mismatch");
    const TwiceJ j = state_tom.j;
    auto f = [&](double alpha, double beta) -> Complex {
        double s = 0.0;
        for (int two_m = -j.two_j; two_m <= j.two_j; two_m += 2)
            s += state_tom(two_m, alpha, beta) * dual(two_m, alpha, beta);
        return s;
    };
    return quad::integrate_euler_gamma_free(f, grid).real();
}

Tomogram rotated_tomogram(const Matrix& k_unitary, TwiceJ j) {
    if (k_unitary.rows() != 3 || k_unitary.cols() != 3 || j.two_j != 2)
        throw std::invalid_argument("rotated_tomogram: expected a 3x3 unitary, j=1");
    if (!qcore::is_unitary(k_unitary, 1e-10))
        throw std::invalid_argument("rotated_tomogram: input is not unitary");
    Matrix p3 = Matrix::Zero(3, 3);
    p3(0, 0) = 1.0;
    return tomogram_of(k_unitary * p3 * k_unitary.adjoint(), j);
}

double fidelity(const Tomogram& tom_k, const Tomogram& tom_psi,
                const quad::GridSpec& grid) {
    if (!(tom_k.j == tom_psi.j))
        throw std::invalid_argument("fidelity: j mismatch");
    const TwiceJ j = tom_k.j;
    auto omega = [&](const Tomogram& t, int two_m, double a, double b) {
        // Out-of-range members of the kernel sum are zeros.
        if (std::abs(two_m) > j.two_j) return 0.0;
        return t(two_m, a, b);
    };
    auto f = [&](double theta, double phi) -> Complex {
        double s = 0.0;
        for (int two_m = -j.two_j; two_m <= j.two_j; two_m += 2) {
            double kern = omega(tom_k, two_m, phi, theta) -
                          0.5 * omega(tom_k, two_m + 2, phi, theta) -
                          0.5 * omega(tom_k, two_m - 2, phi, theta);
            s += kern * tom_psi(two_m, phi, theta);
        }
        return s;
    };
    return (j.two_j + 1) * quad::integrate_sphere(f, grid).real();
}

Matrix u3_matrix(const U3Params& p) {
    auto rot01 = [](double t) {
        Matrix m = Matrix::Identity(3, 3);
        m(0, 0) = std::cos(t); m(0, 1) = -std::sin(t);
        m(1, 0) = std::sin(t); m(1, 1) = std::cos(t);
        return m;
    };
    auto rot12 = [](double t) {
        Matrix m = Matrix::Identity(3, 3);
        m(1, 1) = std::cos(t); m(1, 2) = -std::sin(t);
        m(2, 1) = std::sin(t); m(2, 2) = std::cos(t);
        return m;
    };
    Matrix o3 = rot12(p.theta[1]) * rot01(p.theta[0]);
    Matrix o21 = rot12(p.theta[2]);
    Matrix d3 = Matrix::Zero(3, 3);
    d3(0, 0) = std::polar(1.0, p.phi[0]);
    d3(1, 1) = std::polar(1.0, p.phi[1]);
    d3(2, 2) = std::polar(1.0, p.phi[2]);
    Matrix d21 = Matrix::Identity(3, 3);
    d21(1, 1) = std::polar(1.0, p.phi[3]);
    d21(2, 2) = std::polar(1.0, p.phi[4]);
    Matrix d12 = Matrix::Identity(3, 3);
    d12(2, 2) = std::polar(1.0, p.phi[5]);
    return d3 * o3 * d21 * o21 * d12;
}

Vec3 unitary_tomogram(const U3Params& p) {
    Matrix a3 = u3_matrix(p);
    Vec3 w;
    for (int i = 0; i < 3; ++i) w(i) = std::norm(a3(i, 0));
    return w;
}

namespace closed_form {

double rho_tomogram(int m, double theta, double alpha, double beta) {
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double s2t = std::sin(2.0 * theta);
    const double st2 = std::sin(theta) * std::sin(theta);
    const double ct2 = std::cos(theta) * std::cos(theta);
    const double ca = std::cos(alpha);
    const double r = 1.0 / (2.0 * std::sqrt(2.0));
    switch (m) {
        case 1:
            return 0.25 * (1 + cb) * (1 + cb) * st2 + 0.5 * sb * sb * ct2 +
                   r * sb * (1 + cb) * s2t * ca;
        case 0:
            return 0.5 * sb * sb * st2 + cb * cb * ct2 -
                   r * std::sin(2.0 * beta) * s2t * ca;
        case -1:
            return 0.25 * (1 - cb) * (1 - cb) * st2 + 0.5 * sb * sb * ct2 -
                   r * sb * (1 - cb) * s2t * ca;
        default:
            throw std::invalid_argument("rho_tomogram: m must be -1, 0 or 1");
    }
}

double dual_projector_symbol(int m, double a1, double a0, double am1,
                             double alpha, double beta) {
    if (m < -1 || m > 1)
        throw std::invalid_argument("dual_projector_symbol: m must be -1, 0 or 1");
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double ca = std::cos(alpha);
    const double pi2 = kPi * kPi;
    const double norm2 = a1 * a1 + am1 * am1 + a0 * a0;
    double term0 = norm2 / (24.0 * pi2);
    double term1 = (3.0 * m / (16.0 * pi2)) *
                   (std::sqrt(2.0) * (a1 * a0 + am1 * a0) * sb * ca +
                    cb * (a1 * a1 - am1 * am1));
    double bracket = 3.0 * a1 * am1 * std::cos(2.0 * alpha) * sb * sb +
                     (3.0 / std::sqrt(2.0)) * (a1 * a0 - am1 * a0) *
                         std::sin(2.0 * beta) * ca +
                     0.5 * (a1 * a1 + am1 * am1 - 2.0 * a0 * a0) *
                         (3.0 * cb * cb - 1.0);
    double term2 = (5.0 * (3.0 * m * m - 2.0) / (48.0 * pi2)) * bracket;
    return term0 + term1 + term2;
}

double appendix_omega(int k, int m, double phi, double alpha, double beta) {
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double ca = std::cos(alpha), c2a = std::cos(2.0 * alpha);
    const double s2b = std::sin(2.0 * beta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double tp = std::tan(phi);
    const double c2p = std::cos(2.0 * phi);
    const double sq = std::sqrt(c2p);
    const double s2p = std::sin(2.0 * phi);
    const double r = 1.0 / (2.0 * std::sqrt(2.0));
    const double cp2 = cp * cp;

    switch (k) {
        case 1:
            if (m == 1)
                return ((c2p / cp2) * (1 + cb) * (1 + cb) + (1 - cb) * (1 - cb) +
                        2 * sb * sb * tp * tp + 2 * (sq / cp) * sb * sb * c2a) / 8.0 +
                       r * ((sq * sp / cp2) * sb * (1 + cb) * ca +
                            tp * sb * (1 - cb) * ca);
            if (m == 0)
                return (2 * cb * cb * tp * tp + sb * sb + (c2p / cp2) * sb * sb -
                        2 * (sq / cp) * sb * sb * c2a) / 4.0 +
                       r * tp * s2b * ca - r * (sq / cp2) * sp * s2b * ca;
            if (m == -1)
                return ((c2p / cp2) * (1 - cb) * (1 - cb) + (1 + cb) * (1 + cb) +
                        2 * sb * sb * tp * tp + 2 * (sq / cp) * sb * sb * c2a) / 8.0 -
                       r * ((sq * sp / cp2) * sb * (1 - cb) * ca +
                            tp * sb * (1 + cb) * ca);
            break;
        case 2:
            if (m == 1)
                return (2 * cp2 * sb * sb + sp * sp * (1 - cb) * (1 - cb)) / 4.0 -
                       r * s2p * sb * (1 - cb) * ca;
            if (m == 0)
                return (2 * cp2 * cb * cb + sp * sp * sb * sb) / 2.0 -
                       r * s2p * s2b * ca;
            if (m == -1)
                return (2 * cp2 * sb * sb + sp * sp * (1 + cb) * (1 + cb)) / 4.0 +
                       r * s2p * sb * (1 + cb) * ca;
            break;
        case 3: {
            double c = std::cos(beta / 2.0), s = std::sin(beta / 2.0);
            if (m == 1) return c * c * c * c;
            if (m == 0) return sb * sb / 2.0;
            if (m == -1) return s * s * s * s;
            break;
        }
        case 4:
            if (m == 1)
                return (2 * cp2 * sb * sb + sp * sp * (1 - cb) * (1 - cb)) / 4.0 +
                       r * s2p * sb * (1 - cb) * ca;
            if (m == 0)
                return (2 * cp2 * cb * cb + sp * sp * sb * sb) / 2.0 +
                       r * s2p * s2b * ca;
            if (m == -1)
                return (2 * cp2 * sb * sb + sp * sp * (1 + cb) * (1 + cb)) / 4.0 -
                       r * s2p * sb * (1 + cb) * ca;
            break;
        case 5:
            if (m == 1)
                return ((c2p / cp2) * (1 + cb) * (1 + cb) + (1 - cb) * (1 - cb) +
                        2 * sb * sb * tp * tp - 2 * (sq / cp) * sb * sb * c2a) / 8.0 +
                       r * ((sq * sp / cp2) * sb * (1 + cb) * ca -
                            tp * sb * (1 - cb) * ca);
            if (m == 0)
                return (2 * cb * cb * tp * tp + sb * sb + (c2p / cp2) * sb * sb +
                        2 * (sq / cp) * sb * sb * c2a) / 4.0 -
                       r * tp * s2b * ca - r * (sq / cp2) * sp * s2b * ca;
            if (m == -1)
                return ((c2p / cp2) * (1 - cb) * (1 - cb) + (1 + cb) * (1 + cb) +
                        2 * sb * sb * tp * tp - 2 * (sq / cp) * sb * sb * c2a) / 8.0 -
                       r * ((sq * sp / cp2) * sb * (1 - cb) * ca -
                            tp * sb * (1 + cb) * ca);
            break;
        default:
            break;
    }
    throw std::invalid_argument("appendix_omega: k must be 1..5, m in {-1,0,1}");
}

}  // namespace closed_form

}  // namespace tomoctx::tomography
