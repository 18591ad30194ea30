#include "tomoctx/qcore.hpp"

#include <Eigen/Eigenvalues>

namespace tomoctx::qcore {

bool is_hermitian(const Matrix& m, double tolerance) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_unitary(const Matrix& m, double tolerance) {
    Matrix id = Matrix::Identity(m.rows(), m.cols());
    return (m * m.adjoint() - id).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_density(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    if (!is_hermitian(m, tolerance)) return false;
    if (std::abs(m.trace() - Complex(1.0)) > tol::trace) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    return es.eigenvalues().minCoeff() >= -tol::psd;
}

Matrix projector_from(const Vector& state) {
    if (std::abs(state.norm() - 1.0) > tol::norm)
        throw std::invalid_argument("projector_from: state not normalized");
    return state * state.adjoint();
}

Complex expectation(const Matrix& rho, const Matrix& obs) {
    if (rho.rows() != obs.rows() || rho.cols() != obs.cols())
        throw std::invalid_argument("expectation: dimension mismatch");
    return (rho * obs).trace();
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Spin1Generators spin1_generators() {
    const double r = 1.0 / std::sqrt(2.0);
    Spin1Generators g;
    g.jx = Matrix::Zero(3, 3);
    g.jx(0, 1) = r; g.jx(1, 0) = r; g.jx(1, 2) = r; g.jx(2, 1) = r;
    g.jy = Matrix::Zero(3, 3);
    g.jy(0, 1) = Complex(0, -r); g.jy(1, 0) = Complex(0, r);
    g.jy(1, 2) = Complex(0, -r); g.jy(2, 1) = Complex(0, r);
    g.jz = Matrix::Zero(3, 3);
    g.jz(0, 0) = 1.0; g.jz(2, 2) = -1.0;
    return g;
}

Vec3 cross_normalized(const Vec3& a, const Vec3& b) {
    Vec3 c = a.cross(b);
    double n = c.norm();
    if (n <= tol::norm)
        throw std::invalid_argument("cross_normalized: inputs are (near-)parallel");
    return c / n;
}

Matrix pauli_x() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0; m(1, 0) = 1.0;
    return m;
}

Matrix pauli_y() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = Complex(0, -1); m(1, 0) = Complex(0, 1);
    return m;
}

Matrix pauli_z() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0; m(1, 1) = -1.0;
    return m;
}

Vector random_state(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v / v.norm();
}

Matrix random_density(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Matrix rho = Matrix::Zero(dim, dim);
    double total = 0.0;
    for (int k = 0; k < dim; ++k) {
        double w = uni(rng) + 1e-3;
        Vector s = random_state(dim, rng);
        rho += w * (s * s.adjoint());
        total += w;
    }
    return rho / total;
}

Matrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = uni(rng);
        for (int j = i + 1; j < dim; ++j) {
            Complex z(uni(rng), uni(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

}  // namespace tomoctx::qcore
