#include "tomoctx/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "tomoctx/qcore.hpp"

namespace tomoctx::scenarios {

namespace {
constexpr double kPi = std::numbers::pi;

void check_phi_domain(double phi) {
    if (!(phi > 0.0 && phi < kPi / 4.0))
        throw std::invalid_argument(
            "scenario: phi must lie in (0, pi/4); sqrt(cos 2*phi) is undefined "
            "outside");
}

Vector real3(double x, double y, double z) {
    Vector v(3);
    v << x, y, z;
    return v;
}
}  // namespace

KcbsScenario kcbs_scenario(double theta, double phi) {
    check_phi_domain(phi);
    const double cp = std::cos(phi), sp = std::sin(phi), tp = std::tan(phi);
    const double sq = std::sqrt(std::cos(2.0 * phi));
    const double r2 = std::sqrt(2.0);

    KcbsScenario s{theta, phi, real3(std::sin(theta), std::cos(theta), 0.0), {}};
    s.a[0] = real3(sq / (r2 * cp), tp / r2, 1.0 / r2);
    s.a[1] = real3(0.0, cp, -sp);
    s.a[2] = real3(1.0, 0.0, 0.0);
    s.a[3] = real3(0.0, cp, sp);
    // A5 is the normalized cross product of A1 and A4, taken on the raw
    // coordinate triples; the sign agrees with the first column of U5.
    Vec3 a1(s.a[0](0).real(), s.a[0](1).real(), s.a[0](2).real());
    Vec3 a4(s.a[3](0).real(), s.a[3](1).real(), s.a[3](2).real());
    Vec3 a5 = qcore::cross_normalized(a1, a4);
    s.a[4] = real3(a5(0), a5(1), a5(2));

    for (int i = 0; i < 5; ++i) {
        int next = (i + 1) % 5;
        if (std::abs((s.a[i].adjoint() * s.a[next])(0)) > 1e-10)
            throw std::runtime_error("kcbs_scenario: cyclic orthogonality broken");
    }
    return s;
}

ScenarioUnitaries scenario_unitaries(double theta, double phi) {
    check_phi_domain(phi);
    const double cp = std::cos(phi), sp = std::sin(phi), tp = std::tan(phi);
    const double c2p = std::cos(2.0 * phi);
    const double sq = std::sqrt(c2p);
    const double r2 = std::sqrt(2.0);
    const double q1 = std::sqrt(3.0 * cp * cp - 1.0);
    const double q2 = std::sqrt(3.0 * c2p + 1.0);

    ScenarioUnitaries u;
    u.u1 = Matrix(3, 3);
    u.u1 << sq / (r2 * cp), -cp / q1, tp * std::sqrt(c2p) / q2,
            tp / r2, 0.0, -(2.0 * cp - tp * sp) / q2,
            1.0 / r2, sq / q1, sp / q2;

    u.u2 = Matrix(3, 3);
    u.u2 << 0.0, 0.0, 1.0,
            cp, sp, 0.0,
            -sp, cp, 0.0;

    u.u4 = Matrix(3, 3);
    u.u4 << 0.0, 0.0, 1.0,
            cp, -sp, 0.0,
            sp, cp, 0.0;

    u.u5 = Matrix(3, 3);
    u.u5 << -sq / (r2 * cp), cp / q1, -tp * std::sqrt(c2p) / q2,
            -tp / r2, 0.0, (2.0 * cp - tp * sp) / q2,
            1.0 / r2, sq / q1, sp / q2;

    u.u_psi = Matrix(3, 3);
    u.u_psi << std::sin(theta), -std::cos(theta), 0.0,
               std::cos(theta), std::sin(theta), 0.0,
               0.0, 0.0, 1.0;

    for (const Matrix* m : {&u.u1, &u.u2, &u.u4, &u.u5, &u.u_psi})
        if (!qcore::is_unitary(*m, 1e-10))
            throw std::runtime_error("scenario_unitaries: matrix is not unitary");
    return u;
}

PeresMerminSquare peres_mermin_square() {
    using qcore::tensor;
    Matrix id = Matrix::Identity(2, 2);
    Matrix sx = qcore::pauli_x(), sy = qcore::pauli_y(), sz = qcore::pauli_z();
    PeresMerminSquare sq;
    sq.a_up = tensor(sx, id);
    sq.b_up = tensor(id, sx);
    sq.c_up = tensor(sx, sx);
    sq.a_lo = tensor(id, sy);
    sq.b_lo = tensor(sy, id);
    sq.c_lo = tensor(sy, sy);
    sq.alpha = tensor(sx, sy);
    sq.beta = tensor(sy, sx);
    sq.gamma = tensor(sz, sz);
    return sq;
}

}  // namespace tomoctx::scenarios
