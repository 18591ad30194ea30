#include <cmath>
#include <random>

#include "doctest.h"
#include "tomoctx/qcore.hpp"
#include "tomoctx/scenarios.hpp"
#include "tomoctx/tomography.hpp"

using namespace tomoctx;
namespace tg = tomoctx::tomography;
namespace qc = tomoctx::qcore;
namespace ang = tomoctx::angular;

namespace {

Vector real3(double a, double b, double c) {
    Vector v(3);
    v << a, b, c;
    return v;
}

}  // namespace

TEST_CASE("dequantizer is a rank-1 projector with trace 1") {
    TwiceJ j(2);
    Matrix p = tg::dequantizer(j, 2, {0.0, 0.0, 0.0});
    CHECK(p(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-14));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> ub(0.0, M_PI);
    for (int t = 0; t < 100; ++t) {
        ang::EulerAngles e{ua(rng), ub(rng), ua(rng)};
        int two_m = 2 - 2 * static_cast<int>(rng() % 3);
        Matrix u = tg::dequantizer(j, two_m, e);
        CHECK(std::abs(u.trace() - Complex(1.0)) < 1e-12);
        CHECK((u * u - u).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(qc::is_hermitian(u, 1e-12));
    }

    // m=0, beta=pi/2: outer product of the middle-row amplitudes.
    Matrix u0 = tg::dequantizer(j, 0, {0.0, M_PI / 2, 0.0});
    double dpp = ang::small_d(j, 0, 2, M_PI / 2);
    double dpm = ang::small_d(j, 0, -2, M_PI / 2);
    CHECK(u0(0, 0).real() == doctest::Approx(dpp * dpp).epsilon(1e-13));
    CHECK(u0(2, 2).real() == doctest::Approx(dpm * dpm).epsilon(1e-13));
    CHECK(u0(1, 1).real() == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("tomogram closed forms and trivial sources") {
    TwiceJ j(2);
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> uth(0.0, M_PI / 2);

    Matrix mixed = Matrix::Identity(3, 3) / 3.0;
    tg::Tomogram mix_tom = tg::tomogram_of(mixed, j);
    CHECK(mix_tom(2, 1.1, 0.7) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(mix_tom(0, 0.2, 2.3) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    for (int t = 0; t < 10; ++t) {
        double th = uth(rng);
        Matrix rho = qc::projector_from(real3(std::sin(th), std::cos(th), 0));
        tg::Tomogram tom = tg::tomogram_of(rho, j);
        for (int ia = 0; ia < 20; ++ia)
            for (int ib = 0; ib < 20; ++ib) {
                double a = 2 * M_PI * ia / 20.0;
                double b = M_PI * (ib + 0.5) / 20.0;
                for (int m = -1; m <= 1; ++m)
                    CHECK(tom(2 * m, a, b) ==
                          doctest::Approx(
                              tg::closed_form::rho_tomogram(m, th, a, b))
                              .epsilon(1e-12));
            }
    }
}

TEST_CASE("tomogram normalization and gamma independence") {
    std::mt19937_64 rng(43);
    for (int two_j : {1, 2, 3}) {
        TwiceJ j(two_j);
        Matrix rho = qc::random_density(j.dim(), rng);
        tg::Tomogram tom = tg::tomogram_of(rho, j);
        std::uniform_real_distribution<double> ua(0.0, 2 * M_PI);
        std::uniform_real_distribution<double> ub(0.0, M_PI);
        for (int t = 0; t < 40; ++t) {
            double a = ua(rng), b = ub(rng);
            double sum = 0.0;
            for (int two_m = -two_j; two_m <= two_j; two_m += 2)
                sum += tom(two_m, a, b);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
        // gamma never enters the symbol: compare against explicit dequantizers
        // at 10 random gamma values.
        for (int t = 0; t < 10; ++t) {
            double a = ua(rng), b = ub(rng), g = ua(rng);
            Matrix u = tg::dequantizer(j, two_j, {a, b, g});
            double via_g = (rho * u).trace().real();
            CHECK(tom(two_j, a, b) == doctest::Approx(via_g).epsilon(1e-13));
        }
    }
}

TEST_CASE("dual symbol closed form and identity pairing") {
    TwiceJ j(2);
    quad::GridSpec grid;
    std::mt19937_64 rng(47);
    std::normal_distribution<double> nd(0.0, 1.0);

    for (int t = 0; t < 10; ++t) {
        Vector a = real3(nd(rng), nd(rng), nd(rng));
        a.normalize();
        tg::DualSymbol dual = tg::dual_symbol(qc::projector_from(a), j);
        for (int ia = 0; ia < 20; ++ia)
            for (int ib = 0; ib < 20; ++ib) {
                double al = 2 * M_PI * ia / 20.0;
                double be = M_PI * (ib + 0.5) / 20.0;
                for (int m = -1; m <= 1; ++m)
                    CHECK(dual(2 * m, al, be) ==
                          doctest::Approx(tg::closed_form::dual_projector_symbol(
                                              m, a(0).real(), a(1).real(),
                                              a(2).real(), al, be))
                              .epsilon(1e-10));
            }
    }

    // Zero operator has an identically zero dual symbol.
    tg::DualSymbol zero = tg::dual_symbol(Matrix::Zero(3, 3), j);
    CHECK(zero(2, 0.3, 1.1) == doctest::Approx(0.0).epsilon(1e-15));

    // Pairing any state tomogram with the dual of I gives Tr[rho] = 1.
    tg::DualSymbol ident = tg::dual_symbol(Matrix::Identity(3, 3), j);
    for (int t = 0; t < 10; ++t) {
        Matrix rho = qc::random_density(3, rng);
        CHECK(tg::pair_symbols(tg::tomogram_of(rho, j), ident, grid) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("pairing equals the trace for random operator pairs") {
    TwiceJ j(2);
    quad::GridSpec grid;
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        Matrix rho = qc::random_density(3, rng);
        Matrix obs = qc::random_hermitian(3, rng);
        double direct = (rho * obs).trace().real();
        double paired = tg::pair_symbols(tg::tomogram_of(rho, j),
                                         tg::dual_symbol(obs, j), grid);
        CHECK(paired == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("reconstruction round trips") {
    quad::GridSpec grid;
    std::mt19937_64 rng(59);

    // Basis projector.
    TwiceJ j1(2);
    Matrix p = Matrix::Zero(3, 3);
    p(0, 0) = 1.0;
    Matrix back = tg::reconstruct(tg::tomogram_of(p, j1), grid);
    CHECK((back - p).cwiseAbs().maxCoeff() < 1e-8);

    for (int two_j : {1, 2}) {
        TwiceJ j(two_j);
        for (int t = 0; t < 5; ++t) {
            Matrix h = qc::random_hermitian(j.dim(), rng);
            Matrix rec = tg::reconstruct(tg::tomogram_of(h, j), grid);
            CHECK((rec - h).cwiseAbs().maxCoeff() < 1e-8);
        }
    }

    // Full 3d gamma quadrature agrees with the analytic collapse.
    Matrix h = qc::random_hermitian(3, rng);
    quad::GridSpec small;
    small.n_alpha = 24;
    small.n_beta = 12;
    small.n_gamma = 8;
    Matrix a = tg::reconstruct(tg::tomogram_of(h, TwiceJ(2)), small, false);
    Matrix b = tg::reconstruct(tg::tomogram_of(h, TwiceJ(2)), small, true);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("rotated tomograms match the appendix expressions") {
    quad::GridSpec grid;
    for (double phi : {0.7, 0.1698}) {
        auto us = scenarios::scenario_unitaries(0.2366, phi);
        std::array<std::pair<int, Matrix>, 5> cases = {
            std::pair<int, Matrix>{1, us.u1},
            {2, us.u2},
            {3, Matrix(Matrix::Identity(3, 3))},
            {4, us.u4},
            {5, us.u5}};
        for (const auto& [k, u] : cases) {
            tg::Tomogram tom = tg::rotated_tomogram(u, TwiceJ(2));
            for (int ia = 0; ia < 20; ++ia)
                for (int ib = 0; ib < 20; ++ib) {
                    double a = 2 * M_PI * ia / 20.0;
                    double b = M_PI * (ib + 0.5) / 20.0;
                    for (int m = -1; m <= 1; ++m)
                        CHECK(tom(2 * m, a, b) ==
                              doctest::Approx(tg::closed_form::appendix_omega(
                                                  k, m, phi, a, b))
                                  .epsilon(1e-10));
                }
        }
    }
    CHECK_THROWS(tg::rotated_tomogram(2.0 * Matrix::Identity(3, 3), TwiceJ(2)));
}

TEST_CASE("fidelity kernel") {
    quad::GridSpec grid;
    auto us = scenarios::scenario_unitaries(0.2366, 0.1698);
    auto sc = scenarios::kcbs_scenario(0.2366, 0.1698);

    tg::Tomogram tom_psi = tg::rotated_tomogram(us.u_psi, TwiceJ(2));
    CHECK(tg::fidelity(tom_psi, tom_psi, grid) ==
          doctest::Approx(1.0).epsilon(1e-9));

    // A2 is orthogonal to A1 and A3.
    tg::Tomogram tom1 = tg::rotated_tomogram(us.u1, TwiceJ(2));
    tg::Tomogram tom2 = tg::rotated_tomogram(us.u2, TwiceJ(2));
    CHECK(tg::fidelity(tom1, tom2, grid) == doctest::Approx(0.0).epsilon(1e-9));

    double want = std::norm(sc.a[0].dot(sc.psi));
    CHECK(tg::fidelity(tom1, tom_psi, grid) ==
          doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("u3 matrix and unitary tomogram") {
    tg::U3Params id{};
    CHECK((tg::u3_matrix(id) - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-14);

    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> uth(0.0, M_PI / 2);
    std::uniform_real_distribution<double> uph(0.0, 2 * M_PI);
    for (int t = 0; t < 100; ++t) {
        tg::U3Params p;
        for (auto& th : p.theta) th = uth(rng);
        for (auto& ph : p.phi) ph = uph(rng);
        Matrix u = tg::u3_matrix(p);
        CHECK((u * u.adjoint() - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
              1e-12);
        Vec3 w = tg::unitary_tomogram(p);
        CHECK(w(0) == doctest::Approx(std::norm(u(0, 0))).epsilon(1e-13));
        CHECK(w(1) == doctest::Approx(std::norm(u(1, 0))).epsilon(1e-13));
        CHECK(w(2) == doctest::Approx(std::norm(u(2, 0))).epsilon(1e-13));
        CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-13));
        // Closed forms hold for any phases.
        CHECK(w(0) == doctest::Approx(std::pow(std::cos(p.theta[0]), 2))
                          .epsilon(1e-13));
        CHECK(w(1) == doctest::Approx(std::pow(std::cos(p.theta[1]) *
                                                   std::sin(p.theta[0]),
                                               2))
                          .epsilon(1e-13));
        CHECK(w(2) == doctest::Approx(std::pow(std::sin(p.theta[0]) *
                                                   std::sin(p.theta[1]),
                                               2))
                          .epsilon(1e-13));
    }

    tg::U3Params edge{};
    edge.theta = {M_PI / 2, M_PI / 2, 0.3};
    Vec3 w = tg::unitary_tomogram(edge);
    CHECK(w(2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("probability reads clamp quadrature noise only") {
    tg::Tomogram noisy{TwiceJ(2), [](int two_m, double, double) {
                           if (two_m == 2) return -5e-11;
                           if (two_m == 0) return -1e-6;
                           return 0.5;
                       }};
    CHECK(noisy.prob(2, 0, 0) == 0.0);
    CHECK_THROWS(noisy.prob(0, 0, 0));
}
