#include <cmath>

#include "doctest.h"
#include "tomoctx/quad.hpp"

using namespace tomoctx;
namespace qd = tomoctx::quad;

namespace {
const double kPi = M_PI;
}

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
    auto [x, w] = qd::gauss_legendre(8);
    double s0 = 0, s2 = 0, s14 = 0;
    for (int i = 0; i < 8; ++i) {
        s0 += w[i];
        s2 += w[i] * x[i] * x[i];
        s14 += w[i] * std::pow(x[i], 14);
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    // degree 14 < 2n = 16 is still exact
    CHECK(s14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("euler integration against hand antiderivatives") {
    qd::GridSpec g;

    auto one = [](const angular::EulerAngles&) { return Complex(1.0, 0.0); };
    CHECK(qd::integrate_euler(one, g).real() ==
          doctest::Approx(8 * kPi * kPi).epsilon(1e-13));

    auto cosa = [](const angular::EulerAngles& e) {
        return Complex(std::cos(e.alpha), 0.0);
    };
    CHECK(std::abs(qd::integrate_euler(cosa, g)) < 1e-12);

    // int da dg cos^2(b) sin(b) db = 4 pi^2 * 2/3
    auto cos2b = [](const angular::EulerAngles& e) {
        return Complex(std::cos(e.beta) * std::cos(e.beta), 0.0);
    };
    CHECK(qd::integrate_euler(cos2b, g).real() ==
          doctest::Approx(8 * kPi * kPi / 3.0).epsilon(1e-13));

    // int cos^4(b) over the measure = 4 pi^2 * 2/5
    auto cos4b = [](const angular::EulerAngles& e) {
        return Complex(std::pow(std::cos(e.beta), 4), 0.0);
    };
    CHECK(qd::integrate_euler(cos4b, g).real() ==
          doctest::Approx(8 * kPi * kPi / 5.0).epsilon(1e-13));

    // odd-in-cos monomial sin^2(b) cos(b) integrates to 0
    auto odd = [](const angular::EulerAngles& e) {
        return Complex(std::sin(e.beta) * std::sin(e.beta) * std::cos(e.beta),
                       0.0);
    };
    CHECK(std::abs(qd::integrate_euler(odd, g)) < 1e-13);

    // mixed monomial cos^2(a) cos^2(b) cos^2(g)
    auto mixed = [](const angular::EulerAngles& e) {
        return Complex(std::pow(std::cos(e.alpha) * std::cos(e.beta) *
                                    std::cos(e.gamma),
                                2),
                       0.0);
    };
    CHECK(qd::integrate_euler(mixed, g).real() ==
          doctest::Approx(kPi * kPi * (2.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("gamma-free path equals the 3d quadrature for gamma-free f") {
    qd::GridSpec g;
    auto f2 = [](double a, double b) {
        return Complex(std::cos(a) * std::cos(a) * std::cos(b), 0.0);
    };
    auto f3 = [&](const angular::EulerAngles& e) { return f2(e.alpha, e.beta); };
    CHECK(std::abs(qd::integrate_euler_gamma_free(f2, g) -
                   qd::integrate_euler(f3, g)) < 1e-12);
}

TEST_CASE("sphere integration") {
    qd::GridSpec g;
    auto one = [](double, double) { return Complex(1.0, 0.0); };
    CHECK(qd::integrate_sphere(one, g).real() ==
          doctest::Approx(1.0).epsilon(1e-14));
    auto cost = [](double t, double) { return Complex(std::cos(t), 0.0); };
    CHECK(std::abs(qd::integrate_sphere(cost, g)) < 1e-13);
    auto cos2t = [](double t, double) {
        return Complex(std::cos(t) * std::cos(t), 0.0);
    };
    CHECK(qd::integrate_sphere(cos2t, g).real() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("grid doubling is stable for low-degree integrands") {
    qd::GridSpec g;
    qd::GridSpec big;
    big.n_alpha = 128;
    big.n_beta = 64;
    big.n_gamma = 128;
    auto f = [](const angular::EulerAngles& e) {
        return Complex(std::pow(std::cos(e.beta), 4) *
                           std::cos(2 * e.alpha) * std::cos(2 * e.alpha),
                       0.0);
    };
    CHECK(std::abs(qd::integrate_euler(f, g) - qd::integrate_euler(f, big)) <
          1e-13);
}

TEST_CASE("NaN integrand is rejected") {
    qd::GridSpec g;
    g.n_alpha = 4;
    g.n_beta = 4;
    g.n_gamma = 4;
    auto bad = [](const angular::EulerAngles& e) {
        return Complex(e.alpha > 3.0 ? std::nan("") : 1.0, 0.0);
    };
    CHECK_THROWS(qd::integrate_euler(bad, g));
}
