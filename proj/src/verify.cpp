#include "tomoctx/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "tomoctx/qcore.hpp"
#include "tomoctx/scenarios.hpp"
#include "tomoctx/tomography.hpp"

namespace tomoctx::verify {

namespace {

constexpr double kPi = std::numbers::pi;
namespace tg = tomoctx::tomography;

// 20x20 (alpha, beta) comparison grid; beta kept off the poles.
template <typename F>
double max_on_grid(F&& err) {
    double worst = 0.0;
    for (int ia = 0; ia < 20; ++ia) {
        double alpha = 2.0 * kPi * ia / 20.0;
        for (int ib = 0; ib < 20; ++ib) {
            double beta = kPi * (ib + 0.5) / 20.0;
            worst = std::max(worst, err(alpha, beta));
        }
    }
    return worst;
}

Vector real_state(double a1, double a0, double am1) {
    Vector v(3);
    v << a1, a0, am1;
    return v;
}

CheckResult closed_form_tomograms(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, kPi / 2.0);
    const TwiceJ j1(2);
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        double theta = uni(rng);
        Vector psi = real_state(std::sin(theta), std::cos(theta), 0.0);
        auto tom = tg::tomogram_of(qcore::projector_from(psi), j1);
        worst = std::max(worst, max_on_grid([&](double a, double b) {
            double e = 0.0;
            for (int m : {-1, 0, 1})
                e = std::max(e, std::abs(tom(2 * m, a, b) -
                                         tg::closed_form::rho_tomogram(m, theta, a, b)));
            return e;
        }));
    }
    return {"closed-form-tomograms", worst, 1e-12, worst <= 1e-12};
}

CheckResult dual_symbol_closed_form(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const TwiceJ j1(2);
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        Eigen::Vector3d a(gauss(rng), gauss(rng), gauss(rng));
        a.normalize();
        Vector av = real_state(a(0), a(1), a(2));
        auto dual = tg::dual_symbol(qcore::projector_from(av), j1);
        worst = std::max(worst, max_on_grid([&](double al, double b) {
            double e = 0.0;
            for (int m : {-1, 0, 1})
                e = std::max(e, std::abs(dual(2 * m, al, b) -
                                         tg::closed_form::dual_projector_symbol(
                                             m, a(0), a(1), a(2), al, b)));
            return e;
        }));
    }
    return {"dual-symbol-closed-form", worst, 1e-10, worst <= 1e-10};
}

CheckResult born_rule_pairing(std::mt19937_64& rng, const quad::GridSpec& grid) {
    std::uniform_real_distribution<double> uni(0.0, kPi / 2.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const TwiceJ j1(2);
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        double theta = uni(rng);
        Eigen::Vector3d a(gauss(rng), gauss(rng), gauss(rng));
        a.normalize();
        Vector psi = real_state(std::sin(theta), std::cos(theta), 0.0);
        Vector av = real_state(a(0), a(1), a(2));
        auto tom = tg::tomogram_of(qcore::projector_from(psi), j1);
        auto dual = tg::dual_symbol(qcore::projector_from(av), j1);
        double paired = tg::pair_symbols(tom, dual, grid);
        double expected = std::pow(a(0) * std::sin(theta) + a(1) * std::cos(theta), 2);
        worst = std::max(worst, std::abs(paired - expected));
    }
    return {"born-rule-pairing", worst, 1e-9, worst <= 1e-9};
}

CheckResult fidelity_kernel(const quad::GridSpec& grid) {
    const double theta = 0.2366, phi = 0.1698;
    const TwiceJ j1(2);
    auto sc = scenarios::kcbs_scenario(theta, phi);
    auto us = scenarios::scenario_unitaries(theta, phi);
    auto tom_psi = tg::rotated_tomogram(us.u_psi, j1);
    double worst = 0.0;
    const Matrix* uk[] = {&us.u1, &us.u2, &us.u4, &us.u5};
    const int idx[] = {0, 1, 3, 4};
    for (int i = 0; i < 4; ++i) {
        auto tom_k = tg::rotated_tomogram(*uk[i], j1);
        double fid = tg::fidelity(tom_k, tom_psi, grid);
        double direct = std::norm((sc.a[idx[i]].adjoint() * sc.psi)(0));
        worst = std::max(worst, std::abs(fid - direct));
    }
    return {"fidelity-kernel", worst, 1e-9, worst <= 1e-9};
}

CheckResult appendix_tomograms() {
    const TwiceJ j1(2);
    double worst = 0.0;
    for (double phi : {0.7, 0.1698}) {
        auto us = scenarios::scenario_unitaries(0.5, phi);
        const Matrix* uk[] = {&us.u1, &us.u2, nullptr, &us.u4, &us.u5};
        for (int k = 1; k <= 5; ++k) {
            tg::Tomogram tom = (k == 3)
                ? tg::rotated_tomogram(Matrix::Identity(3, 3), j1)
                : tg::rotated_tomogram(*uk[k - 1], j1);
            worst = std::max(worst, max_on_grid([&](double a, double b) {
                double e = 0.0;
                for (int m : {-1, 0, 1})
                    e = std::max(e, std::abs(tom(2 * m, a, b) -
                                             tg::closed_form::appendix_omega(
                                                 k, m, phi, a, b)));
                return e;
            }));
        }
    }
    return {"appendix-tomograms", worst, 1e-10, worst <= 1e-10};
}

CheckResult reconstruction_round_trip(std::mt19937_64& rng,
                                      const quad::GridSpec& grid) {
    double worst = 0.0;
    for (int two_j : {2, 1}) {
        const TwiceJ j(two_j);
        for (int rep = 0; rep < 5; ++rep) {
            Matrix a = qcore::random_hermitian(j.dim(), rng);
            Matrix back = tg::reconstruct(tg::tomogram_of(a, j), grid);
            worst = std::max(worst, (back - a).cwiseAbs().maxCoeff());
        }
    }
    return {"reconstruction-round-trip", worst, 1e-8, worst <= 1e-8};
}

}  // namespace

std::vector<CheckResult> run_verification(const quad::GridSpec& grid) {
    std::mt19937_64 rng(20250901);
    std::vector<CheckResult> out;
    out.push_back(closed_form_tomograms(rng));
    out.push_back(dual_symbol_closed_form(rng));
    out.push_back(born_rule_pairing(rng, grid));
    out.push_back(fidelity_kernel(grid));
    out.push_back(appendix_tomograms());
    out.push_back(reconstruction_round_trip(rng, grid));
    return out;
}

std::string to_json(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os.precision(17);
    bool all = true;
    os << "{\"checks\":[";
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all = all && r.pass;
        os << (i ? "," : "") << "{\"name\":\"" << r.name
           << "\",\"max_error\":" << r.max_error
           << ",\"tolerance\":" << r.tolerance << ",\"pass\":"
           << (r.pass ? "true" : "false") << "}";
    }
    os << "],\"all_pass\":" << (all ? "true" : "false") << "}";
    return os.str();
}

}  // namespace tomoctx::verify
