// Python bindings for the main operations: rotation machinery, tomographic
// symbols, reconstruction, and the inequality evaluators.
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tomoctx/angular.hpp"
#include "tomoctx/contextuality.hpp"
#include "tomoctx/qcore.hpp"
#include "tomoctx/scenarios.hpp"
#include "tomoctx/search.hpp"
#include "tomoctx/tomography.hpp"
#include "tomoctx/verify.hpp"

namespace py = pybind11;
using namespace tomoctx;
namespace tg = tomoctx::tomography;
namespace ctx = tomoctx::contextuality;

namespace {

py::dict report_to_dict(const ctx::InequalityReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["value"] = r.value;
    d["bound"] = r.bound;
    d["direction"] = r.direction == ctx::Direction::Leq ? "<=" : ">=";
    d["violated"] = r.violated;
    d["margin"] = r.margin;
    return d;
}

quad::GridSpec grid_from(int n_alpha, int n_beta) {
    quad::GridSpec g;
    g.n_alpha = n_alpha;
    g.n_beta = n_beta;
    return g;
}

}  // namespace

PYBIND11_MODULE(_tomoctx, m) {
    m.doc() = "Spin tomography and noncontextuality inequalities";

    // angular
    m.def("jacobi_poly", &angular::jacobi_poly, py::arg("n"), py::arg("a"),
          py::arg("b"), py::arg("x"));
    m.def("small_d",
          [](int two_j, int two_m_row, int two_m_col, double beta) {
              return angular::small_d(TwiceJ(two_j), two_m_row, two_m_col, beta);
          },
          py::arg("two_j"), py::arg("two_m_row"), py::arg("two_m_col"),
          py::arg("beta"));
    m.def("wigner_D",
          [](int two_j, int two_m_row, int two_m_col, double alpha, double beta,
             double gamma) {
              return angular::wigner_D(TwiceJ(two_j), two_m_row, two_m_col,
                                       {alpha, beta, gamma});
          },
          py::arg("two_j"), py::arg("two_m_row"), py::arg("two_m_col"),
          py::arg("alpha"), py::arg("beta"), py::arg("gamma") = 0.0);
    m.def("wigner_3j", &angular::wigner_3j, py::arg("two_j1"), py::arg("two_j2"),
          py::arg("two_j3"), py::arg("two_m1"), py::arg("two_m2"),
          py::arg("two_m3"));

    // qcore
    m.def("projector_from", &qcore::projector_from, py::arg("state"));
    m.def("expectation", &qcore::expectation, py::arg("rho"), py::arg("obs"));
    m.def("tensor", &qcore::tensor, py::arg("a"), py::arg("b"));
    m.def("spin1_generators", [] {
        auto g = qcore::spin1_generators();
        return py::make_tuple(g.jx, g.jy, g.jz);
    });

    // tomography
    m.def("dequantizer",
          [](int two_j, int two_m, double alpha, double beta, double gamma) {
              return tg::dequantizer(TwiceJ(two_j), two_m, {alpha, beta, gamma});
          },
          py::arg("two_j"), py::arg("two_m"), py::arg("alpha"), py::arg("beta"),
          py::arg("gamma") = 0.0);
    m.def("quantizer",
          [](int two_j, int two_m, double alpha, double beta) {
              return tg::quantizer(TwiceJ(two_j), two_m, alpha, beta);
          },
          py::arg("two_j"), py::arg("two_m"), py::arg("alpha"), py::arg("beta"));
    m.def("tomogram_value",
          [](const Matrix& op, int two_j, int two_m, double alpha, double beta) {
              return tg::tomogram_of(op, TwiceJ(two_j))(two_m, alpha, beta);
          },
          py::arg("op"), py::arg("two_j"), py::arg("two_m"), py::arg("alpha"),
          py::arg("beta"));
    m.def("dual_symbol_value",
          [](const Matrix& op, int two_j, int two_m, double alpha, double beta) {
              return tg::dual_symbol(op, TwiceJ(two_j))(two_m, alpha, beta);
          },
          py::arg("op"), py::arg("two_j"), py::arg("two_m"), py::arg("alpha"),
          py::arg("beta"));
    m.def("reconstruct",
          [](int two_j, const std::function<double(int, double, double)>& eval,
             int n_alpha, int n_beta) {
              tg::Tomogram tom{TwiceJ(two_j), eval};
              return tg::reconstruct(tom, grid_from(n_alpha, n_beta));
          },
          py::arg("two_j"), py::arg("eval"), py::arg("n_alpha") = 64,
          py::arg("n_beta") = 32,
          "Reconstruct an operator from a tomogram callable (two_m, alpha, beta)");
    m.def("pair_expectation",
          [](const Matrix& rho, const Matrix& obs, int two_j, int n_alpha,
             int n_beta) {
              TwiceJ j(two_j);
              return tg::pair_symbols(tg::tomogram_of(rho, j),
                                      tg::dual_symbol(obs, j),
                                      grid_from(n_alpha, n_beta));
          },
          py::arg("rho"), py::arg("obs"), py::arg("two_j"),
          py::arg("n_alpha") = 64, py::arg("n_beta") = 32);
    m.def("fidelity",
          [](const Matrix& u_k, const Matrix& u_psi, int n_alpha, int n_beta) {
              TwiceJ j(2);
              return tg::fidelity(tg::rotated_tomogram(u_k, j),
                                  tg::rotated_tomogram(u_psi, j),
                                  grid_from(n_alpha, n_beta));
          },
          py::arg("u_k"), py::arg("u_psi"), py::arg("n_alpha") = 64,
          py::arg("n_beta") = 32);
    m.def("u3_matrix",
          [](const std::array<double, 3>& theta, const std::array<double, 6>& phi) {
              return tg::u3_matrix({theta, phi});
          },
          py::arg("theta"), py::arg("phi"));
    m.def("unitary_tomogram",
          [](const std::array<double, 3>& theta, const std::array<double, 6>& phi) {
              Vec3 w = tg::unitary_tomogram({theta, phi});
              return std::array<double, 3>{w(0), w(1), w(2)};
          },
          py::arg("theta"), py::arg("phi"));

    // scenarios
    m.def("kcbs_scenario", [](double theta, double phi) {
        auto sc = scenarios::kcbs_scenario(theta, phi);
        py::dict d;
        d["theta"] = sc.theta;
        d["phi"] = sc.phi;
        d["psi"] = Vector(sc.psi);
        py::list vs;
        for (const auto& v : sc.a) vs.append(Vector(v));
        d["a"] = vs;
        return d;
    }, py::arg("theta") = 0.2366, py::arg("phi") = 0.1698);
    m.def("scenario_unitaries", [](double theta, double phi) {
        auto u = scenarios::scenario_unitaries(theta, phi);
        return py::make_tuple(u.u1, u.u2, u.u4, u.u5, u.u_psi);
    }, py::arg("theta") = 0.2366, py::arg("phi") = 0.1698);

    // contextuality
    m.def("shannon_entropy", [](const std::vector<double>& probs) {
        ctx::OutcomeDistribution d;
        d.probs = probs;
        d.outcomes.resize(probs.size());
        return ctx::shannon_entropy(d);
    }, py::arg("probs"));
    m.def("entropic_chain", [](double theta, double phi) {
        auto sc = scenarios::kcbs_scenario(theta, phi);
        std::array<ctx::JointDistribution, 5> joints = {
            ctx::joint_from_projectors(sc.a[0], sc.a[1], sc.psi),
            ctx::joint_from_projectors(sc.a[1], sc.a[2], sc.psi),
            ctx::joint_from_projectors(sc.a[2], sc.a[3], sc.psi),
            ctx::joint_from_projectors(sc.a[3], sc.a[4], sc.psi),
            ctx::joint_from_projectors(sc.a[4], sc.a[0], sc.psi)};
        return report_to_dict(ctx::entropic_chain(joints));
    }, py::arg("theta") = 0.2366, py::arg("phi") = 0.1698);
    m.def("peres_mermin", [](const Matrix& rho) {
        return report_to_dict(ctx::peres_mermin(rho));
    }, py::arg("rho"));
    m.def("ncycle_bounds", [](int n) {
        auto b = ctx::ncycle_bounds(n);
        py::dict d;
        d["classical"] = b.classical;
        if (b.quantum_dim3) d["quantum_dim3"] = *b.quantum_dim3;
        if (b.quantum_dim4) d["quantum_dim4"] = *b.quantum_dim4;
        return d;
    }, py::arg("n"));
    m.def("symmetric_pentagram", [] {
        std::vector<std::array<double, 3>> dirs;
        for (const auto& d : ctx::symmetric_pentagram())
            dirs.push_back({d(0), d(1), d(2)});
        return dirs;
    });
    m.def("pentagram_value",
          [](const std::vector<std::array<double, 3>>& dirs, const Vector& psi) {
              if (dirs.size() != 5)
                  throw std::invalid_argument("need exactly 5 directions");
              std::array<Vec3, 5> d;
              for (int i = 0; i < 5; ++i)
                  d[i] = Vec3(dirs[i][0], dirs[i][1], dirs[i][2]);
              return report_to_dict(ctx::pentagram_value(d, psi));
          },
          py::arg("directions"), py::arg("psi"));

    // verification suite
    m.def("run_verification", [](int n_alpha, int n_beta) {
        py::list out;
        for (const auto& r : verify::run_verification(grid_from(n_alpha, n_beta))) {
            py::dict d;
            d["name"] = r.name;
            d["max_error"] = r.max_error;
            d["tolerance"] = r.tolerance;
            d["pass"] = r.pass;
            out.append(d);
        }
        return out;
    }, py::arg("n_alpha") = 64, py::arg("n_beta") = 32);
}
