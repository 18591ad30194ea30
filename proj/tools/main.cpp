// tomoctx command-line frontend: tomogram export, inequality evaluation,
// parameter scans, and the closed-form verification suite.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tomoctx/contextuality.hpp"
#include "tomoctx/json_io.hpp"
#include "tomoctx/qcore.hpp"
#include "tomoctx/scenarios.hpp"
#include "tomoctx/search.hpp"
#include "tomoctx/tomography.hpp"
#include "tomoctx/verify.hpp"

namespace {

using namespace tomoctx;
namespace tg = tomoctx::tomography;
namespace ctx = tomoctx::contextuality;

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TOMOCTX_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

Matrix load_state(const std::string& spec, int dim, std::uint64_t seed) {
    if (spec == "random") {
        std::mt19937_64 rng(seed);
        return qcore::random_density(dim, rng);
    }
    std::ifstream in(spec);
    if (!in) throw std::runtime_error("cannot open state file: " + spec);
    nlohmann::json j;
    in >> j;
    Matrix m = json_io::matrix_from_json(j);
    if (m.rows() != dim)
        throw std::runtime_error("state file has wrong dimension");
    return m;
}

struct TomogramSource {
    std::string label;
    tg::Tomogram tom;
};

std::vector<TomogramSource> scenario_tomograms(double theta, double phi) {
    const TwiceJ j1(2);
    auto us = scenarios::scenario_unitaries(theta, phi);
    std::vector<TomogramSource> out;
    out.push_back({"1", tg::rotated_tomogram(us.u1, j1)});
    out.push_back({"2", tg::rotated_tomogram(us.u2, j1)});
    out.push_back({"3", tg::rotated_tomogram(Matrix::Identity(3, 3), j1)});
    out.push_back({"4", tg::rotated_tomogram(us.u4, j1)});
    out.push_back({"5", tg::rotated_tomogram(us.u5, j1)});
    out.push_back({"psi", tg::rotated_tomogram(us.u_psi, j1)});
    return out;
}

int cmd_tomogram(const std::string& scenario, const std::string& op_file,
                 double theta, double phi, int two_j, bool simplex,
                 int n_alpha, int n_beta, const std::string& output) {
    std::vector<TomogramSource> sources;
    TwiceJ j(two_j);
    if (!scenario.empty()) {
        if (scenario != "kcbs")
            throw std::runtime_error("unknown scenario: " + scenario);
        sources = scenario_tomograms(theta, phi);
        j = TwiceJ(2);
    } else if (!op_file.empty()) {
        std::ifstream in(op_file);
        if (!in) throw std::runtime_error("cannot open operator file: " + op_file);
        nlohmann::json jj;
        in >> jj;
        Matrix op = json_io::matrix_from_json(jj);
        j = TwiceJ(int(op.rows()) - 1);
        sources.push_back({"op", tg::tomogram_of(op, j)});
    } else {
        throw std::runtime_error("tomogram: need --scenario or --operator");
    }

    std::ostringstream csv;
    csv << (simplex ? "k,w1,w0,wm1\n" : "k,m,alpha,beta,omega\n");
    for (const auto& src : sources) {
        for (int ia = 0; ia < n_alpha; ++ia) {
            double alpha = 2.0 * kPi * ia / n_alpha;
            for (int ib = 0; ib < n_beta; ++ib) {
                double beta = kPi * (ib + 0.5) / n_beta;
                if (simplex) {
                    csv << src.label;
                    for (int m : {1, 0, -1})
                        csv << ',' << fmt(src.tom.prob(2 * m, alpha, beta));
                    csv << '\n';
                } else {
                    for (int m : {1, 0, -1})
                        csv << src.label << ',' << m << ',' << fmt(alpha) << ','
                            << fmt(beta) << ',' << fmt(src.tom(2 * m, alpha, beta))
                            << '\n';
                }
            }
        }
    }
    write_output(output, csv.str());
    return 0;
}

ctx::InequalityReport entropic_report(double theta, double phi) {
    auto sc = scenarios::kcbs_scenario(theta, phi);
    std::array<ctx::JointDistribution, 5> joints = {
        ctx::joint_from_projectors(sc.a[0], sc.a[1], sc.psi),
        ctx::joint_from_projectors(sc.a[1], sc.a[2], sc.psi),
        ctx::joint_from_projectors(sc.a[2], sc.a[3], sc.psi),
        ctx::joint_from_projectors(sc.a[3], sc.a[4], sc.psi),
        ctx::joint_from_projectors(sc.a[4], sc.a[0], sc.psi)};
    return ctx::entropic_chain(joints);
}

Vector axis_state() {
    Vector psi(3);
    psi << 0.0, 0.0, 1.0;
    return psi;
}

int cmd_inequality(const std::string& family, double theta, double phi, int n,
                   bool bounds_only, const std::string& state,
                   std::uint64_t seed, const std::string& output) {
    std::string json;
    if (family == "entropic") {
        json = entropic_report(theta, phi).to_json();
    } else if (family == "peres-mermin") {
        Matrix rho = state.empty() ? Matrix(Matrix::Identity(4, 4) / 4.0)
                                   : load_state(state, 4, seed);
        json = ctx::peres_mermin(rho).to_json();
    } else if (family == "ncycle") {
        auto b = ctx::ncycle_bounds(n);
        if (bounds_only) {
            std::ostringstream os;
            os.precision(17);
            os << "{\"name\":\"ncycle-" << n << "-bounds\",\"classical\":"
               << b.classical;
            if (b.quantum_dim3) os << ",\"quantum_dim3\":" << *b.quantum_dim3;
            if (b.quantum_dim4) os << ",\"quantum_dim4\":" << *b.quantum_dim4;
            os << "}";
            json = os.str();
        } else {
            if (n != 5)
                throw std::runtime_error(
                    "ncycle evaluation is provided for n=5; use --bounds-only");
            auto dirs = ctx::symmetric_pentagram();
            std::vector<Matrix> obs;
            for (const auto& d : dirs) {
                Vector l(3);
                l << d(0), d(1), d(2);
                obs.push_back(2.0 * qcore::projector_from(l) -
                              Matrix::Identity(3, 3));
            }
            Matrix rho = state.empty()
                             ? qcore::projector_from(axis_state())
                             : load_state(state, 3, seed);
            json = ctx::ncycle_value(obs, rho).to_json();
        }
    } else if (family == "kcbs") {
        auto dirs = ctx::symmetric_pentagram();
        std::vector<Matrix> obs;
        for (const auto& d : dirs) {
            Vector l(3);
            l << d(0), d(1), d(2);
            obs.push_back(2.0 * qcore::projector_from(l) - Matrix::Identity(3, 3));
        }
        Matrix rho = state.empty() ? qcore::projector_from(axis_state())
                                   : load_state(state, 3, seed);
        std::array<double, 5> means{};
        for (int i = 0; i < 5; ++i)
            means[i] =
                qcore::expectation(rho, obs[i] * obs[(i + 1) % 5]).real();
        json = ctx::kcbs_dichotomic(means).to_json();
    } else if (family == "pentagram") {
        Matrix rho = state.empty() ? qcore::projector_from(axis_state())
                                   : load_state(state, 3, seed);
        json = ctx::pentagram_value(ctx::symmetric_pentagram(), rho).to_json();
    } else {
        throw std::runtime_error("unknown inequality family: " + family);
    }
    write_output(output, json + "\n");
    return 0;
}

int cmd_scan(const std::string& family, int resolution, double theta_min,
             double theta_max, double phi_min, double phi_max,
             const std::string& output) {
    std::ostringstream csv;
    if (family == "unitary-tomogram") {
        csv << "theta1,theta2,w1,w0,wm1\n";
        for (int i = 0; i < resolution; ++i) {
            double t1 = resolution == 1
                            ? theta_min
                            : theta_min + (theta_max - theta_min) * i /
                                              double(resolution - 1);
            for (int k = 0; k < resolution; ++k) {
                double t2 = resolution == 1
                                ? theta_min
                                : theta_min + (theta_max - theta_min) * k /
                                                  double(resolution - 1);
                tg::U3Params p;
                p.theta = {t1, t2, 0.0};
                Vec3 w = tg::unitary_tomogram(p);
                csv << fmt(t1) << ',' << fmt(t2) << ',' << fmt(w(0)) << ','
                    << fmt(w(1)) << ',' << fmt(w(2)) << '\n';
            }
        }
    } else if (family == "entropic") {
        csv << "theta,phi,value,violated\n";
        for (int i = 0; i < resolution; ++i) {
            double t = resolution == 1
                           ? theta_min
                           : theta_min + (theta_max - theta_min) * i /
                                             double(resolution - 1);
            for (int k = 0; k < resolution; ++k) {
                double p = resolution == 1
                               ? phi_min
                               : phi_min + (phi_max - phi_min) * k /
                                               double(resolution - 1);
                auto rep = entropic_report(t, p);
                csv << fmt(t) << ',' << fmt(p) << ',' << fmt(rep.value) << ','
                    << (rep.violated ? 1 : 0) << '\n';
            }
        }
    } else {
        throw std::runtime_error("unknown scan family: " + family);
    }
    write_output(output, csv.str());
    return 0;
}

int cmd_verify(const std::vector<int>& grid_args, const std::string& output) {
    quad::GridSpec grid;
    if (!grid_args.empty()) {
        if (grid_args.size() != 3)
            throw std::runtime_error("--grid takes three integers");
        grid.n_alpha = grid_args[0];
        grid.n_beta = grid_args[1];
        grid.n_gamma = grid_args[2];
    }
    auto results = verify::run_verification(grid);
    write_output(output, verify::to_json(results) + "\n");
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-tomography and noncontextuality inequality toolkit"};
    app.require_subcommand(1);

    std::string scenario, op_file, state, output;
    double theta = 0.2366, phi = 0.1698;
    int two_j = 2, n = 5, resolution = 100;
    bool simplex = false, bounds_only = false;
    int grid_alpha = 64, grid_beta = 32, grid_gamma = 64;
    std::uint64_t seed = default_seed();
    std::vector<int> verify_grid;
    double theta_min = 0.0, theta_max = kPi / 2.0;
    double phi_min = 0.05, phi_max = kPi / 4.0 - 0.05;
    std::string family;

    auto* tomo = app.add_subcommand("tomogram", "Export tomogram point clouds as CSV");
    tomo->add_option("--scenario", scenario, "Named scenario (kcbs)");
    tomo->add_option("--operator", op_file, "Operator JSON file");
    tomo->add_option("--theta", theta, "Scenario theta");
    tomo->add_option("--phi", phi, "Scenario phi");
    tomo->add_option("--j", two_j, "Twice the spin (operator input)");
    tomo->add_flag("--simplex", simplex, "Emit simplex rows (k,w1,w0,wm1)");
    tomo->add_option("--grid-alpha", grid_alpha, "Alpha points");
    tomo->add_option("--grid-beta", grid_beta, "Beta points");
    tomo->add_option("--output,-o", output, "Output file (default stdout)");

    auto* ineq = app.add_subcommand("inequality", "Evaluate a noncontextuality inequality");
    ineq->add_option("family", family, "kcbs|ncycle|peres-mermin|entropic|pentagram")
        ->required();
    ineq->add_option("--theta", theta, "Scenario theta");
    ineq->add_option("--phi", phi, "Scenario phi");
    ineq->add_option("--n", n, "Cycle length");
    ineq->add_flag("--bounds-only", bounds_only, "Report bounds, no evaluation");
    ineq->add_option("--state", state, "State file or 'random'");
    ineq->add_option("--seed", seed, "Seed for random state");
    ineq->add_option("--output,-o", output, "Output file (default stdout)");

    auto* scan = app.add_subcommand("scan", "Parameter scan, CSV output");
    scan->add_option("family", family, "unitary-tomogram|entropic")->required();
    scan->add_option("--resolution", resolution, "Points per axis");
    scan->add_option("--theta-min", theta_min, "Theta axis start");
    scan->add_option("--theta-max", theta_max, "Theta axis end");
    scan->add_option("--phi-min", phi_min, "Phi axis start");
    scan->add_option("--phi-max", phi_max, "Phi axis end");
    scan->add_option("--output,-o", output, "Output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Run the closed-form verification suite");
    ver->add_option("--grid", verify_grid, "n_alpha n_beta n_gamma")->expected(3);
    ver->add_option("--output,-o", output, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tomo->parsed())
            return cmd_tomogram(scenario, op_file, theta, phi, two_j, simplex,
                                grid_alpha, grid_beta, output);
        if (ineq->parsed())
            return cmd_inequality(family, theta, phi, n, bounds_only, state,
                                  seed, output);
        if (scan->parsed())
            return cmd_scan(family, resolution, theta_min, theta_max, phi_min,
                            phi_max, output);
        if (ver->parsed()) return cmd_verify(verify_grid, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
