#include "tomoctx/contextuality.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tomoctx/qcore.hpp"
#include "tomoctx/scenarios.hpp"

namespace tomoctx::contextuality {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kViolationEps = 1e-10;

double clamp_prob(double p) {
    if (p < -1e-12)
        throw std::invalid_argument("probability below tolerance: " +
                                    std::to_string(p));
    return p < 0.0 ? 0.0 : p;
}

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

void OutcomeDistribution::validate() {
    if (outcomes.size() != probs.size())
        throw std::invalid_argument("OutcomeDistribution: label/prob size mismatch");
    double sum = 0.0;
    for (double& p : probs) {
        p = clamp_prob(p);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw std::invalid_argument("OutcomeDistribution: not normalized, sum=" +
                                    std::to_string(sum));
}

void JointDistribution::validate() {
    if (p.rows() != Eigen::Index(a_labels.size()) ||
        p.cols() != Eigen::Index(b_labels.size()))
        throw std::invalid_argument("JointDistribution: shape mismatch");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
            p(i, j) = clamp_prob(p(i, j));
            sum += p(i, j);
        }
    if (std::abs(sum - 1.0) > 1e-10)
        throw std::invalid_argument("JointDistribution: not normalized");
}

OutcomeDistribution JointDistribution::marginal_a() const {
    OutcomeDistribution d{a_labels, {}};
    for (Eigen::Index i = 0; i < p.rows(); ++i) d.probs.push_back(p.row(i).sum());
    return d;
}

OutcomeDistribution JointDistribution::marginal_b() const {
    OutcomeDistribution d{b_labels, {}};
    for (Eigen::Index j = 0; j < p.cols(); ++j) d.probs.push_back(p.col(j).sum());
    return d;
}

JointDistribution JointDistribution::transposed() const {
    return {b_labels, a_labels, p.transpose()};
}

std::string InequalityReport::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"name\":\"" << name << "\",\"value\":" << value
       << ",\"bound\":" << bound << ",\"direction\":\""
       << (direction == Direction::Leq ? "<=" : ">=") << "\",\"violated\":"
       << (violated ? "true" : "false") << ",\"margin\":" << margin << "}";
    return os.str();
}

InequalityReport make_report(std::string name, double value, double bound,
                             Direction direction) {
    InequalityReport r;
    r.name = std::move(name);
    r.value = value;
    r.bound = bound;
    r.direction = direction;
    r.margin = direction == Direction::Leq ? value - bound : bound - value;
    r.violated = r.margin > kViolationEps;
    return r;
}

double shannon_entropy(const OutcomeDistribution& d) {
    double h = 0.0;
    for (double p : d.probs) h += plogp(clamp_prob(p));
    return h;
}

double joint_entropy(const JointDistribution& joint) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < joint.p.rows(); ++i)
        for (Eigen::Index j = 0; j < joint.p.cols(); ++j)
            h += plogp(clamp_prob(joint.p(i, j)));
    return h;
}

double conditional_entropy(const JointDistribution& joint) {
    double hb = shannon_entropy(joint.marginal_b());
    double h = joint_entropy(joint) - hb;

    // Cross-check against sum_b P(b) H(A|B=b); P(b)=0 terms are dropped.
    double h2 = 0.0;
    for (Eigen::Index j = 0; j < joint.p.cols(); ++j) {
        double pb = joint.p.col(j).sum();
        if (pb <= 0.0) continue;
        double hab = 0.0;
        for (Eigen::Index i = 0; i < joint.p.rows(); ++i)
            hab += plogp(clamp_prob(joint.p(i, j)) / pb);
        h2 += pb * hab;
    }
    if (std::abs(h - h2) > 1e-12)
        throw std::runtime_error("conditional_entropy: definitions disagree");
    return h;
}

JointDistribution joint_from_projectors(const Vector& a_i, const Vector& a_next,
                                        const Vector& psi) {
    if (std::abs((a_i.adjoint() * a_next)(0)) > 1e-8)
        throw std::invalid_argument(
            "joint_from_projectors: projectors are not orthogonal");
    double p_i = std::norm((a_i.adjoint() * psi)(0));
    double p_next = std::norm((a_next.adjoint() * psi)(0));
    JointDistribution j{{"0", "1"}, {"0", "1"}, Eigen::MatrixXd(2, 2)};
    j.p << 1.0 - p_i - p_next, p_next,
           p_i, 0.0;
    j.validate();
    return j;
}

InequalityReport entropic_chain(const std::array<JointDistribution, 5>& joints) {
    // joints[i] covers the pair (A_{i+1}, A_{i+2}); joints[4] covers (A5, A1).
    for (int i = 0; i < 5; ++i) {
        auto left = joints[i].marginal_b();
        auto right = joints[(i + 1) % 5].marginal_a();
        for (size_t k = 0; k < left.probs.size(); ++k)
            if (std::abs(left.probs[k] - right.probs[k]) > 1e-9)
                throw std::invalid_argument(
                    "entropic_chain: inconsistent marginals between joints");
    }
    // H(A1|A5) from the (5,1) joint: condition on its row variable.
    double lhs = conditional_entropy(joints[4].transposed());
    double rhs = 0.0;
    for (int i = 0; i < 4; ++i) rhs += conditional_entropy(joints[i]);
    return make_report("entropic-chain", lhs - rhs, 0.0, Direction::Leq);
}

InequalityReport pentagram_value(const std::array<Vec3, 5>& directions,
                                 const Matrix& rho) {
    for (int i = 0; i < 5; ++i) {
        if (std::abs(directions[i].norm() - 1.0) > 1e-8)
            throw std::invalid_argument("pentagram_value: direction not unit");
        if (std::abs(directions[i].dot(directions[(i + 1) % 5])) > 1e-8)
            throw std::invalid_argument(
                "pentagram_value: neighboring directions not orthogonal");
    }
    auto g = qcore::spin1_generators();
    double total = 0.0;
    for (const auto& l : directions) {
        Matrix jl = l(0) * g.jx + l(1) * g.jy + l(2) * g.jz;
        total += qcore::expectation(rho, jl * jl).real();
    }
    return make_report("pentagram", total, 3.0, Direction::Geq);
}

InequalityReport pentagram_value(const std::array<Vec3, 5>& directions,
                                 const Vector& psi) {
    return pentagram_value(directions, qcore::projector_from(psi));
}

std::array<Vec3, 5> symmetric_pentagram() {
    // Neighbor orthogonality fixes the common polar angle:
    // cos^2 t = cos(pi/5) / (1 + cos(pi/5)).
    const double c5 = std::cos(kPi / 5.0);
    const double ct = std::sqrt(c5 / (1.0 + c5));
    const double st = std::sqrt(1.0 - ct * ct);
    std::array<Vec3, 5> dirs;
    for (int k = 0; k < 5; ++k) {
        double az = 4.0 * kPi * k / 5.0;
        dirs[k] = Vec3(st * std::cos(az), st * std::sin(az), ct);
    }
    return dirs;
}

NCycleBounds ncycle_bounds(int n) {
    if (n < 4) throw std::invalid_argument("ncycle_bounds: n must be >= 4");
    NCycleBounds b{-(double(n) - 2.0), std::nullopt, std::nullopt};
    if (n % 2 == 1) {
        double c = std::cos(kPi / n);
        b.quantum_dim3 = -(3.0 * n * c - n) / (1.0 + c);
    } else {
        b.quantum_dim4 = -n * std::cos(kPi / n);
        b.quantum_dim3 = -1.0 - (n - 1) * std::cos(kPi / (n - 1));
    }
    return b;
}

double ncycle_classical_min(int n) {
    if (n < 4 || n > 24)
        throw std::invalid_argument("ncycle_classical_min: n out of range");
    double best = std::numeric_limits<double>::infinity();
    const int sign_last = (n % 2 == 0) ? -1 : 1;  // (-1)^{N-1}
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto a = [&](int i) { return (mask >> i) & 1u ? 1 : -1; };
        int sum = 0;
        for (int i = 0; i + 1 < n; ++i) sum += a(i) * a(i + 1);
        sum += sign_last * a(n - 1) * a(0);
        best = std::min(best, double(sum));
    }
    return best;
}

InequalityReport ncycle_value(const std::vector<Matrix>& observables,
                              const Matrix& rho) {
    const int n = int(observables.size());
    if (n < 4) throw std::invalid_argument("ncycle_value: need at least 4 observables");
    Matrix id = Matrix::Identity(rho.rows(), rho.cols());
    for (int i = 0; i < n; ++i) {
        const Matrix& a = observables[i];
        if ((a * a - id).cwiseAbs().maxCoeff() > 1e-8)
            throw std::invalid_argument(
                "ncycle_value: observable spectrum is not contained in {-1,+1}");
        const Matrix& b = observables[(i + 1) % n];
        if ((a * b - b * a).cwiseAbs().maxCoeff() > 1e-8)
            throw std::invalid_argument(
                "ncycle_value: neighboring observables do not commute");
    }
    const double sign_last = (n % 2 == 0) ? -1.0 : 1.0;
    double value = 0.0;
    for (int i = 0; i + 1 < n; ++i)
        value += qcore::expectation(rho, observables[i] * observables[i + 1]).real();
    value += sign_last *
             qcore::expectation(rho, observables[n - 1] * observables[0]).real();
    return make_report("ncycle-" + std::to_string(n), value, -(double(n) - 2.0),
                       Direction::Geq);
}

InequalityReport peres_mermin(const Matrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("peres_mermin: expected a 4x4 density operator");
    auto sq = scenarios::peres_mermin_square();
    auto mean3 = [&](const Matrix& x, const Matrix& y, const Matrix& z) {
        return qcore::expectation(rho, x * y * z).real();
    };
    double chi = mean3(sq.a_up, sq.b_up, sq.c_up) +
                 mean3(sq.b_lo, sq.c_lo, sq.a_lo) +
                 mean3(sq.gamma, sq.alpha, sq.beta) +
                 mean3(sq.a_up, sq.alpha, sq.a_lo) +
                 mean3(sq.b_lo, sq.b_up, sq.beta) -
                 mean3(sq.gamma, sq.c_lo, sq.c_up);
    return make_report("peres-mermin", chi, 4.0, Direction::Leq);
}

InequalityReport kcbs_dichotomic(const std::array<double, 5>& means) {
    double sum = 0.0;
    for (double m : means) {
        if (m < -1.0 - 1e-12 || m > 1.0 + 1e-12)
            throw std::invalid_argument("kcbs_dichotomic: mean outside [-1, 1]");
        sum += m;
    }
    return make_report("kcbs", sum, -3.0, Direction::Geq);
}

}  // namespace tomoctx::contextuality
