#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tomoctx/types.hpp"

namespace tomoctx::contextuality {

/// Normalized probability table over labeled discrete outcomes.
struct OutcomeDistribution {
    std::vector<std::string> outcomes;
    std::vector<double> probs;

    /// Validates normalization and nonnegativity; probabilities in
    /// [-1e-12, 0) clamp to 0, anything lower is rejected.
    void validate();
};

/// Joint distribution of two labeled discrete variables (rows: A, cols: B).
struct JointDistribution {
    std::vector<std::string> a_labels;
    std::vector<std::string> b_labels;
    Eigen::MatrixXd p;

    void validate();
    OutcomeDistribution marginal_a() const;
    OutcomeDistribution marginal_b() const;
    JointDistribution transposed() const;
};

enum class Direction { Leq, Geq };

struct InequalityReport {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    Direction direction = Direction::Geq;
    bool violated = false;
    double margin = 0.0;  // positive amount by which the bound is broken

    std::string to_json() const;
};

InequalityReport make_report(std::string name, double value, double bound,
                             Direction direction);

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(const OutcomeDistribution& d);

double joint_entropy(const JointDistribution& joint);

/// H(A|B) = H(AB) - H(B); cross-checked against the P(b)-weighted definition.
double conditional_entropy(const JointDistribution& joint);

/// Joint distribution of two orthogonal projectors measured on |psi>, outcomes
/// {00, 10, 01, 11} with the 11 cell exactly zero.
JointDistribution joint_from_projectors(const Vector& a_i, const Vector& a_next,
                                        const Vector& psi);

/// Chain inequality H(A1|A5) <= sum H(Ai|Ai+1) from the five pair joints
/// (1,2), (2,3), (3,4), (4,5), (5,1); value > 0 means violation.
InequalityReport entropic_chain(const std::array<JointDistribution, 5>& joints);

/// Sum of <(J.l_k)^2> over five cyclically orthogonal directions; bound 3.
InequalityReport pentagram_value(const std::array<Vec3, 5>& directions,
                                 const Vector& psi);
InequalityReport pentagram_value(const std::array<Vec3, 5>& directions,
                                 const Matrix& rho);

/// The regular-pentagon direction family (neighbors orthogonal); its symmetry
/// axis state attains the 5 - sqrt(5) optimum.
std::array<Vec3, 5> symmetric_pentagram();

struct NCycleBounds {
    double classical;                  // -(N-2)
    std::optional<double> quantum_dim3;
    std::optional<double> quantum_dim4;
};

NCycleBounds ncycle_bounds(int n);

/// Exhaustive minimum of the N-cycle correlation sum over all +-1 assignments.
double ncycle_classical_min(int n);

/// <chi> = sum <A_i A_{i+1}> + (-1)^{N-1} <A_N A_1> against the classical
/// bound -(N-2). Observables must have +-1 spectra and commute with neighbors.
InequalityReport ncycle_value(const std::vector<Matrix>& observables,
                              const Matrix& rho);

/// Peres-Mermin combination over the standard square; bound 4, value 6 for
/// every state.
InequalityReport peres_mermin(const Matrix& rho);

/// Sum of five supplied pair correlations against the KCBS bound -3.
InequalityReport kcbs_dichotomic(const std::array<double, 5>& means);

}  // namespace tomoctx::contextuality
