#pragma once

#include <array>

#include "tomoctx/types.hpp"

namespace tomoctx::scenarios {

/// The five cyclically orthogonal qutrit vectors and the probe state from the
/// entropic-chain construction; valid for phi in (0, pi/4) so cos(2*phi) > 0.
struct KcbsScenario {
    double theta;
    double phi;
    Vector psi;
    std::array<Vector, 5> a;
};

KcbsScenario kcbs_scenario(double theta, double phi);

struct ScenarioUnitaries {
    Matrix u1, u2, u4, u5, u_psi;
};

/// The unitaries whose first columns are |A_1>, |A_2>, |A_4>, |A_5>, |psi>.
ScenarioUnitaries scenario_unitaries(double theta, double phi);

/// The nine two-qubit observables of the Peres-Mermin square, row by row:
/// {A, B, C}, {b, c, a}, {gamma, alpha, beta}.
struct PeresMerminSquare {
    Matrix a_up, b_up, c_up;       // A, B, C
    Matrix b_lo, c_lo, a_lo;       // b, c, a
    Matrix gamma, alpha, beta;
};

PeresMerminSquare peres_mermin_square();

}  // namespace tomoctx::scenarios
