#pragma once

#include <string>
#include <vector>

#include "tomoctx/quad.hpp"

namespace tomoctx::verify {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Runs the closed-form equivalence suite: state tomograms, dual symbols,
/// Born-rule pairing, fidelity kernel, rotated-projector tomograms, and the
/// reconstruction round-trip. Deterministic (fixed internal seed).
std::vector<CheckResult> run_verification(const quad::GridSpec& grid);

std::string to_json(const std::vector<CheckResult>& results);

}  // namespace tomoctx::verify
