#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tomoctx/types.hpp"

namespace tomoctx::search {

struct SearchConfig {
    int grid_resolution = 12;  // samples per axis in the coarse scan
    int refine_iters = 400;    // Nelder-Mead iteration cap
    double tol = 1e-12;        // convergence tolerance on the objective spread
    std::uint64_t seed = 0;    // reserved for randomized restarts
};

struct Box {
    std::vector<double> lo;
    std::vector<double> hi;
};

struct ScanPoint {
    std::vector<double> x;
    double value;
};

struct SearchResult {
    std::vector<double> argmax;
    double value = 0.0;
    std::vector<ScanPoint> scan;
};

/// Coarse grid scan over the box followed by Nelder-Mead refinement from the
/// best grid point; boundary handled by reflection. Deterministic for fixed
/// inputs, and the returned value never falls below the best scan sample.
SearchResult maximize(const std::function<double(const std::vector<double>&)>& objective,
                      const Box& box, const SearchConfig& cfg);

}  // namespace tomoctx::search
