#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace tomoctx {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

// Tolerances used by validity checks across the library.
namespace tol {
inline constexpr double norm = 1e-10;
inline constexpr double herm = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double imag = 1e-10;
}  // namespace tol

/// Spin quantum number stored as 2j so half-integer spins are exact.
/// Magnetic numbers are likewise passed around as 2m.
struct TwiceJ {
    int two_j;

    explicit constexpr TwiceJ(int tj) : two_j(tj) {
        if (tj < 0) throw std::invalid_argument("TwiceJ: 2j must be nonnegative");
    }

    constexpr int dim() const { return two_j + 1; }

    /// Row/column index for magnetic number m (basis ordering m = j, j-1, ..., -j).
    constexpr int index_of(int two_m) const {
        if (!valid_m(two_m)) throw std::invalid_argument("TwiceJ: m out of range");
        return (two_j - two_m) / 2;
    }

    constexpr bool valid_m(int two_m) const {
        return std::abs(two_m) <= two_j && (two_m - two_j) % 2 == 0;
    }

    constexpr bool operator==(const TwiceJ&) const = default;
};

}  // namespace tomoctx
