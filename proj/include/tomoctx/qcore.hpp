#pragma once

#include <cstdint>
#include <random>

#include "tomoctx/types.hpp"

namespace tomoctx::qcore {

bool is_hermitian(const Matrix& m, double tolerance = tol::herm);
bool is_unitary(const Matrix& m, double tolerance = tol::herm);
bool is_density(const Matrix& m, double tolerance = tol::herm);

/// Rank-1 projector |a><a| from a normalized state vector.
Matrix projector_from(const Vector& state);

/// Tr[rho * obs].
Complex expectation(const Matrix& rho, const Matrix& obs);

/// Kronecker product, dim = dim_a * dim_b.
Matrix tensor(const Matrix& a, const Matrix& b);

struct Spin1Generators {
    Matrix jx, jy, jz;
};

/// Spin-1 angular momentum matrices in the |1,m> basis, m = 1, 0, -1.
Spin1Generators spin1_generators();

/// Normalized cross product of two real 3-vectors; rejects near-parallel inputs.
Vec3 cross_normalized(const Vec3& a, const Vec3& b);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Haar-ish random pure state of the given dimension (normalized Gaussian amplitudes).
Vector random_state(int dim, std::mt19937_64& rng);

/// Random density operator: mixture of random pure states.
Matrix random_density(int dim, std::mt19937_64& rng);

/// Random Hermitian matrix with entries in [-1,1] scale (not necessarily a state).
Matrix random_hermitian(int dim, std::mt19937_64& rng);

}  // namespace tomoctx::qcore
