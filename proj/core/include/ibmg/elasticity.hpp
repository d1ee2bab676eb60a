#pragma once

#include <span>

#include "ibmg/fiber.hpp"
#include "ibmg/linalg.hpp"

namespace ibmg {

// Eulerian projection of the fiber elasticity: spread o (second difference
// along s1) o interpolate, assembled over the interior velocity DOFs. The
// operator is gamma-free; the stiffness enters the momentum equation only
// through the scalar alpha = dt*gamma applied at the use site. With closed
// fibers the matrix is symmetric negative semidefinite.
struct ElasticityOperator {
    SparseOperator matrix; // n_vel x n_vel, block diagonal in (u, v)
    double alpha = 0.0;

    bool empty() const { return matrix.nonZeros() == 0; }
};

/// Assembles the sparse matrix. gamma == 0 yields the zero operator (the
/// structure exerts no force and no coupling is built).
ElasticityOperator assemble_elasticity(const FiberMesh& mesh, const GridGeometry& g,
                                       double gamma);

/// Matrix-free application of the same composite operator, for verification
/// against the assembled matrix. Input/output are packed velocity vectors.
void elasticity_apply_matrix_free(const FiberMesh& mesh, const GridGeometry& g,
                                  std::span<const double> vel, std::span<double> out);

} // namespace ibmg
