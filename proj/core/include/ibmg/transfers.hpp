#pragma once

#include <span>

#include "ibmg/fields.hpp"
#include "ibmg/linalg.hpp"

namespace ibmg {

// Transfers between a grid and its 2x coarsening. Pressure restriction
// averages the four child cells; pressure prolongation is constant. Velocity
// restriction uses the 6-point stencil (1/8)[1 2 1; 1 2 1] centered on the
// coincident coarse face (two-point averaging across the face normal paired
// with full weighting along it); velocity prolongation is componentwise
// bilinear interpolation on each face lattice.

PressureField restrict_pressure(const PressureField& fine);
PressureField prolong_pressure(const PressureField& coarse, const GridGeometry& fine_geom);
VelocityField restrict_velocity(const VelocityField& fine);
VelocityField prolong_velocity(const VelocityField& coarse, const GridGeometry& fine_geom);

// Packed variants used inside the cycle. Boundary faces and ghost rows use
// homogeneous wall data: prolongation interpolates tangential components to
// zero at the walls and treats boundary normal faces as zero.
void restrict_saddle(const GridGeometry& fine, std::span<const double> rf,
                     std::span<double> rc);
void prolong_saddle_add(const GridGeometry& fine, std::span<const double> ec,
                        std::span<double> wf);

/// Velocity-block restriction as a matrix (coarse interior DOFs by fine
/// interior DOFs), identical to the packed stencils.
SparseOperator velocity_restriction_matrix(const GridGeometry& fine);

/// Velocity-block prolongation as a matrix (fine by coarse), identical to
/// the homogeneous packed prolongation.
SparseOperator velocity_prolongation_matrix(const GridGeometry& fine);

/// Galerkin triple product R * E_fine * P on the velocity block.
SparseOperator galerkin_coarsen_elasticity(const SparseOperator& fine_matrix,
                                           const GridGeometry& fine_geom);

} // namespace ibmg
