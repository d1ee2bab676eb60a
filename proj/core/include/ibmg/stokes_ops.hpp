#pragma once

#include <span>

#include "ibmg/fields.hpp"

namespace ibmg {

// Second-order finite-difference operators on the staggered grid.
//
// The field-level variants consume full fields. Tangential ghost values at a
// wall come from linear reflection through the prescribed wall value
// (ghost = 2*wall - interior); rows of boundary normal faces are Dirichlet
// data and return zero. The packed variants are the homogeneous-boundary
// operators applied inside the solvers: every reference to a boundary face
// or ghost uses zero wall data.

/// Componentwise 5-point Laplacian of a velocity field.
VelocityField apply_laplacian(const VelocityField& vel, const VelocityBC& bc);

/// Discrete pressure gradient onto faces; boundary faces receive zero.
VelocityField apply_gradient(const PressureField& p);

/// Discrete divergence of a velocity field at cell centers.
PressureField apply_divergence(const VelocityField& vel);

/// Max discrepancy of <grad p, vel> + <p, div vel> over random interior
/// field pairs with homogeneous boundary data. Zero for exact adjoints.
double adjointness_check(const GridGeometry& g, int trials = 10, unsigned long long seed = 0x1b2d3c4dULL);

// Packed homogeneous kernels; out is overwritten (laplacian, divergence) or
// accumulated (gradient uses its own sign).
void laplacian_hom(const GridGeometry& g, std::span<const double> vel, std::span<double> out);
void gradient_hom(const GridGeometry& g, std::span<const double> p, std::span<double> out);
void divergence_hom(const GridGeometry& g, std::span<const double> vel, std::span<double> out);

} // namespace ibmg
