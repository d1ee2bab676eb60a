#pragma once

#include <span>
#include <vector>

#include "ibmg/elasticity.hpp"
#include "ibmg/stokes_ops.hpp"

namespace ibmg {

// The coupled velocity-pressure system
//
//   [ lap + alpha*E   -grad ] [vel]   [rhs_mom ]
//   [ div              0    ] [ p ] = [rhs_cont]
//
// in homogeneous-boundary form: boundary inhomogeneity is folded into the
// right-hand side once, so the operator applied by the solvers always uses
// zero wall data. alpha = dt*gamma; E is the assembled elasticity matrix.
struct SaddleSystem {
    GridGeometry geom;
    DofMap dm;
    VelocityBC bc = VelocityBC::zero();
    double alpha = 0.0;
    ElasticityOperator elasticity; // zero matrix when alpha == 0
    std::vector<double> rhs;       // packed; empty until assigned

    SaddleSystem() = default;
    SaddleSystem(const GridGeometry& g, const VelocityBC& bc_, double alpha_,
                 ElasticityOperator elast);

    /// Packed homogeneous operator application.
    void apply(std::span<const double> w, std::span<double> out) const;

    /// Field-level wrapper around apply.
    SaddleState apply(const SaddleState& w) const;

    /// r = rhs - A w along with its Euclidean norm.
    std::vector<double> residual(std::span<const double> w, double* norm = nullptr) const;
};

SaddleSystem make_stokes_system(const GridGeometry& g, const VelocityBC& bc);

/// Right-hand side of one solve: the spread elastic force plus the boundary
/// fold-in terms for both momentum and continuity rows. mesh may be null
/// (pure Stokes with boundary data only).
std::vector<double> build_rhs(const SaddleSystem& sys, const FiberMesh* mesh, double gamma);

/// Boundary inhomogeneity fold-in alone, as a packed vector.
std::vector<double> boundary_fold(const GridGeometry& g, const VelocityBC& bc);

} // namespace ibmg
