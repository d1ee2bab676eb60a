#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "ibmg/geometry.hpp"

namespace ibmg {

/// Scalar samples at cell centers (pressure and continuity residuals).
struct PressureField {
    GridGeometry geom;
    std::vector<double> p; // i + j*nx

    PressureField() = default;
    explicit PressureField(const GridGeometry& g) : geom(g), p(size_t(g.nx) * g.ny, 0.0) {}

    double& at(int i, int j) { return p[i + size_t(j) * geom.nx]; }
    double at(int i, int j) const { return p[i + size_t(j) * geom.nx]; }
};

/// MAC velocity field. Both arrays include the boundary faces.
struct VelocityField {
    GridGeometry geom;
    std::vector<double> u; // (nx+1) x ny, index i + j*(nx+1)
    std::vector<double> v; // nx x (ny+1), index i + j*nx

    VelocityField() = default;
    explicit VelocityField(const GridGeometry& g)
        : geom(g), u(size_t(g.nx + 1) * g.ny, 0.0), v(size_t(g.nx) * (g.ny + 1), 0.0) {}

    double& uat(int i, int j) { return u[i + size_t(j) * (geom.nx + 1)]; }
    double uat(int i, int j) const { return u[i + size_t(j) * (geom.nx + 1)]; }
    double& vat(int i, int j) { return v[i + size_t(j) * geom.nx]; }
    double vat(int i, int j) const { return v[i + size_t(j) * geom.nx]; }
};

/// Velocity and pressure of one solve, kept on the same grid.
struct SaddleState {
    VelocityField vel;
    PressureField p;

    SaddleState() = default;
    explicit SaddleState(const GridGeometry& g) : vel(g), p(g) {}
};

inline void require_same_geometry(const GridGeometry& a, const GridGeometry& b) {
    if (!(a == b)) throw std::invalid_argument("geometry mismatch");
}

// --- packed interior-DOF vectors -----------------------------------------
//
// Solvers work on flat vectors ordered [interior u, interior v, p]. Boundary
// faces are data, not unknowns; unpacking writes zeros there.

std::vector<double> pack_state(const SaddleState& w);
SaddleState unpack_state(const GridGeometry& g, std::span<const double> x);

std::vector<double> pack_velocity(const VelocityField& vel);
VelocityField unpack_velocity(const GridGeometry& g, std::span<const double> x);

/// Writes prescribed boundary-face values into a velocity field.
void impose_boundary_values(VelocityField& vel, const VelocityBC& bc);

/// Shifts p so that its mean over all cells is zero.
void project_pressure_mean(std::span<double> x, const DofMap& dm);

// Small dense-vector helpers shared by the iterative solvers.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> x);

} // namespace ibmg
