#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "ibmg/fields.hpp"

namespace ibmg {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

/// Lagrangian node values on the fiber mesh, stored fiber-major:
/// entry (k, l) at index k + l*m1.
struct LagrangianField {
    int m1 = 0;
    int m2 = 0;
    std::vector<Vec2> val;

    LagrangianField() = default;
    LagrangianField(int m1_, int m2_) : m1(m1_), m2(m2_), val(size_t(m1_) * m2_) {}
    Vec2& at(int k, int l) { return val[k + size_t(l) * m1]; }
    const Vec2& at(int k, int l) const { return val[k + size_t(l) * m1]; }
};

// Fiber-aligned structure mesh: m1 nodes along each fiber (coordinate s1),
// m2 fibers. The fiber direction may be periodic (closed fibers). ds is the
// Lagrangian spacing used both in the force stencil and in the quadrature
// weights of the spreading operator.
struct FiberMesh {
    int m1 = 0;
    int m2 = 0;
    double ds = 0.0;
    bool periodic_s1 = true;
    LagrangianField X; // node positions

    FiberMesh() = default;
    FiberMesh(int m1_, int m2_, double ds_, bool periodic)
        : m1(m1_), m2(m2_), ds(ds_), periodic_s1(periodic), X(m1_, m2_) {
        if (m1 < 3) throw std::invalid_argument("FiberMesh: m1 must be >= 3");
        if (m2 < 1) throw std::invalid_argument("FiberMesh: m2 must be >= 1");
        if (!(ds > 0.0)) throw std::invalid_argument("FiberMesh: ds must be positive");
    }
};

/// Regularized one-dimensional delta kernel with support |r| < 2h.
double delta_1d(double r, double h);

/// Nonzero 1D kernel weights of one node against one line of sample points.
/// `first` is the lowest sample index; weights follow consecutively.
struct KernelLine {
    int first = 0;
    std::array<double, 4> w{};
    int count = 0;
};

/// Samples at origin + idx*h, idx in [0, n] (face lines).
KernelLine kernel_line_faces(double X, double origin, double h, int n);
/// Samples at origin + (idx + 1/2)*h, idx in [0, n) (cell-center lines).
KernelLine kernel_line_centers(double X, double origin, double h, int n);

/// Throws if any node's kernel support would cross the domain boundary;
/// the diagnostic names the offending node.
void require_supports_interior(const FiberMesh& mesh, const GridGeometry& g);

/// Second difference along s1 of an arbitrary Lagrangian field, divided by
/// ds^2. Periodic wrap for closed fibers; open-fiber endpoints get zero.
LagrangianField fiber_second_difference(const FiberMesh& mesh, const LagrangianField& f);

/// Elastic force density F = gamma * (second difference of positions).
LagrangianField fiber_force(const FiberMesh& mesh, double gamma);

/// Spreads Lagrangian values to the face grid with ds^2 weights.
VelocityField spread(const FiberMesh& mesh, const LagrangianField& F, const GridGeometry& g);

/// Interpolates face values to the nodes with h^2 weights (adjoint of spread).
LagrangianField interpolate(const FiberMesh& mesh, const VelocityField& vel);

// Plain-text serialization: one header line "m1 m2 ds periodic_s1" followed
// by one "k l x y" line per node.
void write_fiber_mesh(std::ostream& os, const FiberMesh& mesh);
FiberMesh read_fiber_mesh(std::istream& is);

} // namespace ibmg
