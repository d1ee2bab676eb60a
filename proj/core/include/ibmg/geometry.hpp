#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace ibmg {

// Uniform staggered (MAC) grid over a rectangle of nx-by-ny square cells of
// width h. Velocity components live on face centers, pressure on cell
// centers:
//
//   u-faces: (i, j), i in [0, nx], j in [0, ny), center (x0 + i*h, y0 + (j+1/2)*h)
//   v-faces: (i, j), i in [0, nx), j in [0, ny], center (x0 + (i+1/2)*h, y0 + j*h)
//   cells:   (i, j), i in [0, nx), j in [0, ny), center (x0 + (i+1/2)*h, y0 + (j+1/2)*h)
//
// Faces with i == 0, i == nx (for u) and j == 0, j == ny (for v) carry
// Dirichlet data and are never unknowns.
struct GridGeometry {
    int nx = 0;
    int ny = 0;
    double h = 0.0;
    double x0 = 0.0;
    double y0 = 0.0;

    GridGeometry() = default;
    GridGeometry(int nx_, int ny_, double h_, double x0_ = 0.0, double y0_ = 0.0)
        : nx(nx_), ny(ny_), h(h_), x0(x0_), y0(y0_) {
        if (nx < 2 || ny < 2) throw std::invalid_argument("GridGeometry: nx and ny must be >= 2");
        if (!(h > 0.0)) throw std::invalid_argument("GridGeometry: h must be positive");
    }

    double xmax() const { return x0 + nx * h; }
    double ymax() const { return y0 + ny * h; }

    double ux(int i) const { return x0 + i * h; }
    double uy(int j) const { return y0 + (j + 0.5) * h; }
    double vx(int i) const { return x0 + (i + 0.5) * h; }
    double vy(int j) const { return y0 + j * h; }
    double cx(int i) const { return x0 + (i + 0.5) * h; }
    double cy(int j) const { return y0 + (j + 0.5) * h; }

    GridGeometry coarsened() const {
        if (nx % 2 != 0 || ny % 2 != 0)
            throw std::invalid_argument("GridGeometry::coarsened: dimensions must be even");
        return GridGeometry(nx / 2, ny / 2, 2.0 * h, x0, y0);
    }

    bool operator==(const GridGeometry&) const = default;
};

// Flat indexing of the solver unknowns: interior u-faces, then interior
// v-faces, then all pressures. Boundary faces are eliminated.
struct DofMap {
    int nx = 0;
    int ny = 0;

    DofMap() = default;
    explicit DofMap(const GridGeometry& g) : nx(g.nx), ny(g.ny) {}

    int nu() const { return (nx - 1) * ny; }
    int nv() const { return nx * (ny - 1); }
    int np() const { return nx * ny; }
    int n_vel() const { return nu() + nv(); }
    int n_total() const { return nu() + nv() + np(); }

    // i in [1, nx-1], j in [0, ny)
    int u(int i, int j) const { return (i - 1) + j * (nx - 1); }
    // i in [0, nx), j in [1, ny-1]
    int v(int i, int j) const { return nu() + i + (j - 1) * nx; }
    // i in [0, nx), j in [0, ny)
    int p(int i, int j) const { return n_vel() + i + j * nx; }

    bool u_interior(int i, int /*j*/) const { return i >= 1 && i <= nx - 1; }
    bool v_interior(int /*i*/, int j) const { return j >= 1 && j <= ny - 1; }
};

// Dirichlet velocity data on the domain boundary. The callables are
// evaluated exactly at boundary face centers (normal components) or at wall
// points aligned with interior face centers (tangential ghosts).
struct VelocityBC {
    std::function<double(double, double)> u;
    std::function<double(double, double)> v;

    static VelocityBC zero() {
        return VelocityBC{[](double, double) { return 0.0; },
                          [](double, double) { return 0.0; }};
    }
};

} // namespace ibmg
