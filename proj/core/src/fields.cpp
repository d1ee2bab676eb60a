#include "ibmg/fields.hpp"

#include <cassert>

namespace ibmg {

std::vector<double> pack_state(const SaddleState& w) {
    const GridGeometry& g = w.vel.geom;
    require_same_geometry(g, w.p.geom);
    DofMap dm(g);
    std::vector<double> x(dm.n_total());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i <= g.nx - 1; ++i)
            x[dm.u(i, j)] = w.vel.uat(i, j);
    for (int j = 1; j <= g.ny - 1; ++j)
        for (int i = 0; i < g.nx; ++i)
            x[dm.v(i, j)] = w.vel.vat(i, j);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            x[dm.p(i, j)] = w.p.at(i, j);
    return x;
}

SaddleState unpack_state(const GridGeometry& g, std::span<const double> x) {
    DofMap dm(g);
    if ((int)x.size() != dm.n_total()) throw std::invalid_argument("unpack_state: size mismatch");
    SaddleState w(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i <= g.nx - 1; ++i)
            w.vel.uat(i, j) = x[dm.u(i, j)];
    for (int j = 1; j <= g.ny - 1; ++j)
        for (int i = 0; i < g.nx; ++i)
            w.vel.vat(i, j) = x[dm.v(i, j)];
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            w.p.at(i, j) = x[dm.p(i, j)];
    return w;
}

std::vector<double> pack_velocity(const VelocityField& vel) {
    const GridGeometry& g = vel.geom;
    DofMap dm(g);
    std::vector<double> x(dm.n_vel());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i <= g.nx - 1; ++i)
            x[dm.u(i, j)] = vel.uat(i, j);
    for (int j = 1; j <= g.ny - 1; ++j)
        for (int i = 0; i < g.nx; ++i)
            x[dm.v(i, j)] = vel.vat(i, j);
    return x;
}

VelocityField unpack_velocity(const GridGeometry& g, std::span<const double> x) {
    DofMap dm(g);
    if ((int)x.size() != dm.n_vel()) throw std::invalid_argument("unpack_velocity: size mismatch");
    VelocityField vel(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i <= g.nx - 1; ++i)
            vel.uat(i, j) = x[dm.u(i, j)];
    for (int j = 1; j <= g.ny - 1; ++j)
        for (int i = 0; i < g.nx; ++i)
            vel.vat(i, j) = x[dm.v(i, j)];
    return vel;
}

void impose_boundary_values(VelocityField& vel, const VelocityBC& bc) {
    const GridGeometry& g = vel.geom;
    for (int j = 0; j < g.ny; ++j) {
        vel.uat(0, j) = bc.u(g.x0, g.uy(j));
        vel.uat(g.nx, j) = bc.u(g.xmax(), g.uy(j));
    }
    for (int i = 0; i < g.nx; ++i) {
        vel.vat(i, 0) = bc.v(g.vx(i), g.y0);
        vel.vat(i, g.ny) = bc.v(g.vx(i), g.ymax());
    }
}

void project_pressure_mean(std::span<double> x, const DofMap& dm) {
    const int off = dm.n_vel();
    const int np = dm.np();
    double mean = 0.0;
    for (int k = 0; k < np; ++k) mean += x[off + k];
    mean /= np;
    for (int k = 0; k < np; ++k) x[off + k] -= mean;
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    for (size_t k = 0; k < x.size(); ++k) y[k] += alpha * x[k];
}

void scale(double alpha, std::span<double> x) {
    for (double& xi : x) xi *= alpha;
}

} // namespace ibmg
