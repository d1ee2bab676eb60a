#include "ibmg/stokes_ops.hpp"

#include <random>

namespace ibmg {

VelocityField apply_laplacian(const VelocityField& vel, const VelocityBC& bc) {
    const GridGeometry& g = vel.geom;
    const double ih2 = 1.0 / (g.h * g.h);
    VelocityField out(g);

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 1; i <= g.nx - 1; ++i) {
            const double c = vel.uat(i, j);
            const double w = vel.uat(i - 1, j);
            const double e = vel.uat(i + 1, j);
            // tangential ghosts below/above the walls
            const double s = (j > 0) ? vel.uat(i, j - 1) : 2.0 * bc.u(g.ux(i), g.y0) - c;
            const double n = (j < g.ny - 1) ? vel.uat(i, j + 1) : 2.0 * bc.u(g.ux(i), g.ymax()) - c;
            out.uat(i, j) = (w + e + s + n - 4.0 * c) * ih2;
        }
    }
    for (int j = 1; j <= g.ny - 1; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double c = vel.vat(i, j);
            const double s = vel.vat(i, j - 1);
            const double n = vel.vat(i, j + 1);
            const double w = (i > 0) ? vel.vat(i - 1, j) : 2.0 * bc.v(g.x0, g.vy(j)) - c;
            const double e = (i < g.nx - 1) ? vel.vat(i + 1, j) : 2.0 * bc.v(g.xmax(), g.vy(j)) - c;
            out.vat(i, j) = (w + e + s + n - 4.0 * c) * ih2;
        }
    }
    return out;
}

VelocityField apply_gradient(const PressureField& p) {
    const GridGeometry& g = p.geom;
    const double ih = 1.0 / g.h;
    VelocityField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i <= g.nx - 1; ++i)
            out.uat(i, j) = (p.at(i, j) - p.at(i - 1, j)) * ih;
    for (int j = 1; j <= g.ny - 1; ++j)
        for (int i = 0; i < g.nx; ++i)
            out.vat(i, j) = (p.at(i, j) - p.at(i, j - 1)) * ih;
    return out;
}

PressureField apply_divergence(const VelocityField& vel) {
    const GridGeometry& g = vel.geom;
    const double ih = 1.0 / g.h;
    PressureField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out.at(i, j) = (vel.uat(i + 1, j) - vel.uat(i, j)) * ih +
                           (vel.vat(i, j + 1) - vel.vat(i, j)) * ih;
    return out;
}

double adjointness_check(const GridGeometry& g, int trials, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DofMap dm(g);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> p(dm.np()), vel(dm.n_vel()), gp(dm.n_vel()), dv(dm.np());
        for (double& x : p) x = dist(rng);
        for (double& x : vel) x = dist(rng);
        gradient_hom(g, p, gp);
        divergence_hom(g, vel, dv);
        const double lhs = dot(gp, vel);
        const double rhs = dot(p, dv);
        worst = std::max(worst, std::abs(lhs + rhs));
    }
    return worst;
}

void laplacian_hom(const GridGeometry& g, std::span<const double> vel, std::span<double> out) {
    DofMap dm(g);
    const double ih2 = 1.0 / (g.h * g.h);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 1; i <= g.nx - 1; ++i) {
            const double c = vel[dm.u(i, j)];
            double acc = -4.0 * c;
            if (i > 1) acc += vel[dm.u(i - 1, j)];
            if (i < g.nx - 1) acc += vel[dm.u(i + 1, j)];
            acc += (j > 0) ? vel[dm.u(i, j - 1)] : -c;
            acc += (j < g.ny - 1) ? vel[dm.u(i, j + 1)] : -c;
            out[dm.u(i, j)] = acc * ih2;
        }
    }
    for (int j = 1; j <= g.ny - 1; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double c = vel[dm.v(i, j)];
            double acc = -4.0 * c;
            if (j > 1) acc += vel[dm.v(i, j - 1)];
            if (j < g.ny - 1) acc += vel[dm.v(i, j + 1)];
            acc += (i > 0) ? vel[dm.v(i - 1, j)] : -c;
            acc += (i < g.nx - 1) ? vel[dm.v(i + 1, j)] : -c;
            out[dm.v(i, j)] = acc * ih2;
        }
    }
}

void gradient_hom(const GridGeometry& g, std::span<const double> p, std::span<double> out) {
    DofMap dm(g);
    const double ih = 1.0 / g.h;
    const int pw = g.nx;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i <= g.nx - 1; ++i)
            out[dm.u(i, j)] = (p[i + j * pw] - p[(i - 1) + j * pw]) * ih;
    for (int j = 1; j <= g.ny - 1; ++j)
        for (int i = 0; i < g.nx; ++i)
            out[dm.v(i, j)] = (p[i + j * pw] - p[i + (j - 1) * pw]) * ih;
}

void divergence_hom(const GridGeometry& g, std::span<const double> vel, std::span<double> out) {
    DofMap dm(g);
    const double ih = 1.0 / g.h;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double acc = 0.0;
            if (i + 1 <= g.nx - 1) acc += vel[dm.u(i + 1, j)];
            if (i >= 1) acc -= vel[dm.u(i, j)];
            if (j + 1 <= g.ny - 1) acc += vel[dm.v(i, j + 1)];
            if (j >= 1) acc -= vel[dm.v(i, j)];
            out[i + j * g.nx] = acc * ih;
        }
    }
}

} // namespace ibmg
