#include "ibmg/saddle.hpp"

#include <stdexcept>

namespace ibmg {

SaddleSystem::SaddleSystem(const GridGeometry& g, const VelocityBC& bc_, double alpha_,
                           ElasticityOperator elast)
    : geom(g), dm(g), bc(bc_), alpha(alpha_), elasticity(std::move(elast)) {
    if (alpha < 0.0) throw std::invalid_argument("SaddleSystem: alpha must be >= 0");
    if (alpha > 0.0 && elasticity.empty())
        throw std::invalid_argument("SaddleSystem: alpha > 0 requires an elasticity operator");
}

SaddleSystem make_stokes_system(const GridGeometry& g, const VelocityBC& bc) {
    return SaddleSystem(g, bc, 0.0, ElasticityOperator{});
}

void SaddleSystem::apply(std::span<const double> w, std::span<double> out) const {
    if ((int)w.size() != dm.n_total() || (int)out.size() != dm.n_total())
        throw std::invalid_argument("SaddleSystem::apply: size mismatch");
    const int nvel = dm.n_vel();

    laplacian_hom(geom, w.subspan(0, nvel), out.subspan(0, nvel));

    if (alpha > 0.0) {
        Eigen::Map<const Eigen::VectorXd> wv(w.data(), nvel);
        Eigen::Map<Eigen::VectorXd> ov(out.data(), nvel);
        ov += alpha * (elasticity.matrix * wv);
    }

    // momentum -= grad p
    std::vector<double> gp(nvel);
    gradient_hom(geom, w.subspan(nvel, dm.np()), gp);
    for (int k = 0; k < nvel; ++k) out[k] -= gp[k];

    divergence_hom(geom, w.subspan(0, nvel), out.subspan(nvel, dm.np()));
}

SaddleState SaddleSystem::apply(const SaddleState& w) const {
    require_same_geometry(geom, w.vel.geom);
    std::vector<double> x = pack_state(w);
    std::vector<double> y(x.size());
    apply(x, y);
    return unpack_state(geom, y);
}

std::vector<double> SaddleSystem::residual(std::span<const double> w, double* norm) const {
    std::vector<double> r(dm.n_total());
    apply(w, r);
    for (int k = 0; k < dm.n_total(); ++k) r[k] = rhs[k] - r[k];
    if (norm) *norm = norm2(r);
    return r;
}

std::vector<double> boundary_fold(const GridGeometry& g, const VelocityBC& bc) {
    DofMap dm(g);
    std::vector<double> f(dm.n_total(), 0.0);
    const double ih2 = 1.0 / (g.h * g.h);
    const double ih = 1.0 / g.h;

    // momentum rows: eliminated normal neighbors and tangential ghosts
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 1; i <= g.nx - 1; ++i) {
            double acc = 0.0;
            if (i == 1) acc += bc.u(g.x0, g.uy(j));
            if (i == g.nx - 1) acc += bc.u(g.xmax(), g.uy(j));
            if (j == 0) acc += 2.0 * bc.u(g.ux(i), g.y0);
            if (j == g.ny - 1) acc += 2.0 * bc.u(g.ux(i), g.ymax());
            f[dm.u(i, j)] -= acc * ih2;
        }
    }
    for (int j = 1; j <= g.ny - 1; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double acc = 0.0;
            if (j == 1) acc += bc.v(g.vx(i), g.y0);
            if (j == g.ny - 1) acc += bc.v(g.vx(i), g.ymax());
            if (i == 0) acc += 2.0 * bc.v(g.x0, g.vy(j));
            if (i == g.nx - 1) acc += 2.0 * bc.v(g.xmax(), g.vy(j));
            f[dm.v(i, j)] -= acc * ih2;
        }
    }

    // continuity rows: prescribed boundary-face fluxes
    for (int j = 0; j < g.ny; ++j) {
        f[dm.p(0, j)] += bc.u(g.x0, g.uy(j)) * ih;
        f[dm.p(g.nx - 1, j)] -= bc.u(g.xmax(), g.uy(j)) * ih;
    }
    for (int i = 0; i < g.nx; ++i) {
        f[dm.p(i, 0)] += bc.v(g.vx(i), g.y0) * ih;
        f[dm.p(i, g.ny - 1)] -= bc.v(g.vx(i), g.ymax()) * ih;
    }
    return f;
}

std::vector<double> build_rhs(const SaddleSystem& sys, const FiberMesh* mesh, double gamma) {
    std::vector<double> rhs = boundary_fold(sys.geom, sys.bc);
    if (mesh && gamma != 0.0) {
        VelocityField f = spread(*mesh, fiber_force(*mesh, gamma), sys.geom);
        std::vector<double> fv = pack_velocity(f);
        for (int k = 0; k < sys.dm.n_vel(); ++k) rhs[k] -= fv[k];
    }
    return rhs;
}

} // namespace ibmg
