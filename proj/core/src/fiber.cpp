#include "ibmg/fiber.hpp"

#include <array>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace ibmg {

double delta_1d(double r, double h) {
    const double a = std::abs(r);
    if (a >= 2.0 * h) return 0.0;
    return (1.0 + std::cos(std::numbers::pi * r / (2.0 * h))) / (4.0 * h);
}

void require_supports_interior(const FiberMesh& mesh, const GridGeometry& g) {
    const double rad = 2.0 * g.h;
    for (int l = 0; l < mesh.m2; ++l) {
        for (int k = 0; k < mesh.m1; ++k) {
            const Vec2& X = mesh.X.at(k, l);
            if (X.x - rad < g.x0 || X.x + rad > g.xmax() || X.y - rad < g.y0 ||
                X.y + rad > g.ymax()) {
                std::ostringstream msg;
                msg << "fiber node (k=" << k << ", l=" << l << ") at (" << X.x << ", " << X.y
                    << ") has kernel support crossing the domain boundary";
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

LagrangianField fiber_second_difference(const FiberMesh& mesh, const LagrangianField& f) {
    if (f.m1 != mesh.m1 || f.m2 != mesh.m2)
        throw std::invalid_argument("fiber_second_difference: field shape mismatch");
    const double ids2 = 1.0 / (mesh.ds * mesh.ds);
    LagrangianField out(mesh.m1, mesh.m2);
    for (int l = 0; l < mesh.m2; ++l) {
        for (int k = 0; k < mesh.m1; ++k) {
            if (!mesh.periodic_s1 && (k == 0 || k == mesh.m1 - 1)) continue;
            const int km = (k == 0) ? mesh.m1 - 1 : k - 1;
            const int kp = (k == mesh.m1 - 1) ? 0 : k + 1;
            const Vec2 d = f.at(km, l) + f.at(kp, l) - f.at(k, l) * 2.0;
            out.at(k, l) = d * ids2;
        }
    }
    return out;
}

LagrangianField fiber_force(const FiberMesh& mesh, double gamma) {
    LagrangianField F = fiber_second_difference(mesh, mesh.X);
    for (Vec2& f : F.val) f = f * gamma;
    return F;
}

// Faces along this axis sit at coordinates origin + idx*h (idx in [0, n]).
KernelLine kernel_line_faces(double X, double origin, double h, int n) {
    KernelLine line{};
    const double s = (X - origin) / h;
    int lo = (int)std::ceil(s - 2.0);
    int hi = (int)std::floor(s + 2.0);
    if (lo < 0) lo = 0;
    if (hi > n) hi = n;
    line.first = lo;
    line.count = 0;
    for (int idx = lo; idx <= hi && line.count < 4; ++idx) {
        line.w[line.count++] = delta_1d(origin + idx * h - X, h);
    }
    return line;
}

// Same for centers at origin + (idx + 1/2)*h (idx in [0, n-1]).
KernelLine kernel_line_centers(double X, double origin, double h, int n) {
    KernelLine line{};
    const double s = (X - origin) / h - 0.5;
    int lo = (int)std::ceil(s - 2.0);
    int hi = (int)std::floor(s + 2.0);
    if (lo < 0) lo = 0;
    if (hi > n - 1) hi = n - 1;
    line.first = lo;
    line.count = 0;
    for (int idx = lo; idx <= hi && line.count < 4; ++idx) {
        line.w[line.count++] = delta_1d(origin + (idx + 0.5) * h - X, h);
    }
    return line;
}

VelocityField spread(const FiberMesh& mesh, const LagrangianField& F, const GridGeometry& g) {
    if (F.m1 != mesh.m1 || F.m2 != mesh.m2)
        throw std::invalid_argument("spread: field shape mismatch");
    require_supports_interior(mesh, g);
    const double w0 = mesh.ds * mesh.ds;
    VelocityField out(g);
    for (int l = 0; l < mesh.m2; ++l) {
        for (int k = 0; k < mesh.m1; ++k) {
            const Vec2& X = mesh.X.at(k, l);
            const Vec2& f = F.at(k, l);
            // u-faces: x on face lines, y at cell-center heights
            KernelLine ux = kernel_line_faces(X.x, g.x0, g.h, g.nx);
            KernelLine uy = kernel_line_centers(X.y, g.y0, g.h, g.ny);
            for (int b = 0; b < uy.count; ++b)
                for (int a = 0; a < ux.count; ++a)
                    out.uat(ux.first + a, uy.first + b) += f.x * ux.w[a] * uy.w[b] * w0;
            // v-faces: x at cell-center abscissae, y on face lines
            KernelLine vx = kernel_line_centers(X.x, g.x0, g.h, g.nx);
            KernelLine vy = kernel_line_faces(X.y, g.y0, g.h, g.ny);
            for (int b = 0; b < vy.count; ++b)
                for (int a = 0; a < vx.count; ++a)
                    out.vat(vx.first + a, vy.first + b) += f.y * vx.w[a] * vy.w[b] * w0;
        }
    }
    return out;
}

LagrangianField interpolate(const FiberMesh& mesh, const VelocityField& vel) {
    const GridGeometry& g = vel.geom;
    require_supports_interior(mesh, g);
    const double w0 = g.h * g.h;
    LagrangianField out(mesh.m1, mesh.m2);
    for (int l = 0; l < mesh.m2; ++l) {
        for (int k = 0; k < mesh.m1; ++k) {
            const Vec2& X = mesh.X.at(k, l);
            KernelLine ux = kernel_line_faces(X.x, g.x0, g.h, g.nx);
            KernelLine uy = kernel_line_centers(X.y, g.y0, g.h, g.ny);
            double U = 0.0;
            for (int b = 0; b < uy.count; ++b)
                for (int a = 0; a < ux.count; ++a)
                    U += vel.uat(ux.first + a, uy.first + b) * ux.w[a] * uy.w[b];
            KernelLine vx = kernel_line_centers(X.x, g.x0, g.h, g.nx);
            KernelLine vy = kernel_line_faces(X.y, g.y0, g.h, g.ny);
            double V = 0.0;
            for (int b = 0; b < vy.count; ++b)
                for (int a = 0; a < vx.count; ++a)
                    V += vel.vat(vx.first + a, vy.first + b) * vx.w[a] * vy.w[b];
            out.at(k, l) = Vec2{U * w0, V * w0};
        }
    }
    return out;
}

void write_fiber_mesh(std::ostream& os, const FiberMesh& mesh) {
    os.precision(17);
    os << mesh.m1 << ' ' << mesh.m2 << ' ' << mesh.ds << ' ' << (mesh.periodic_s1 ? 1 : 0)
       << '\n';
    for (int l = 0; l < mesh.m2; ++l)
        for (int k = 0; k < mesh.m1; ++k)
            os << k << ' ' << l << ' ' << mesh.X.at(k, l).x << ' ' << mesh.X.at(k, l).y << '\n';
}

FiberMesh read_fiber_mesh(std::istream& is) {
    int m1 = 0, m2 = 0, periodic = 0;
    double ds = 0.0;
    if (!(is >> m1 >> m2 >> ds >> periodic))
        throw std::runtime_error("read_fiber_mesh: bad header");
    FiberMesh mesh(m1, m2, ds, periodic != 0);
    for (long n = 0; n < (long)m1 * m2; ++n) {
        int k = 0, l = 0;
        double x = 0.0, y = 0.0;
        if (!(is >> k >> l >> x >> y)) throw std::runtime_error("read_fiber_mesh: bad node line");
        if (k < 0 || k >= m1 || l < 0 || l >= m2)
            throw std::runtime_error("read_fiber_mesh: node index out of range");
        mesh.X.at(k, l) = Vec2{x, y};
    }
    return mesh;
}

} // namespace ibmg
