#include "ibmg/elasticity.hpp"

#include <vector>

namespace ibmg {

namespace {

// Kernel weight table of one node against one face family, restricted to
// interior DOFs. Faces at distance >= 2h carry zero weight, so boundary
// faces never appear for meshes with interior supports.
struct NodeWeights {
    std::vector<std::pair<int, double>> entries; // (packed velocity index, weight)
};

void collect_u_weights(const FiberMesh& mesh, const GridGeometry& g,
                       std::vector<NodeWeights>& out) {
    DofMap dm(g);
    out.assign(size_t(mesh.m1) * mesh.m2, {});
    for (int l = 0; l < mesh.m2; ++l) {
        for (int k = 0; k < mesh.m1; ++k) {
            const Vec2& X = mesh.X.at(k, l);
            NodeWeights& nw = out[k + size_t(l) * mesh.m1];
            KernelLine lx = kernel_line_faces(X.x, g.x0, g.h, g.nx);
            KernelLine ly = kernel_line_centers(X.y, g.y0, g.h, g.ny);
            for (int b = 0; b < ly.count; ++b) {
                for (int a = 0; a < lx.count; ++a) {
                    const int i = lx.first + a;
                    const double w = lx.w[a] * ly.w[b];
                    if (w == 0.0 || i < 1 || i > g.nx - 1) continue;
                    nw.entries.emplace_back(dm.u(i, ly.first + b), w);
                }
            }
        }
    }
}

void collect_v_weights(const FiberMesh& mesh, const GridGeometry& g,
                       std::vector<NodeWeights>& out) {
    DofMap dm(g);
    out.assign(size_t(mesh.m1) * mesh.m2, {});
    for (int l = 0; l < mesh.m2; ++l) {
        for (int k = 0; k < mesh.m1; ++k) {
            const Vec2& X = mesh.X.at(k, l);
            NodeWeights& nw = out[k + size_t(l) * mesh.m1];
            KernelLine lx = kernel_line_centers(X.x, g.x0, g.h, g.nx);
            KernelLine ly = kernel_line_faces(X.y, g.y0, g.h, g.ny);
            for (int b = 0; b < ly.count; ++b) {
                for (int a = 0; a < lx.count; ++a) {
                    const int j = ly.first + b;
                    const double w = lx.w[a] * ly.w[b];
                    if (w == 0.0 || j < 1 || j > g.ny - 1) continue;
                    nw.entries.emplace_back(dm.v(lx.first + a, j), w);
                }
            }
        }
    }
}

// scale * W^T * T * W accumulated into triplets, where W rows are node
// weight vectors and T is the per-fiber second-difference coupling.
void accumulate_component(const FiberMesh& mesh, const std::vector<NodeWeights>& w,
                          double scale, std::vector<Triplet>& trip) {
    const double ids2 = 1.0 / (mesh.ds * mesh.ds);
    for (int l = 0; l < mesh.m2; ++l) {
        for (int k = 0; k < mesh.m1; ++k) {
            if (!mesh.periodic_s1 && (k == 0 || k == mesh.m1 - 1)) continue;
            const int km = (k == 0) ? mesh.m1 - 1 : k - 1;
            const int kp = (k == mesh.m1 - 1) ? 0 : k + 1;
            const NodeWeights& row = w[k + size_t(l) * mesh.m1];
            const NodeWeights* cols[3] = {&w[km + size_t(l) * mesh.m1],
                                          &w[k + size_t(l) * mesh.m1],
                                          &w[kp + size_t(l) * mesh.m1]};
            const double coef[3] = {ids2, -2.0 * ids2, ids2};
            for (const auto& [ri, rw] : row.entries) {
                for (int c = 0; c < 3; ++c) {
                    for (const auto& [ci, cw] : cols[c]->entries) {
                        trip.emplace_back(ri, ci, scale * rw * coef[c] * cw);
                    }
                }
            }
        }
    }
}

} // namespace

ElasticityOperator assemble_elasticity(const FiberMesh& mesh, const GridGeometry& g,
                                       double gamma) {
    DofMap dm(g);
    ElasticityOperator op;
    op.matrix = SparseOperator(dm.n_vel(), dm.n_vel());
    if (gamma == 0.0) return op;
    require_supports_interior(mesh, g);

    // spread carries ds^2, interpolate carries h^2
    const double scale = mesh.ds * mesh.ds * g.h * g.h;
    std::vector<NodeWeights> wu, wv;
    collect_u_weights(mesh, g, wu);
    collect_v_weights(mesh, g, wv);
    std::vector<Triplet> trip;
    accumulate_component(mesh, wu, scale, trip);
    accumulate_component(mesh, wv, scale, trip);
    op.matrix.setFromTriplets(trip.begin(), trip.end());
    op.matrix.makeCompressed();
    return op;
}

void elasticity_apply_matrix_free(const FiberMesh& mesh, const GridGeometry& g,
                                  std::span<const double> vel, std::span<double> out) {
    VelocityField vf = unpack_velocity(g, vel);
    LagrangianField U = interpolate(mesh, vf);
    LagrangianField D = fiber_second_difference(mesh, U);
    VelocityField f = spread(mesh, D, g);
    std::vector<double> packed = pack_velocity(f);
    std::copy(packed.begin(), packed.end(), out.begin());
}

} // namespace ibmg
