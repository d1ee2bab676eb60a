#include "ibmg/transfers.hpp"

#include <stdexcept>

namespace ibmg {

namespace {

GridGeometry coarse_of(const GridGeometry& fine) { return fine.coarsened(); }

void require_even(const GridGeometry& g) {
    if (g.nx % 2 != 0 || g.ny % 2 != 0)
        throw std::invalid_argument("transfer: fine dimensions must be even");
}

} // namespace

PressureField restrict_pressure(const PressureField& fine) {
    require_even(fine.geom);
    GridGeometry cg = coarse_of(fine.geom);
    PressureField out(cg);
    for (int J = 0; J < cg.ny; ++J)
        for (int I = 0; I < cg.nx; ++I)
            out.at(I, J) = 0.25 * (fine.at(2 * I, 2 * J) + fine.at(2 * I + 1, 2 * J) +
                                   fine.at(2 * I, 2 * J + 1) + fine.at(2 * I + 1, 2 * J + 1));
    return out;
}

PressureField prolong_pressure(const PressureField& coarse, const GridGeometry& fine_geom) {
    PressureField out(fine_geom);
    for (int j = 0; j < fine_geom.ny; ++j)
        for (int i = 0; i < fine_geom.nx; ++i)
            out.at(i, j) = coarse.at(i / 2, j / 2);
    return out;
}

VelocityField restrict_velocity(const VelocityField& fine) {
    require_even(fine.geom);
    GridGeometry cg = coarse_of(fine.geom);
    VelocityField out(cg);
    for (int J = 0; J < cg.ny; ++J) {
        for (int I = 1; I <= cg.nx - 1; ++I) {
            const int i = 2 * I, j = 2 * J;
            out.uat(I, J) = 0.125 * (fine.uat(i - 1, j) + 2.0 * fine.uat(i, j) +
                                     fine.uat(i + 1, j) + fine.uat(i - 1, j + 1) +
                                     2.0 * fine.uat(i, j + 1) + fine.uat(i + 1, j + 1));
        }
        // boundary-coincident faces keep the Dirichlet samples
        out.uat(0, J) = 0.5 * (fine.uat(0, 2 * J) + fine.uat(0, 2 * J + 1));
        out.uat(cg.nx, J) = 0.5 * (fine.uat(fine.geom.nx, 2 * J) + fine.uat(fine.geom.nx, 2 * J + 1));
    }
    for (int J = 1; J <= cg.ny - 1; ++J) {
        for (int I = 0; I < cg.nx; ++I) {
            const int i = 2 * I, j = 2 * J;
            out.vat(I, J) = 0.125 * (fine.vat(i, j - 1) + 2.0 * fine.vat(i, j) +
                                     fine.vat(i, j + 1) + fine.vat(i + 1, j - 1) +
                                     2.0 * fine.vat(i + 1, j) + fine.vat(i + 1, j + 1));
        }
    }
    for (int I = 0; I < cg.nx; ++I) {
        out.vat(I, 0) = 0.5 * (fine.vat(2 * I, 0) + fine.vat(2 * I + 1, 0));
        out.vat(I, cg.ny) = 0.5 * (fine.vat(2 * I, fine.geom.ny) + fine.vat(2 * I + 1, fine.geom.ny));
    }
    return out;
}

VelocityField prolong_velocity(const VelocityField& coarse, const GridGeometry& fine_geom) {
    const GridGeometry& cg = coarse.geom;
    if (cg.nx * 2 != fine_geom.nx || cg.ny * 2 != fine_geom.ny)
        throw std::invalid_argument("prolong_velocity: geometry mismatch");
    VelocityField out(fine_geom);
    // u: x on coarse face lines (boundary faces available), y clamped at walls
    for (int j = 0; j < fine_geom.ny; ++j) {
        const int J = j / 2;
        const int Jn = (j % 2 == 0) ? J - 1 : J + 1;
        const int Jc = std::max(0, std::min(cg.ny - 1, Jn));
        for (int i = 0; i <= fine_geom.nx; ++i) {
            double vals[2];
            for (int q = 0; q < 2; ++q) {
                const int JJ = (q == 0) ? J : Jc;
                vals[q] = (i % 2 == 0) ? coarse.uat(i / 2, JJ)
                                       : 0.5 * (coarse.uat((i - 1) / 2, JJ) +
                                                coarse.uat((i + 1) / 2, JJ));
            }
            out.uat(i, j) = 0.75 * vals[0] + 0.25 * vals[1];
        }
    }
    // v transposed
    for (int j = 0; j <= fine_geom.ny; ++j) {
        for (int i = 0; i < fine_geom.nx; ++i) {
            const int I = i / 2;
            const int In = (i % 2 == 0) ? I - 1 : I + 1;
            const int Ic = std::max(0, std::min(cg.nx - 1, In));
            double vals[2];
            for (int q = 0; q < 2; ++q) {
                const int II = (q == 0) ? I : Ic;
                vals[q] = (j % 2 == 0) ? coarse.vat(II, j / 2)
                                       : 0.5 * (coarse.vat(II, (j - 1) / 2) +
                                                coarse.vat(II, (j + 1) / 2));
            }
            out.vat(i, j) = 0.75 * vals[0] + 0.25 * vals[1];
        }
    }
    return out;
}

void restrict_saddle(const GridGeometry& fine, std::span<const double> rf,
                     std::span<double> rc) {
    require_even(fine);
    GridGeometry cg = coarse_of(fine);
    DofMap df(fine), dc(cg);
    if ((int)rf.size() != df.n_total() || (int)rc.size() != dc.n_total())
        throw std::invalid_argument("restrict_saddle: size mismatch");
    for (int J = 0; J < cg.ny; ++J) {
        for (int I = 1; I <= cg.nx - 1; ++I) {
            const int i = 2 * I, j = 2 * J;
            rc[dc.u(I, J)] = 0.125 * (rf[df.u(i - 1, j)] + 2.0 * rf[df.u(i, j)] +
                                      rf[df.u(i + 1, j)] + rf[df.u(i - 1, j + 1)] +
                                      2.0 * rf[df.u(i, j + 1)] + rf[df.u(i + 1, j + 1)]);
        }
    }
    for (int J = 1; J <= cg.ny - 1; ++J) {
        for (int I = 0; I < cg.nx; ++I) {
            const int i = 2 * I, j = 2 * J;
            rc[dc.v(I, J)] = 0.125 * (rf[df.v(i, j - 1)] + 2.0 * rf[df.v(i, j)] +
                                      rf[df.v(i, j + 1)] + rf[df.v(i + 1, j - 1)] +
                                      2.0 * rf[df.v(i + 1, j)] + rf[df.v(i + 1, j + 1)]);
        }
    }
    for (int J = 0; J < cg.ny; ++J)
        for (int I = 0; I < cg.nx; ++I)
            rc[dc.p(I, J)] = 0.25 * (rf[df.p(2 * I, 2 * J)] + rf[df.p(2 * I + 1, 2 * J)] +
                                     rf[df.p(2 * I, 2 * J + 1)] + rf[df.p(2 * I + 1, 2 * J + 1)]);
}

namespace {

// Bilinear weights of one fine u-face against coarse interior u-columns,
// with homogeneous walls: boundary normal columns drop out, tangential
// ghost rows reflect with negative weight.
template <typename F>
void for_each_u_weight(const DofMap& dc, int nxc, int nyc, int i, int j, F&& emit) {
    struct XW { int I; double w; };
    XW xs[2];
    int nx_ = 0;
    if (i % 2 == 0) {
        xs[nx_++] = {i / 2, 1.0};
    } else {
        xs[nx_++] = {(i - 1) / 2, 0.5};
        xs[nx_++] = {(i + 1) / 2, 0.5};
    }
    struct YW { int J; double w; };
    YW ys[2];
    const int J = j / 2;
    if (j % 2 == 0) {
        ys[0] = {J, 0.75};
        ys[1] = {J - 1, 0.25};
    } else {
        ys[0] = {J, 0.75};
        ys[1] = {J + 1, 0.25};
    }
    for (int a = 0; a < nx_; ++a) {
        if (xs[a].I < 1 || xs[a].I > nxc - 1) continue; // boundary normal face: zero
        for (int b = 0; b < 2; ++b) {
            int JJ = ys[b].J;
            double w = ys[b].w;
            if (JJ < 0) { JJ = 0; w = -w; }               // reflect through wall
            else if (JJ > nyc - 1) { JJ = nyc - 1; w = -w; }
            emit(dc.u(xs[a].I, JJ), xs[a].w * w);
        }
    }
}

template <typename F>
void for_each_v_weight(const DofMap& dc, int nxc, int nyc, int i, int j, F&& emit) {
    struct YW { int J; double w; };
    YW ys[2];
    int ny_ = 0;
    if (j % 2 == 0) {
        ys[ny_++] = {j / 2, 1.0};
    } else {
        ys[ny_++] = {(j - 1) / 2, 0.5};
        ys[ny_++] = {(j + 1) / 2, 0.5};
    }
    struct XW { int I; double w; };
    XW xs[2];
    const int I = i / 2;
    if (i % 2 == 0) {
        xs[0] = {I, 0.75};
        xs[1] = {I - 1, 0.25};
    } else {
        xs[0] = {I, 0.75};
        xs[1] = {I + 1, 0.25};
    }
    for (int b = 0; b < ny_; ++b) {
        if (ys[b].J < 1 || ys[b].J > nyc - 1) continue;
        for (int a = 0; a < 2; ++a) {
            int II = xs[a].I;
            double w = xs[a].w;
            if (II < 0) { II = 0; w = -w; }
            else if (II > nxc - 1) { II = nxc - 1; w = -w; }
            emit(dc.v(II, ys[b].J), xs[a].w * w);
        }
    }
}

} // namespace

void prolong_saddle_add(const GridGeometry& fine, std::span<const double> ec,
                        std::span<double> wf) {
    GridGeometry cg = coarse_of(fine);
    DofMap df(fine), dc(cg);
    if ((int)ec.size() != dc.n_total() || (int)wf.size() != df.n_total())
        throw std::invalid_argument("prolong_saddle_add: size mismatch");
    for (int j = 0; j < fine.ny; ++j)
        for (int i = 1; i <= fine.nx - 1; ++i) {
            double acc = 0.0;
            for_each_u_weight(dc, cg.nx, cg.ny, i, j,
                              [&](int col, double w) { acc += w * ec[col]; });
            wf[df.u(i, j)] += acc;
        }
    for (int j = 1; j <= fine.ny - 1; ++j)
        for (int i = 0; i < fine.nx; ++i) {
            double acc = 0.0;
            for_each_v_weight(dc, cg.nx, cg.ny, i, j,
                              [&](int col, double w) { acc += w * ec[col]; });
            wf[df.v(i, j)] += acc;
        }
    for (int j = 0; j < fine.ny; ++j)
        for (int i = 0; i < fine.nx; ++i)
            wf[df.p(i, j)] += ec[dc.p(i / 2, j / 2)];
}

SparseOperator velocity_restriction_matrix(const GridGeometry& fine) {
    require_even(fine);
    GridGeometry cg = coarse_of(fine);
    DofMap df(fine), dc(cg);
    std::vector<Triplet> trip;
    for (int J = 0; J < cg.ny; ++J)
        for (int I = 1; I <= cg.nx - 1; ++I) {
            const int i = 2 * I, j = 2 * J, r = dc.u(I, J);
            trip.emplace_back(r, df.u(i - 1, j), 0.125);
            trip.emplace_back(r, df.u(i, j), 0.25);
            trip.emplace_back(r, df.u(i + 1, j), 0.125);
            trip.emplace_back(r, df.u(i - 1, j + 1), 0.125);
            trip.emplace_back(r, df.u(i, j + 1), 0.25);
            trip.emplace_back(r, df.u(i + 1, j + 1), 0.125);
        }
    for (int J = 1; J <= cg.ny - 1; ++J)
        for (int I = 0; I < cg.nx; ++I) {
            const int i = 2 * I, j = 2 * J, r = dc.v(I, J);
            trip.emplace_back(r, df.v(i, j - 1), 0.125);
            trip.emplace_back(r, df.v(i, j), 0.25);
            trip.emplace_back(r, df.v(i, j + 1), 0.125);
            trip.emplace_back(r, df.v(i + 1, j - 1), 0.125);
            trip.emplace_back(r, df.v(i + 1, j), 0.25);
            trip.emplace_back(r, df.v(i + 1, j + 1), 0.125);
        }
    SparseOperator R(dc.n_vel(), df.n_vel());
    R.setFromTriplets(trip.begin(), trip.end());
    R.makeCompressed();
    return R;
}

SparseOperator velocity_prolongation_matrix(const GridGeometry& fine) {
    require_even(fine);
    GridGeometry cg = coarse_of(fine);
    DofMap df(fine), dc(cg);
    std::vector<Triplet> trip;
    for (int j = 0; j < fine.ny; ++j)
        for (int i = 1; i <= fine.nx - 1; ++i)
            for_each_u_weight(dc, cg.nx, cg.ny, i, j, [&](int col, double w) {
                trip.emplace_back(df.u(i, j), col, w);
            });
    for (int j = 1; j <= fine.ny - 1; ++j)
        for (int i = 0; i < fine.nx; ++i)
            for_each_v_weight(dc, cg.nx, cg.ny, i, j, [&](int col, double w) {
                trip.emplace_back(df.v(i, j), col, w);
            });
    SparseOperator P(df.n_vel(), dc.n_vel());
    P.setFromTriplets(trip.begin(), trip.end());
    P.makeCompressed();
    return P;
}

SparseOperator galerkin_coarsen_elasticity(const SparseOperator& fine_matrix,
                                           const GridGeometry& fine_geom) {
    SparseOperator R = velocity_restriction_matrix(fine_geom);
    SparseOperator P = velocity_prolongation_matrix(fine_geom);
    SparseOperator C = (R * fine_matrix * P).pruned();
    C.makeCompressed();
    return C;
}

} // namespace ibmg
