#include "ibmg/assembly.hpp"

namespace ibmg {

SparseOperator assemble_saddle_matrix(const SaddleSystem& sys) {
    const GridGeometry& g = sys.geom;
    const DofMap& dm = sys.dm;
    const double ih2 = 1.0 / (g.h * g.h);
    const double ih = 1.0 / g.h;
    std::vector<Triplet> trip;
    trip.reserve(size_t(dm.n_total()) * 8);

    // u-momentum rows
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 1; i <= g.nx - 1; ++i) {
            const int r = dm.u(i, j);
            double diag = -4.0;
            if (i > 1) trip.emplace_back(r, dm.u(i - 1, j), ih2);
            if (i < g.nx - 1) trip.emplace_back(r, dm.u(i + 1, j), ih2);
            if (j > 0) trip.emplace_back(r, dm.u(i, j - 1), ih2); else diag -= 1.0;
            if (j < g.ny - 1) trip.emplace_back(r, dm.u(i, j + 1), ih2); else diag -= 1.0;
            trip.emplace_back(r, r, diag * ih2);
            trip.emplace_back(r, dm.p(i, j), -ih);
            trip.emplace_back(r, dm.p(i - 1, j), ih);
        }
    }
    // v-momentum rows
    for (int j = 1; j <= g.ny - 1; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int r = dm.v(i, j);
            double diag = -4.0;
            if (j > 1) trip.emplace_back(r, dm.v(i, j - 1), ih2);
            if (j < g.ny - 1) trip.emplace_back(r, dm.v(i, j + 1), ih2);
            if (i > 0) trip.emplace_back(r, dm.v(i - 1, j), ih2); else diag -= 1.0;
            if (i < g.nx - 1) trip.emplace_back(r, dm.v(i + 1, j), ih2); else diag -= 1.0;
            trip.emplace_back(r, r, diag * ih2);
            trip.emplace_back(r, dm.p(i, j), -ih);
            trip.emplace_back(r, dm.p(i, j - 1), ih);
        }
    }
    // continuity rows
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int r = dm.p(i, j);
            if (i + 1 <= g.nx - 1) trip.emplace_back(r, dm.u(i + 1, j), ih);
            if (i >= 1) trip.emplace_back(r, dm.u(i, j), -ih);
            if (j + 1 <= g.ny - 1) trip.emplace_back(r, dm.v(i, j + 1), ih);
            if (j >= 1) trip.emplace_back(r, dm.v(i, j), -ih);
        }
    }
    // elasticity couplings (velocity block only)
    if (sys.alpha > 0.0) {
        const SparseOperator& E = sys.elasticity.matrix;
        for (int r = 0; r < E.outerSize(); ++r) {
            for (SparseOperator::InnerIterator it(E, r); it; ++it) {
                trip.emplace_back(it.row(), it.col(), sys.alpha * it.value());
            }
        }
    }

    SparseOperator A(dm.n_total(), dm.n_total());
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    return A;
}

} // namespace ibmg
