#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ibmg {

/// Compressed sparse matrix used for assembled operators. Row-major so that
/// smoothers can walk rows cheaply.
using SparseOperator = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

} // namespace ibmg
