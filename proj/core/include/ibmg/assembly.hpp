#pragma once

#include "ibmg/saddle.hpp"

namespace ibmg {

/// Assembles the full homogeneous saddle operator as a sparse matrix in the
/// packed DOF ordering. The result matches SaddleSystem::apply on every
/// vector to round-off.
SparseOperator assemble_saddle_matrix(const SaddleSystem& sys);

} // namespace ibmg
