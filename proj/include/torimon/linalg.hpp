// Exact integer linear algebra on dense GMP matrices: Hermite forms,
// kernels, integral solves. Everything here is deterministic.

#pragma once

#include <optional>
#include <vector>

#include "torimon/numeric.hpp"

namespace torimon {

Int gcd_int(const Int& a, const Int& b);

/// Divides a nonzero vector by the gcd of its entries, keeping direction.
void make_primitive(IntVec& v);

bool is_primitive(const IntVec& v);

long rank_of(const IntMat& a);

long rank_of_rows(const std::vector<IntVec>& rows, Eigen::Index dim);

/// Column-style Hermite reduction: returns H with the same column lattice
/// as A, in column echelon form; if U is given, fills a unimodular U with
/// A * U = [H | 0-padding] (U is square of A.cols()).
IntMat column_hermite(const IntMat& a, IntMat* u_out = nullptr);

/// Basis of { x in Z^k : A x = 0 } for A an n x k matrix; the basis vectors
/// are returned as columns, Hermite-reduced row-wise for determinism.
IntMat integer_kernel(const IntMat& a);

/// One integral solution x of A x = b, if any.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

/// Row-style Hermite normal form of the lattice spanned by the rows:
/// nonnegative pivots, entries above each pivot reduced. Zero rows dropped.
IntMat row_hermite(const IntMat& a);

/// Given columns of L forming a basis of a saturated sublattice of Z^n,
/// returns columns completing it to a basis of Z^n (a selection of
/// standard basis vectors).
IntMat complete_saturated_basis(const IntMat& l, Eigen::Index n);

/// Determinant by fraction-free elimination (Bareiss).
Int determinant(const IntMat& a);

/// Adjugate matrix: adj(A) * A = det(A) * I.
IntMat adjugate(const IntMat& a);

}  // namespace torimon
