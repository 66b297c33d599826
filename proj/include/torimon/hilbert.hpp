// Hilbert bases of the semigroups S_sigma = sigma^v \cap M and exact
// factorization of semigroup elements over them.

#pragma once

#include <vector>

#include "torimon/cone.hpp"

namespace torimon {

/// Minimal generating data of S_sigma. `generators` are the irreducible
/// elements (irreducible modulo the unit group when sigma is not
/// full-dimensional), in graded-lex order with zero unit part.
/// `unit_basis` is a lattice basis of the group of units of S_sigma,
/// empty in the full-dimensional case. Point values are stored per entry
/// of `generators` followed by one value per entry of `unit_basis`.
struct HilbertBasis {
  std::vector<DualVector> generators;
  std::vector<DualVector> unit_basis;

  Eigen::Index total() const {
    return static_cast<Eigen::Index>(generators.size() + unit_basis.size());
  }
};

/// Computes the Hilbert basis by triangulating sigma^v into simplicial
/// subcones, enumerating the lattice points of each fundamental
/// parallelepiped and discarding reducible candidates.
HilbertBasis hilbert_basis(const RationalCone& cone, const Budget& budget = {});

/// One factorization of an element of S_sigma over the basis: nonnegative
/// multiplicities on the generators plus (possibly signed) multiplicities
/// on the unit basis.
struct Factorization {
  IntVec generator_mults;
  IntVec unit_mults;
};

/// Deterministic factorization: depth-first search in generator order,
/// high multiplicities first, pruned by dual-cone membership of the
/// remainder.
Factorization factorize(const RationalCone& cone, const HilbertBasis& basis, const DualVector& v,
                        const Budget& budget = {});

/// Reconstructs the factored vector (for checks).
DualVector factorization_vector(const HilbertBasis& basis, const Factorization& f);

}  // namespace torimon
