// Points of the affine toric variety X_sigma, modeled as semigroup
// homomorphisms S_sigma -> K and stored by their values on the Hilbert
// basis. The nonzero pattern of a valid point matches tau^perp for a
// unique face tau (its torus orbit).

#pragma once

#include <vector>

#include "torimon/cone.hpp"
#include "torimon/hilbert.hpp"

namespace torimon {

struct ToricPoint {
  RatVec values;  // one per basis generator, then one per unit basis vector

  bool operator==(const ToricPoint& o) const { return vec_eq(values, o.values); }
  bool operator!=(const ToricPoint& o) const { return !(*this == o); }
};

struct OrbitTag {
  Face face;
};

/// Value of a factored semigroup element at the point.
Rat evaluate_on(const ToricPoint& x, const HilbertBasis& basis, const Factorization& f);

/// Value of chi^v at the point, via a fresh factorization.
Rat evaluate_character(const RationalCone& cone, const HilbertBasis& basis, const ToricPoint& x,
                       const DualVector& v, const Budget& budget = {});

/// The distinguished point x_tau: 1 on generators orthogonal to the face,
/// 0 elsewhere.
ToricPoint distinguished_point(const RationalCone& cone, const HilbertBasis& basis,
                               const Face& face);

/// The orbit a point belongs to, from its zero pattern.
OrbitTag orbit_of(const RationalCone& cone, const HilbertBasis& basis, const ToricPoint& x);

/// Point of the orbit O_face with the given nonzero values on
/// perp_lattice_basis(cone, face).
ToricPoint orbit_point(const RationalCone& cone, const HilbertBasis& basis, const Face& face,
                       const RatVec& torus_values);

/// Checks that x is a genuine point of X_sigma: its zero pattern is
/// face-coherent and every pair of factorizations of the same lattice
/// element up to the degree bound evaluates equally.
bool validate(const RationalCone& cone, const HilbertBasis& basis, const ToricPoint& x,
              int degree_bound = 6, const Budget& budget = {});

/// Indices (into the combined value layout) of basis entries lying in
/// face^perp.
std::vector<int> perp_generator_indices(const RationalCone& cone, const HilbertBasis& basis,
                                        const Face& face);

}  // namespace torimon
