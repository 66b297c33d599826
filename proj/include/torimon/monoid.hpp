// Monoid structures of corank one on an affine toric variety X_sigma,
// built from a distinguished ray rho of sigma and two Demazure roots
// e1, e2 of rho. Multiplication is evaluated through the binomial
// expansion of the comultiplication
//
//   chi^u  |->  sum_{i+j=<p,u>} C(<p,u>, i) chi^{u+i e2} (x) chi^{u+j e1},
//
// every exponent vector of which stays in S_sigma, so all values are
// computed by semigroup factorization. Invertible points form the open
// chart X_rho and carry semidirect-product group coordinates.

#pragma once

#include <optional>
#include <vector>

#include "torimon/demazure.hpp"
#include "torimon/hilbert.hpp"
#include "torimon/points.hpp"

namespace torimon {

/// Coordinates of an invertible point: alpha is the value of chi^{-e1},
/// torus_values are the (nonzero) values on the fixed lattice basis of
/// M(rho) = rho^perp \cap M.
struct GroupCoordinates {
  Rat alpha;
  RatVec torus_values;

  bool operator==(const GroupCoordinates& o) const {
    return alpha == o.alpha && vec_eq(torus_values, o.torus_values);
  }
};

/// Validated, immutable classification datum (sigma, rho, e1, e2) with the
/// Hilbert basis of S_sigma and all factorization tables cached. Safe to
/// share across threads.
class MonoidStructure {
 public:
  const RationalCone& cone() const { return cone_; }
  const HilbertBasis& basis() const { return basis_; }
  int ray_index() const { return ray_index_; }
  const LatticeVector& p() const { return cone_.rays()[static_cast<std::size_t>(ray_index_)]; }
  const DualVector& e1() const { return e1_; }
  const DualVector& e2() const { return e2_; }
  const Face& rho_face() const { return cone_.ray_face(ray_index_); }
  /// Fixed relative-interior point of the facet rho^perp \cap sigma^v:
  /// the sum of all basis generators lying in rho^perp.
  const DualVector& rho_perp_interior_witness() const { return witness_; }
  /// The lattice basis of M(rho) used for GroupCoordinates.
  const std::vector<DualVector>& torus_lattice_basis() const { return perp_basis_; }
  bool commutative() const { return vec_eq(e1_, e2_); }

  /// Pairing <p, g> per value entry (zero on unit entries).
  const std::vector<long>& grades() const { return grades_; }

  friend MonoidStructure build(const RationalCone& cone, int ray_index, const DualVector& e1,
                               const DualVector& e2, const Budget& budget);
  friend ToricPoint multiply(const MonoidStructure& m, const ToricPoint& x, const ToricPoint& y);
  friend bool is_invertible(const MonoidStructure& m, const ToricPoint& x);
  friend ToricPoint invert(const MonoidStructure& m, const ToricPoint& y);
  friend GroupCoordinates to_group_coords(const MonoidStructure& m, const ToricPoint& x);
  friend ToricPoint from_group_coords(const MonoidStructure& m, const GroupCoordinates& g);
  friend GroupCoordinates semidirect_multiply(const MonoidStructure& m, const GroupCoordinates& g,
                                              const GroupCoordinates& h);

 private:
  RationalCone cone_;
  int ray_index_ = 0;
  DualVector e1_, e2_;
  HilbertBasis basis_;
  DualVector witness_;
  Factorization witness_fact_;
  std::vector<DualVector> perp_basis_;

  std::vector<long> grades_;
  std::vector<std::vector<Factorization>> fact_e2_;  // entry i, shift k: g_i + k e2
  std::vector<std::vector<Factorization>> fact_e1_;
  std::vector<std::vector<Int>> binom_;

  std::vector<int> rho_perp_entries_;            // value entries lying in rho^perp
  std::vector<IntVec> invert_combos_;            // -(g_i + s_i e2) over rho^perp entries
  IntVec alpha_combo_;                           // -e1 over all entries (torus evaluation)
  std::vector<IntVec> torus_basis_combos_;       // perp basis over rho^perp entries
  std::vector<IntVec> from_group_exponents_;     // g_i + s_i e1 in the perp basis
  IntVec chi_exponents_;                         // e2 - e1 in the perp basis

  Rat eval_rho_laurent(const ToricPoint& x, const IntVec& combo) const;
  Rat eval_full_laurent(const ToricPoint& x, const IntVec& combo) const;
  Rat alpha_of(const ToricPoint& x) const;
};

/// Validates the datum and caches everything multiplication needs.
MonoidStructure build(const RationalCone& cone, int ray_index, const DualVector& e1,
                      const DualVector& e2, const Budget& budget = {});

/// The unity x_rho.
ToricPoint identity(const MonoidStructure& m);

ToricPoint multiply(const MonoidStructure& m, const ToricPoint& x, const ToricPoint& y);

/// True iff the interior witness of rho^perp evaluates to a nonzero value.
bool is_invertible(const MonoidStructure& m, const ToricPoint& x);

/// Inverse of an invertible point:
/// chi^u(y^-1) = (-1)^{<p,u>} chi^{-u-<p,u>(e1+e2)}(y).
ToricPoint invert(const MonoidStructure& m, const ToricPoint& y);

GroupCoordinates to_group_coords(const MonoidStructure& m, const ToricPoint& x);
ToricPoint from_group_coords(const MonoidStructure& m, const GroupCoordinates& g);

/// Semidirect product law (alpha + chi(t) alpha', t t') with
/// chi = chi^{e2-e1} evaluated on the torus part.
GroupCoordinates semidirect_multiply(const MonoidStructure& m, const GroupCoordinates& g,
                                     const GroupCoordinates& h);

/// Action of a torus element (values on the standard basis of M) on a point.
ToricPoint torus_act(const MonoidStructure& m, const RatVec& t, const ToricPoint& x);

// Convenience pass-throughs to the point model for this monoid's chart.
ToricPoint distinguished_point(const MonoidStructure& m, const Face& face);
OrbitTag orbit_of(const MonoidStructure& m, const ToricPoint& x);
ToricPoint orbit_point(const MonoidStructure& m, const Face& face, const RatVec& torus_values);
bool validate(const MonoidStructure& m, const ToricPoint& x, int degree_bound = 6);
Rat evaluate_character(const MonoidStructure& m, const ToricPoint& x, const DualVector& v);

}  // namespace torimon
