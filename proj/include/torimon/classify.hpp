// Structure theory of a corank-one monoid: the idempotent locus per torus
// orbit, the zero element criterion, the binomial equations cutting out the
// center, and conjugation.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torimon/monoid.hpp"

namespace torimon {

/// One-dimensional component of the idempotent locus, attached to an orbit
/// face gamma for which exactly one of the two roots vanishes on gamma.
/// Its open part is O_gamma cut by "chi^g = 1" for every basis entry g in
/// cone(gamma, rho)^perp; the closure adds the distinguished point of
/// cone(gamma, rho). Points of the component are sample(s) for s in K,
/// with s != 0 on the open part and s = 0 at the closure point.
struct LineComponent {
  Face face;          // gamma
  Face closure_face;  // cone(gamma, rho)
  /// Value entries pinned to 1 on the open part.
  std::vector<int> fixed_one_indices;
  /// Entries supported on gamma^perp; value of entry i on sample(s) is
  /// s^{parameter_exponents[i]}, other entries are 0. Exactly the entries
  /// with a positive exponent vary ("free" generators).
  std::vector<char> in_gamma_perp;
  std::vector<long> parameter_exponents;
  ToricPoint closure_point;
};

ToricPoint line_sample(const MonoidStructure& m, const LineComponent& line, const Rat& s);

/// Entries of a line component that actually vary along it.
std::vector<int> free_entries(const LineComponent& line);

struct IdempotentSet {
  /// One distinguished point per face having rho as a ray, except those
  /// absorbed as closure points of line components.
  std::vector<std::pair<Face, ToricPoint>> isolated;
  std::vector<LineComponent> lines;
  bool finite = true;
  std::optional<long> count_if_finite;
};

IdempotentSet idempotents(const MonoidStructure& m);

/// Exact test of x * x == x.
bool is_idempotent(const MonoidStructure& m, const ToricPoint& x);

/// Exact membership of a point in the classified locus (isolated points,
/// line samples, or line closure points). Independent of multiply, which
/// makes it the comparison target for the grid oracle.
bool in_idempotent_set(const MonoidStructure& m, const IdempotentSet& idem, const ToricPoint& x);

enum class ZeroReason { none, sigma_perp_nonzero, minus_e1_in_dual, minus_e2_in_dual };

std::string zero_reason_text(ZeroReason r);

struct ZeroResult {
  bool exists = false;
  std::optional<ToricPoint> point;
  ZeroReason reason = ZeroReason::none;
};

/// The monoid has a zero iff sigma is full-dimensional and neither -e1
/// nor -e2 lies in sigma^v; the zero is then x_sigma.
ZeroResult zero(const MonoidStructure& m);

struct CenterDescription {
  bool trivial = false;  // e1 == e2: the center is all of X
  /// Entries that must vanish (the closure of O_rho).
  std::vector<int> vanishing_indices;
  /// Minimal elements of { u in S_sigma : <p,u> = 1 } under u <= v iff
  /// v - u in S_sigma; one binomial equation per element.
  std::vector<DualVector> slice_generators;
  /// Pairs (u + e1, u + e2), both in S_sigma: the equation
  /// chi^{u+e1} = chi^{u+e2}.
  std::vector<std::pair<DualVector, DualVector>> binomials;
};

/// Slice generators are found inside the coordinate box hull of the basis
/// and the two roots, scaled by box_scale; a covering certificate for the
/// enumerated slice is required, otherwise ScaleLimit is thrown.
CenterDescription center_equations(const MonoidStructure& m, int box_scale = 4,
                                   const Budget& budget = {});

bool is_central(const MonoidStructure& m, const CenterDescription& desc, const ToricPoint& x);
bool is_central(const MonoidStructure& m, const ToricPoint& x);

/// g * x * g^{-1} for invertible g.
ToricPoint conjugate(const MonoidStructure& m, const ToricPoint& g, const ToricPoint& x);

}  // namespace torimon
