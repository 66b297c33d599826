// Strongly convex rational polyhedral cones with their duals and face
// lattices, over exact integer arithmetic.
//
// A cone sigma lives in N_Q and is given by its primitive extreme rays.
// Its dual sigma^v = { u in M_Q : <v,u> >= 0 for all v in sigma } is
// full-dimensional exactly when sigma is strongly convex; when sigma is
// not full-dimensional, sigma^v contains the lineality space sigma^perp,
// represented here by a lattice basis (dual_rays then lists the pointed
// extreme rays together with +/- that basis).

#pragma once

#include <vector>

#include "torimon/errors.hpp"
#include "torimon/linalg.hpp"
#include "torimon/numeric.hpp"

namespace torimon {

/// A face of sigma, identified by the set of extreme rays it contains.
/// The empty set is the face {0}; the full set is sigma itself.
struct Face {
  std::vector<int> ray_indices;  // sorted ascending
  int dim = 0;

  bool operator==(const Face& o) const { return ray_indices == o.ray_indices; }
  bool contains_ray(int i) const;
};

enum class Containment { boundary, relative_interior };

class RationalCone {
 public:
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  /// Dimension of the linear span of sigma.
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == static_cast<int>(ambient_dim_); }

  /// Primitive extreme rays of sigma, in the caller's order.
  const std::vector<LatticeVector>& rays() const { return rays_; }

  /// Generators of sigma^v: the pointed extreme rays followed by +/- each
  /// lineality basis vector. Equal to facet_normals() when sigma is
  /// full-dimensional.
  const std::vector<DualVector>& dual_rays() const { return dual_rays_; }

  /// Inner normals of the facets of sigma (pointed extreme rays of sigma^v).
  const std::vector<DualVector>& facet_normals() const { return facet_normals_; }

  /// Lattice basis of sigma^perp (lineality of sigma^v); empty when sigma
  /// is full-dimensional.
  const std::vector<DualVector>& dual_unit_basis() const { return dual_unit_basis_; }

  /// All faces, sorted by dimension then by ray set.
  const std::vector<Face>& faces() const { return faces_; }

  const Face& zero_face() const;
  const Face& sigma_face() const;
  const Face& ray_face(int ray_index) const;
  /// Face with exactly this ray set, or NotAFace.
  const Face& face_by_rays(const std::vector<int>& sorted_ray_indices) const;
  bool has_face(const std::vector<int>& sorted_ray_indices) const;

  friend RationalCone dual_cone(const std::vector<LatticeVector>& rays, const Budget& budget);

 private:
  Eigen::Index ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<DualVector> dual_rays_;
  std::vector<DualVector> facet_normals_;
  std::vector<DualVector> dual_unit_basis_;
  std::vector<Face> faces_;
};

/// Builds the cone spanned by the given rays together with its dual data
/// and face lattice. The input rays must be nonzero, of equal length, and
/// each must be an extreme ray of the resulting cone (after scaling to
/// primitive vectors); the spanned cone must be strongly convex.
RationalCone dual_cone(const std::vector<LatticeVector>& rays, const Budget& budget = {});

/// face_lattice(cone) -- all faces realized as sigma cut by dual vectors.
inline const std::vector<Face>& face_lattice(const RationalCone& cone) { return cone.faces(); }

/// Membership of v (N side) in sigma.
bool contains(const RationalCone& cone, const LatticeVector& v, Containment mode);

/// Membership of u (M side) in sigma^v.
bool dual_contains(const RationalCone& cone, const DualVector& u, Containment mode);

/// Lattice basis of face^perp \cap M, Hermite-reduced. For the zero face
/// this is the standard basis of M.
std::vector<DualVector> perp_lattice_basis(const RationalCone& cone, const Face& face);

/// Smallest face of sigma^v containing u, as the set of cone-ray indices
/// vanishing on u (i.e. the dual description of the face of sigma cut out
/// by u). Requires u in sigma^v.
std::vector<int> vanishing_ray_set(const RationalCone& cone, const DualVector& u);

}  // namespace torimon
