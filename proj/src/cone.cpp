#include "torimon/cone.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace torimon {

namespace {

struct DDRay {
  IntVec v;
  std::vector<char> zero;  // zero[i] == 1 iff constraint row i vanishes on v
};

std::vector<char> zero_set(const IntMat& a, const IntVec& v) {
  std::vector<char> z(static_cast<std::size_t>(a.rows()), 0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Int s = a.row(i).dot(v);
    if (s == 0) z[static_cast<std::size_t>(i)] = 1;
  }
  return z;
}

// Extreme rays of { x in Q^d : a x >= 0 } for a full-column-rank constraint
// matrix. Exact for pointed full-dimensional solution cones; for degenerate
// inputs the result still consists of valid members whose span is correct,
// which is all the strong-convexity check needs.
std::vector<IntVec> dd_pointed(const IntMat& a, const Budget& budget) {
  const Eigen::Index m = a.rows(), d = a.cols();
  if (d == 0) return {};

  // Seed with d linearly independent rows: their dual basis spans the
  // initial simplicial cone.
  std::vector<Eigen::Index> chosen;
  {
    IntMat acc(0, d);
    for (Eigen::Index i = 0; i < m && static_cast<Eigen::Index>(chosen.size()) < d; ++i) {
      IntMat trial(acc.rows() + 1, d);
      trial.topRows(acc.rows()) = acc;
      trial.row(acc.rows()) = a.row(i);
      if (rank_of(trial) > rank_of(acc)) {
        acc = trial;
        chosen.push_back(i);
      }
    }
    if (static_cast<Eigen::Index>(chosen.size()) != d)
      throw DimensionMismatch("dd_pointed: constraint matrix is rank deficient");
  }

  IntMat q(d, d);
  for (Eigen::Index j = 0; j < d; ++j) q.row(j) = a.row(chosen[static_cast<std::size_t>(j)]);
  Int det = determinant(q);
  IntMat adj = adjugate(q);
  if (det < 0) adj = -adj;

  std::vector<DDRay> rays;
  for (Eigen::Index j = 0; j < d; ++j) {
    IntVec v = adj.col(j);
    make_primitive(v);
    rays.push_back({v, zero_set(a, v)});
  }

  std::vector<char> processed(static_cast<std::size_t>(m), 0);
  for (Eigen::Index j : chosen) processed[static_cast<std::size_t>(j)] = 1;

  auto subset_on_processed = [&](const std::vector<char>& small, const std::vector<char>& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
      if (processed[i] && small[i] && !big[i]) return false;
    return true;
  };

  for (Eigen::Index t = 0; t < m; ++t) {
    if (processed[static_cast<std::size_t>(t)]) continue;
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      val[j] = a.row(t).dot(rays[j].v);
      if (val[j] > 0) pos.push_back(j);
      if (val[j] < 0) neg.push_back(j);
    }
    processed[static_cast<std::size_t>(t)] = 1;
    if (neg.empty()) continue;

    std::vector<DDRay> next;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (val[j] >= 0) next.push_back(rays[j]);

    for (std::size_t jp : pos) {
      for (std::size_t jn : neg) {
        std::vector<char> common(static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < common.size(); ++i)
          common[i] = rays[jp].zero[i] && rays[jn].zero[i];
        bool adjacent = true;
        for (std::size_t j3 = 0; j3 < rays.size(); ++j3) {
          if (j3 == jp || j3 == jn) continue;
          if (subset_on_processed(common, rays[j3].zero)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IntVec w = val[jp] * rays[jn].v - val[jn] * rays[jp].v;
        make_primitive(w);
        bool dup = false;
        for (const DDRay& r : next)
          if (vec_eq(r.v, w)) {
            dup = true;
            break;
          }
        if (!dup) next.push_back({w, zero_set(a, w)});
        if (static_cast<std::int64_t>(next.size()) > budget.points)
          throw ScaleLimit("dd_pointed: ray count exceeds point budget");
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (DDRay& r : rays) out.push_back(std::move(r.v));
  return out;
}

IntMat rows_matrix(const std::vector<IntVec>& rows, Eigen::Index dim) {
  IntMat a(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return a;
}

// Generators of { u : <r,u> >= 0 for all rows r }, split into the pointed
// extreme rays and a lattice basis of the lineality space.
void dual_description(const std::vector<IntVec>& constraint_rows, Eigen::Index n, const Budget& budget,
                      std::vector<IntVec>& pointed_out, std::vector<IntVec>& lineality_out) {
  IntMat a = rows_matrix(constraint_rows, n);
  IntMat kernel = integer_kernel(a);
  IntMat w = complete_saturated_basis(kernel, n);
  IntMat reduced = a * w;
  std::vector<IntVec> rays_w = dd_pointed(reduced, budget);

  pointed_out.clear();
  for (const IntVec& y : rays_w) {
    IntVec u = w * y;
    make_primitive(u);
    pointed_out.push_back(u);
  }
  std::sort(pointed_out.begin(), pointed_out.end(), GradedLexLess{});

  lineality_out.clear();
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) lineality_out.push_back(kernel.col(c));
  std::sort(lineality_out.begin(), lineality_out.end(), GradedLexLess{});
}

}  // namespace

bool Face::contains_ray(int i) const {
  return std::binary_search(ray_indices.begin(), ray_indices.end(), i);
}

RationalCone dual_cone(const std::vector<LatticeVector>& input_rays, const Budget& budget) {
  if (input_rays.empty()) throw ValidationError("dual_cone: empty ray list");
  const Eigen::Index n = input_rays.front().size();
  if (n < 1) throw DimensionMismatch("dual_cone: ambient rank must be at least 1");

  RationalCone cone;
  cone.ambient_dim_ = n;
  for (const LatticeVector& r : input_rays) {
    if (r.size() != n) throw DimensionMismatch("dual_cone: ragged ray list");
    if (is_zero(r)) throw ValidationError("dual_cone: zero ray");
    IntVec p = r;
    make_primitive(p);
    for (const LatticeVector& prev : cone.rays_)
      if (vec_eq(prev, p)) throw ValidationError("dual_cone: duplicate ray " + vec_to_string(p));
    cone.rays_.push_back(p);
  }

  dual_description(cone.rays_, n, budget, cone.facet_normals_, cone.dual_unit_basis_);

  // Strong convexity: sigma is pointed iff sigma^v has nonempty interior,
  // iff the sum of the pointed dual generators pairs strictly with every ray.
  {
    IntVec probe = IntVec::Zero(n);
    for (const DualVector& u : cone.facet_normals_) probe += u;
    for (const LatticeVector& p : cone.rays_) {
      if (pairing(p, probe) <= 0)
        throw NotStronglyConvex("dual_cone: cone spanned by the rays contains a line");
    }
  }

  cone.dual_rays_ = cone.facet_normals_;
  for (const DualVector& b : cone.dual_unit_basis_) {
    cone.dual_rays_.push_back(b);
    cone.dual_rays_.push_back(IntVec(-b));
  }

  // Round trip through the dual to certify that the input rays are exactly
  // the extreme rays of the cone they span.
  {
    std::vector<IntVec> back_constraints = cone.facet_normals_;
    for (const DualVector& b : cone.dual_unit_basis_) {
      back_constraints.push_back(b);
      back_constraints.push_back(IntVec(-b));
    }
    std::vector<IntVec> back_rays, back_lineality;
    dual_description(back_constraints, n, budget, back_rays, back_lineality);
    if (!back_lineality.empty())
      throw NotStronglyConvex("dual_cone: cone spanned by the rays contains a line");
    std::vector<IntVec> sorted_input = cone.rays_;
    std::sort(sorted_input.begin(), sorted_input.end(), GradedLexLess{});
    bool match = sorted_input.size() == back_rays.size();
    for (std::size_t i = 0; match && i < back_rays.size(); ++i)
      match = vec_eq(sorted_input[i], back_rays[i]);
    if (!match)
      throw ValidationError(
          "dual_cone: ray list is not the extreme ray set of its span (redundant ray?)");
  }

  cone.dim_ = static_cast<int>(rank_of(rows_matrix(cone.rays_, n)));

  // Face lattice: every face arises as the vanishing locus of a sum of a
  // subset of facet normals; subsets are cheap at this scale.
  const std::size_t f = cone.facet_normals_.size();
  if (f > 20) throw ScaleLimit("dual_cone: too many facet normals for subset face enumeration");
  std::set<std::vector<int>> seen;
  for (std::size_t mask = 0; mask < (std::size_t(1) << f); ++mask) {
    IntVec u = IntVec::Zero(n);
    for (std::size_t j = 0; j < f; ++j)
      if (mask & (std::size_t(1) << j)) u += cone.facet_normals_[j];
    std::vector<int> z;
    for (std::size_t i = 0; i < cone.rays_.size(); ++i)
      if (pairing(cone.rays_[i], u) == 0) z.push_back(static_cast<int>(i));
    if (seen.insert(z).second) {
      Face face;
      face.ray_indices = z;
      std::vector<IntVec> face_rays;
      for (int i : z) face_rays.push_back(cone.rays_[static_cast<std::size_t>(i)]);
      face.dim = static_cast<int>(rank_of_rows(face_rays, n));
      cone.faces_.push_back(std::move(face));
    }
  }
  std::sort(cone.faces_.begin(), cone.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.ray_indices < b.ray_indices;
  });
  return cone;
}

const Face& RationalCone::zero_face() const { return faces_.front(); }

const Face& RationalCone::sigma_face() const { return faces_.back(); }

const Face& RationalCone::ray_face(int ray_index) const {
  return face_by_rays({ray_index});
}

bool RationalCone::has_face(const std::vector<int>& sorted_ray_indices) const {
  for (const Face& f : faces_)
    if (f.ray_indices == sorted_ray_indices) return true;
  return false;
}

const Face& RationalCone::face_by_rays(const std::vector<int>& sorted_ray_indices) const {
  for (const Face& f : faces_)
    if (f.ray_indices == sorted_ray_indices) return f;
  std::ostringstream os;
  os << "no face with ray set {";
  for (std::size_t i = 0; i < sorted_ray_indices.size(); ++i) {
    if (i) os << ",";
    os << sorted_ray_indices[i];
  }
  os << "}";
  throw NotAFace(os.str());
}

bool contains(const RationalCone& cone, const LatticeVector& v, Containment mode) {
  if (v.size() != cone.ambient_dim()) throw DimensionMismatch("contains: wrong vector length");
  for (const DualVector& b : cone.dual_unit_basis())
    if (v.dot(b) != 0) return false;
  for (const DualVector& u : cone.facet_normals()) {
    Int s = v.dot(u);
    if (s < 0) return false;
    if (mode == Containment::relative_interior && s == 0) return false;
  }
  return true;
}

bool dual_contains(const RationalCone& cone, const DualVector& u, Containment mode) {
  if (u.size() != cone.ambient_dim()) throw DimensionMismatch("dual_contains: wrong vector length");
  for (const LatticeVector& p : cone.rays()) {
    Int s = pairing(p, u);
    if (s < 0) return false;
    if (mode == Containment::relative_interior && s == 0) return false;
  }
  return true;
}

std::vector<DualVector> perp_lattice_basis(const RationalCone& cone, const Face& face) {
  const Eigen::Index n = cone.ambient_dim();
  IntMat a(static_cast<Eigen::Index>(face.ray_indices.size()), n);
  for (std::size_t i = 0; i < face.ray_indices.size(); ++i)
    a.row(static_cast<Eigen::Index>(i)) =
        cone.rays()[static_cast<std::size_t>(face.ray_indices[i])].transpose();
  if (face.ray_indices.empty()) {
    std::vector<DualVector> basis;
    for (Eigen::Index i = 0; i < n; ++i) {
      IntVec e = IntVec::Zero(n);
      e(i) = 1;
      basis.push_back(e);
    }
    return basis;
  }
  IntMat k = integer_kernel(a);
  std::vector<DualVector> basis;
  for (Eigen::Index c = 0; c < k.cols(); ++c) basis.push_back(k.col(c));
  return basis;
}

std::vector<int> vanishing_ray_set(const RationalCone& cone, const DualVector& u) {
  if (!dual_contains(cone, u, Containment::boundary))
    throw NotInSemigroup("vanishing_ray_set: vector outside the dual cone");
  std::vector<int> z;
  for (std::size_t i = 0; i < cone.rays().size(); ++i)
    if (pairing(cone.rays()[i], u) == 0) z.push_back(static_cast<int>(i));
  return z;
}

}  // namespace torimon
