#include "torimon/demazure.hpp"

#include <algorithm>

namespace torimon {

bool is_root(const RationalCone& cone, int ray_index, const DualVector& e) {
  if (ray_index < 0 || ray_index >= static_cast<int>(cone.rays().size()))
    throw RayIndexOutOfRange("is_root: ray index " + std::to_string(ray_index));
  if (e.size() != cone.ambient_dim()) throw DimensionMismatch("is_root: wrong vector length");
  for (std::size_t j = 0; j < cone.rays().size(); ++j) {
    Int s = pairing(cone.rays()[j], e);
    if (static_cast<int>(j) == ray_index) {
      if (s != -1) return false;
    } else if (s < 0) {
      return false;
    }
  }
  return true;
}

std::vector<DemazureRoot> enumerate_roots(const RationalCone& cone, int ray_index, long bound,
                                          const Budget& budget) {
  if (ray_index < 0 || ray_index >= static_cast<int>(cone.rays().size()))
    throw RayIndexOutOfRange("enumerate_roots: ray index " + std::to_string(ray_index));
  if (bound < 0) throw ValidationError("enumerate_roots: negative bound");
  const Eigen::Index n = cone.ambient_dim();

  Int box = 1;
  for (Eigen::Index i = 0; i < n; ++i) box *= 2 * bound + 1;
  if (box > budget.points) throw ScaleLimit("enumerate_roots: search box exceeds point budget");

  std::vector<DemazureRoot> roots;
  IntVec e = IntVec::Constant(n, Int(-bound));
  while (true) {
    if (is_root(cone, ray_index, e)) roots.push_back({e, ray_index});
    Eigen::Index pos = 0;
    while (pos < n) {
      e(pos) += 1;
      if (e(pos) <= bound) break;
      e(pos) = -bound;
      ++pos;
    }
    if (pos == n) break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const DemazureRoot& a, const DemazureRoot& b) { return graded_lex_less(a.e, b.e); });
  return roots;
}

const Face& extend_face(const RationalCone& cone, const Face& face, int ray_index,
                        const DualVector& e) {
  if (!is_root(cone, ray_index, e))
    throw NotAFace("extend_face: e is not a Demazure root of the given ray");
  if (face.contains_ray(ray_index))
    throw NotAFace("extend_face: the distinguished ray already lies in the face");
  for (int i : face.ray_indices)
    if (pairing(cone.rays()[static_cast<std::size_t>(i)], e) != 0)
      throw NotAFace("extend_face: the root does not vanish on the face");
  std::vector<int> target = face.ray_indices;
  target.push_back(ray_index);
  std::sort(target.begin(), target.end());
  return cone.face_by_rays(target);
}

}  // namespace torimon
