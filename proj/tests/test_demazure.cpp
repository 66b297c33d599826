#include <doctest.h>

#include "torimon/demazure.hpp"

using namespace torimon;

namespace {

std::vector<LatticeVector> octant(int n) {
  std::vector<LatticeVector> rays;
  for (int i = 0; i < n; ++i) {
    IntVec e = IntVec::Zero(n);
    e(i) = 1;
    rays.push_back(e);
  }
  return rays;
}

std::vector<LatticeVector> quadratic_cone_rays() {
  return {make_vec({1, 0, 0}), make_vec({0, 1, 0}), make_vec({1, 0, 1}), make_vec({0, 1, 1})};
}

}  // namespace

TEST_CASE("root membership on the plane octant") {
  RationalCone c = dual_cone(octant(2));
  for (long a : {0L, 1L, 5L}) CHECK(is_root(c, 1, make_vec({a, -1})));
  CHECK_FALSE(is_root(c, 1, make_vec({-1, -1})));
  CHECK_FALSE(is_root(c, 1, make_vec({0, -2})));
  CHECK_FALSE(is_root(c, 1, make_vec({0, 1})));
  CHECK_THROWS_AS(is_root(c, 5, make_vec({0, -1})), RayIndexOutOfRange);
}

TEST_CASE("root membership on the quadratic cone") {
  RationalCone c = dual_cone(quadratic_cone_rays());
  // The root set of p_1 is { (-1, k, l) : k >= 0, l >= 1 }.
  CHECK(is_root(c, 0, make_vec({-1, 0, 1})));
  CHECK(is_root(c, 0, make_vec({-1, 2, 3})));
  CHECK_FALSE(is_root(c, 0, make_vec({-1, -1, 1})));
  CHECK_FALSE(is_root(c, 0, make_vec({-1, 0, 0})));
  CHECK_FALSE(is_root(c, 0, make_vec({-2, 0, 1})));
}

TEST_CASE("bounded enumeration") {
  RationalCone q = dual_cone(quadratic_cone_rays());
  auto roots = enumerate_roots(q, 0, 2);
  REQUIRE(roots.size() == 6);
  for (const DemazureRoot& r : roots) {
    CHECK(r.e(0) == -1);
    CHECK(r.e(1) >= 0);
    CHECK(r.e(1) <= 2);
    CHECK(r.e(2) >= 1);
    CHECK(r.e(2) <= 2);
  }

  RationalCone line = dual_cone({make_vec({1})});
  auto lr = enumerate_roots(line, 0, 3);
  REQUIRE(lr.size() == 1);
  CHECK(vec_eq(lr[0].e, make_vec({-1})));

  RationalCone oct = dual_cone(octant(2));
  auto two_roots = enumerate_roots(oct, 1, 1);
  REQUIRE(two_roots.size() == 2);
  CHECK(vec_eq(two_roots[0].e, make_vec({0, -1})));
  CHECK(vec_eq(two_roots[1].e, make_vec({1, -1})));

  // Every enumerated root satisfies the defining pairings exhaustively.
  for (int ray = 0; ray < 4; ++ray) {
    for (const DemazureRoot& r : enumerate_roots(q, ray, 2)) {
      for (std::size_t j = 0; j < q.rays().size(); ++j) {
        Int s = pairing(q.rays()[j], r.e);
        if (static_cast<int>(j) == ray)
          CHECK(s == -1);
        else
          CHECK(s >= 0);
      }
    }
  }

  CHECK_THROWS_AS(enumerate_roots(q, 0, 100, Budget{1000}), ScaleLimit);
}

TEST_CASE("face extension by a root") {
  RationalCone a4 = dual_cone(octant(4));
  // gamma = cone(s_1, s_2), rho = ray s_4, root (0,0,a,-1) in gamma^perp.
  const Face& gamma = a4.face_by_rays({0, 1});
  const Face& ext = extend_face(a4, gamma, 3, make_vec({0, 0, 2, -1}));
  CHECK(ext.ray_indices == std::vector<int>{0, 1, 3});

  // gamma = 0 extends to the ray itself.
  const Face& ray = extend_face(a4, a4.zero_face(), 3, make_vec({0, 0, 2, -1}));
  CHECK(ray.ray_indices == std::vector<int>{3});

  const Face& two = extend_face(a4, a4.face_by_rays({1}), 3, make_vec({0, 0, 2, -1}));
  CHECK(two.ray_indices == std::vector<int>{1, 3});

  // Misuse: the root does not vanish on cone(s_3).
  CHECK_THROWS_AS(extend_face(a4, a4.face_by_rays({2}), 3, make_vec({0, 0, 2, -1})), NotAFace);
  // Misuse: ray already in the face.
  CHECK_THROWS_AS(extend_face(a4, a4.face_by_rays({3}), 3, make_vec({0, 0, 2, -1})), NotAFace);

  // The extension has dimension dim(gamma) + 1 and contains the ray.
  for (const Face& f : a4.faces()) {
    if (f.contains_ray(3)) continue;
    const Face& e = extend_face(a4, f, 3, make_vec({0, 0, 0, -1}));
    CHECK(e.dim == f.dim + 1);
    CHECK(e.contains_ray(3));
    for (int i : f.ray_indices) CHECK(e.contains_ray(i));
  }
}

TEST_CASE("commutative degeneration accepts equal roots") {
  RationalCone c = dual_cone(octant(2));
  CHECK(is_root(c, 1, make_vec({0, -1})));
  // Same root twice is a valid monoid datum; checked in the monoid tests.
}
