#include <doctest.h>

#include <algorithm>
#include <set>

#include "torimon/hilbert.hpp"
#include "torimon/oracle.hpp"

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

// Independent oracle: all irreducible lattice points of sigma^v with
// coordinates in [-box, box], by pairwise subtraction. For cones whose
// Hilbert basis fits well inside the box this is the exact basis.
std::vector<IntVec> brute_force_basis(const RationalCone& cone, long box) {
  const Eigen::Index n = cone.ambient_dim();
  std::vector<IntVec> members;
  IntVec v = IntVec::Constant(n, Int(-box));
  while (true) {
    if (!is_zero(v) && dual_contains(cone, v, Containment::boundary)) members.push_back(v);
    Eigen::Index pos = 0;
    while (pos < n) {
      v(pos) += 1;
      if (v(pos) <= box) break;
      v(pos) = -box;
      ++pos;
    }
    if (pos == n) break;
  }
  std::vector<IntVec> irreducible;
  for (const IntVec& a : members) {
    bool red = false;
    for (const IntVec& b : members) {
      IntVec diff = a - b;
      if (is_zero(diff)) continue;
      if (dual_contains(cone, diff, Containment::boundary)) {
        red = true;
        break;
      }
    }
    if (!red) irreducible.push_back(a);
  }
  std::sort(irreducible.begin(), irreducible.end(), GradedLexLess{});
  return irreducible;
}

}  // namespace

TEST_CASE("octant Hilbert basis is the standard basis in coordinate order") {
  for (int n : {1, 2, 3, 4, 5}) {
    RationalCone c = dual_cone(octant(n));
    HilbertBasis b = hilbert_basis(c);
    REQUIRE(static_cast<int>(b.generators.size()) == n);
    CHECK(b.unit_basis.empty());
    for (int i = 0; i < n; ++i) {
      IntVec e = IntVec::Zero(n);
      e(i) = 1;
      CHECK(vec_eq(b.generators[static_cast<std::size_t>(i)], e));
    }
  }
}

TEST_CASE("quadratic cone Hilbert basis") {
  RationalCone c = dual_cone(quadratic_cone_rays());
  HilbertBasis b = hilbert_basis(c);
  REQUIRE(b.generators.size() == 4);
  CHECK(vec_eq(b.generators[0], make_vec({1, 0, 0})));
  CHECK(vec_eq(b.generators[1], make_vec({0, 1, 0})));
  CHECK(vec_eq(b.generators[2], make_vec({0, 0, 1})));
  CHECK(vec_eq(b.generators[3], make_vec({1, 1, -1})));
}

TEST_CASE("non-simplicial dual semigroup needs an interior generator") {
  // sigma = cone((2,-1),(0,1)); sigma^v = cone((1,0),(1,2)) whose
  // semigroup needs the interior point (1,1).
  RationalCone c = dual_cone({make_vec({2, -1}), make_vec({0, 1})});
  HilbertBasis b = hilbert_basis(c);
  REQUIRE(b.generators.size() == 3);
  std::vector<IntVec> expect = brute_force_basis(c, 6);
  REQUIRE(expect.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(vec_eq(b.generators[i], expect[i]));
}

TEST_CASE("staircase semigroup of a sharp plane cone") {
  // sigma = cone((5,-1),(0,1)): sigma^v = cone((1,0),(1,5)), whose Hilbert
  // basis is the full staircase (1,0),(1,1),...,(1,5).
  RationalCone c = dual_cone({make_vec({5, -1}), make_vec({0, 1})});
  HilbertBasis b = hilbert_basis(c);
  REQUIRE(b.generators.size() == 6);
  for (long k = 0; k <= 5; ++k)
    CHECK(vec_eq(b.generators[static_cast<std::size_t>(k)], make_vec({1, k})));
  std::vector<IntVec> expect = brute_force_basis(c, 7);
  REQUIRE(expect.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(vec_eq(b.generators[i], expect[i]));
}

TEST_CASE("Hilbert basis matches the brute-force oracle on random cones") {
  RatSampler rng(7);
  int built = 0;
  while (built < 8) {
    int n = 2 + static_cast<int>(rng.below(2));
    std::set<IntVec, IntVecLess> rayset;
    int count = n + static_cast<int>(rng.below(2));
    while (static_cast<int>(rayset.size()) < count) {
      IntVec v(n);
      v(0) = 1 + rng.below(3);
      for (int c2 = 1; c2 < n; ++c2) v(c2) = rng.below(7) - 3;
      make_primitive(v);
      rayset.insert(v);
    }
    RationalCone cone;
    try {
      cone = dual_cone({rayset.begin(), rayset.end()});
    } catch (const ValidationError&) {
      continue;
    }
    ++built;
    HilbertBasis b = hilbert_basis(cone);
    // Soundness: members, pairwise irreducible.
    for (const DualVector& g : b.generators) {
      CHECK(dual_contains(cone, g, Containment::boundary));
      for (const DualVector& h : b.generators) {
        IntVec diff = g - h;
        if (is_zero(diff)) continue;
        CHECK_FALSE(dual_contains(cone, diff, Containment::boundary));
      }
    }
    // Completeness at desk scale: every dual point with |coords| <= 5
    // factors over the basis.
    const Eigen::Index dim = cone.ambient_dim();
    IntVec v = IntVec::Constant(dim, Int(-5));
    while (true) {
      if (dual_contains(cone, v, Containment::boundary)) {
        Factorization f = factorize(cone, b, v);
        CHECK(vec_eq(factorization_vector(b, f), v));
      }
      Eigen::Index pos = 0;
      while (pos < dim) {
        v(pos) += 1;
        if (v(pos) <= 5) break;
        v(pos) = -5;
        ++pos;
      }
      if (pos == dim) break;
    }
  }
}

TEST_CASE("cone over the unit cube") {
  // sigma has six rays (the facet normals of the cube cone); its dual is
  // the cone over the unit 3-cube at height one, whose semigroup is
  // generated by the eight vertices.
  std::vector<LatticeVector> rays = {make_vec({0, 1, 0, 0}),  make_vec({0, 0, 1, 0}),
                                     make_vec({0, 0, 0, 1}),  make_vec({1, -1, 0, 0}),
                                     make_vec({1, 0, -1, 0}), make_vec({1, 0, 0, -1})};
  RationalCone c = dual_cone(rays);
  CHECK(c.full_dimensional());
  REQUIRE(c.dual_rays().size() == 8);
  // 28 faces, mirroring the face poset of the cube.
  CHECK(c.faces().size() == 28);

  HilbertBasis b = hilbert_basis(c);
  REQUIRE(b.generators.size() == 8);
  for (long x : {0L, 1L})
    for (long y : {0L, 1L})
      for (long z : {0L, 1L}) {
        bool found = false;
        for (const DualVector& g : b.generators) found = found || vec_eq(g, make_vec({1, x, y, z}));
        CHECK(found);
      }

  // Deep lattice points factor: (3, x, y, z) with 0 <= x,y,z <= 3.
  for (long x : {0L, 2L, 3L})
    for (long y : {1L, 3L}) {
      Factorization f = factorize(c, b, make_vec({3, x, y, 2}));
      CHECK(vec_eq(factorization_vector(b, f), make_vec({3, x, y, 2})));
    }
}

TEST_CASE("index-two simplicial dual needs its interior point") {
  // sigma = cone((0,0,1),(0,2,-1),(2,0,-1)); its dual is the simplicial
  // cone on (1,0,0),(0,1,0),(1,1,2) of lattice index two, so the Hilbert
  // basis picks up the interior point (1,1,1).
  RationalCone c = dual_cone({make_vec({0, 0, 1}), make_vec({0, 2, -1}), make_vec({2, 0, -1})});
  HilbertBasis b = hilbert_basis(c);
  std::vector<IntVec> expect = brute_force_basis(c, 6);
  REQUIRE(b.generators.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(vec_eq(b.generators[i], expect[i]));
  bool interior = false;
  for (const DualVector& g : b.generators) interior = interior || vec_eq(g, make_vec({1, 1, 1}));
  CHECK(interior);
}

TEST_CASE("factorize basics") {
  RationalCone q = dual_cone(quadratic_cone_rays());
  HilbertBasis b = hilbert_basis(q);

  Factorization zero = factorize(q, b, make_vec({0, 0, 0}));
  CHECK(is_zero(zero.generator_mults));

  // Exhaustive oracle over small multiplicity vectors: (1,1,0) has the
  // factorizations v+w and z+t; the deterministic search must pick one.
  Factorization f = factorize(q, b, make_vec({1, 1, 0}));
  CHECK(vec_eq(f.generator_mults, make_vec({1, 1, 0, 0})));
  {
    std::vector<IntVec> all;
    IntVec m = IntVec::Zero(4);
    for (m(0) = 0; m(0) <= 2; ++m(0))
      for (m(1) = 0; m(1) <= 2; ++m(1))
        for (m(2) = 0; m(2) <= 2; ++m(2))
          for (m(3) = 0; m(3) <= 2; ++m(3)) {
            IntVec sum = IntVec::Zero(3);
            for (int i = 0; i < 4; ++i) sum += m(i) * b.generators[static_cast<std::size_t>(i)];
            if (vec_eq(sum, make_vec({1, 1, 0}))) all.push_back(m);
          }
    REQUIRE(all.size() == 2);  // exactly v+w and z+t
    bool found = false;
    for (const IntVec& cand : all) found = found || vec_eq(cand, f.generator_mults);
    CHECK(found);
  }

  RationalCone oct = dual_cone(octant(2));
  HilbertBasis ob = hilbert_basis(oct);
  Factorization g = factorize(oct, ob, make_vec({2, 3}));
  CHECK(vec_eq(g.generator_mults, make_vec({2, 3})));

  CHECK_THROWS_AS(factorize(q, b, make_vec({1, 1, -2})), NotInSemigroup);
}

TEST_CASE("factorize through the unit lattice of a non-full-dimensional cone") {
  RationalCone c = dual_cone({make_vec({1, 0})});
  HilbertBasis b = hilbert_basis(c);
  REQUIRE(b.generators.size() == 1);
  CHECK(vec_eq(b.generators[0], make_vec({1, 0})));
  REQUIRE(b.unit_basis.size() == 1);

  Factorization f = factorize(c, b, make_vec({3, -2}));
  CHECK(vec_eq(factorization_vector(b, f), make_vec({3, -2})));
  CHECK(f.generator_mults(0) == 3);
}

TEST_CASE("budget limits are hard errors") {
  Budget tiny{4};
  RationalCone c = dual_cone({make_vec({2, -1}), make_vec({0, 1})});
  CHECK_THROWS_AS(hilbert_basis(c, tiny), ScaleLimit);
}
