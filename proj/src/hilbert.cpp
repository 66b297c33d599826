#include "torimon/hilbert.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace torimon {

namespace {

// Face data of sigma^v modulo its lineality, in the coordinates of a
// complement W: ray sets index into the pointed dual rays.
struct DualFace {
  std::vector<int> ray_set;
  int wdim = 0;
};

// Recursive pulling triangulation over the dual face poset. Each returned
// simplex is a list of pointed-dual-ray indices of size equal to the
// W-dimension of the top face.
class PullingTriangulation {
 public:
  explicit PullingTriangulation(std::vector<DualFace> faces) : faces_(std::move(faces)) {}

  std::vector<std::vector<int>> top_simplices() {
    int top = 0;
    for (std::size_t i = 1; i < faces_.size(); ++i)
      if (faces_[i].wdim > faces_[top].wdim) top = static_cast<int>(i);
    return triangulate(top);
  }

 private:
  std::vector<std::vector<int>> triangulate(int fi) {
    auto it = memo_.find(fi);
    if (it != memo_.end()) return it->second;
    const DualFace& f = faces_[static_cast<std::size_t>(fi)];
    std::vector<std::vector<int>> out;
    if (f.wdim <= 1 || static_cast<int>(f.ray_set.size()) == f.wdim) {
      if (f.wdim > 0) out.push_back(f.ray_set);
    } else {
      int pulled = f.ray_set.front();  // smallest index; ray sets are sorted
      for (std::size_t gi = 0; gi < faces_.size(); ++gi) {
        const DualFace& g = faces_[gi];
        if (g.wdim != f.wdim - 1) continue;
        if (!std::includes(f.ray_set.begin(), f.ray_set.end(), g.ray_set.begin(), g.ray_set.end()))
          continue;
        if (std::binary_search(g.ray_set.begin(), g.ray_set.end(), pulled)) continue;
        for (std::vector<int> s : triangulate(static_cast<int>(gi))) {
          s.push_back(pulled);
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
        }
      }
    }
    memo_[fi] = out;
    return out;
  }

  std::vector<DualFace> faces_;
  std::map<int, std::vector<std::vector<int>>> memo_;
};

}  // namespace

HilbertBasis hilbert_basis(const RationalCone& cone, const Budget& budget) {
  const Eigen::Index n = cone.ambient_dim();
  HilbertBasis basis;
  basis.unit_basis = cone.dual_unit_basis();
  const Eigen::Index k = static_cast<Eigen::Index>(basis.unit_basis.size());
  const Eigen::Index d = n - k;

  // Coordinates on a complement W of the unit lattice; the pointed part of
  // sigma^v is full-dimensional there.
  IntMat kmat(n, k);
  for (Eigen::Index c = 0; c < k; ++c) kmat.col(c) = basis.unit_basis[static_cast<std::size_t>(c)];
  IntMat w = complete_saturated_basis(kmat, n);
  IntMat full(n, n);
  full.leftCols(k) = kmat;
  full.rightCols(d) = w;
  Int fdet = determinant(full);
  assert(fdet == 1 || fdet == -1);
  IntMat full_inv = adjugate(full);
  if (fdet < 0) full_inv = -full_inv;  // now full_inv * full == I

  const std::vector<DualVector>& pointed = cone.facet_normals();
  std::vector<IntVec> pointed_w;
  for (const DualVector& u : pointed) {
    IntVec z = full_inv * u;
    pointed_w.push_back(z.tail(d));
  }

  // Dual faces via the primal face lattice: the face of sigma^v matched
  // with a face tau of sigma consists of the dual rays orthogonal to tau.
  std::vector<DualFace> dual_faces;
  {
    std::set<std::vector<int>> seen;
    for (const Face& tau : cone.faces()) {
      std::vector<int> rs;
      for (std::size_t j = 0; j < pointed.size(); ++j) {
        bool perp = true;
        for (int i : tau.ray_indices)
          if (pairing(cone.rays()[static_cast<std::size_t>(i)], pointed[j]) != 0) {
            perp = false;
            break;
          }
        if (perp) rs.push_back(static_cast<int>(j));
      }
      if (seen.insert(rs).second) {
        DualFace f;
        f.ray_set = rs;
        f.wdim = static_cast<int>(n) - tau.dim - static_cast<int>(k);
        dual_faces.push_back(std::move(f));
      }
    }
  }

  std::set<IntVec, IntVecLess> candidates_w;
  for (const IntVec& y : pointed_w) candidates_w.insert(y);

  if (d > 0) {
    PullingTriangulation tri(dual_faces);
    std::int64_t visited = 0;
    for (const std::vector<int>& simplex : tri.top_simplices()) {
      assert(static_cast<Eigen::Index>(simplex.size()) == d);
      IntMat g(d, d);
      for (Eigen::Index c = 0; c < d; ++c)
        g.col(c) = pointed_w[static_cast<std::size_t>(simplex[static_cast<std::size_t>(c)])];
      Int det = determinant(g);
      assert(det != 0);
      IntMat adj = adjugate(g);
      if (det < 0) {
        det = -det;
        adj = -adj;
      }
      if (det == 1) continue;  // unimodular simplex contributes no interior points

      IntVec lo = IntVec::Zero(d), hi = IntVec::Zero(d);
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
          if (g(r, c) < 0) lo(r) += g(r, c);
          if (g(r, c) > 0) hi(r) += g(r, c);
        }
      Int volume = 1;
      for (Eigen::Index r = 0; r < d; ++r) volume *= hi(r) - lo(r) + 1;
      if (volume > budget.points || visited + volume.get_si() > budget.points)
        throw ScaleLimit("hilbert_basis: parallelepiped scan exceeds point budget");

      IntVec x = lo;
      while (true) {
        ++visited;
        IntVec t = adj * x;
        bool inside = true;
        for (Eigen::Index r = 0; r < d; ++r)
          if (t(r) < 0 || t(r) >= det) {
            inside = false;
            break;
          }
        if (inside && !is_zero(x)) candidates_w.insert(x);
        Eigen::Index pos = 0;
        while (pos < d) {
          x(pos) += 1;
          if (x(pos) <= hi(pos)) break;
          x(pos) = lo(pos);
          ++pos;
        }
        if (pos == d) break;
      }
    }
  }

  // Lift candidates with zero unit part and discard reducible ones: x is
  // reducible iff x - y stays in sigma^v for some other candidate y.
  std::vector<DualVector> lifted;
  for (const IntVec& y : candidates_w) {
    IntVec padded = IntVec::Zero(n);
    padded.tail(d) = y;
    lifted.push_back(full * padded);
  }
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    bool reducible = false;
    for (std::size_t j = 0; j < lifted.size() && !reducible; ++j) {
      if (j == i) continue;
      IntVec diff = lifted[i] - lifted[j];
      if (is_zero(diff)) continue;
      if (dual_contains(cone, diff, Containment::boundary)) reducible = true;
    }
    if (!reducible) basis.generators.push_back(lifted[i]);
  }
  std::sort(basis.generators.begin(), basis.generators.end(), GradedLexLess{});
  return basis;
}

Factorization factorize(const RationalCone& cone, const HilbertBasis& basis, const DualVector& v,
                        const Budget& budget) {
  if (v.size() != cone.ambient_dim()) throw DimensionMismatch("factorize: wrong vector length");
  if (!dual_contains(cone, v, Containment::boundary))
    throw NotInSemigroup("factorize: " + vec_to_string(v) + " is outside the dual cone");

  const std::size_t ng = basis.generators.size();
  const Eigen::Index nu = static_cast<Eigen::Index>(basis.unit_basis.size());
  const Eigen::Index n = cone.ambient_dim();

  IntMat umat(n, nu);
  for (Eigen::Index c = 0; c < nu; ++c) umat.col(c) = basis.unit_basis[static_cast<std::size_t>(c)];

  Factorization result;
  result.generator_mults = IntVec::Zero(static_cast<Eigen::Index>(ng));
  result.unit_mults = IntVec::Zero(nu);

  IntVec mults = IntVec::Zero(static_cast<Eigen::Index>(ng));
  std::int64_t nodes = 0;

  auto in_unit_lattice = [&](const IntVec& r) {
    for (const LatticeVector& p : cone.rays())
      if (pairing(p, r) != 0) return false;
    return true;
  };

  std::function<bool(std::size_t, IntVec&)> dfs = [&](std::size_t gi, IntVec& rest) -> bool {
    if (++nodes > budget.points) throw ScaleLimit("factorize: search exceeds point budget");
    if (in_unit_lattice(rest)) {
      if (nu == 0) {
        if (!is_zero(rest)) return false;
      } else {
        auto sol = solve_integer(umat, rest);
        assert(sol.has_value());
        result.unit_mults = *sol;
      }
      result.generator_mults = mults;
      return true;
    }
    if (gi == ng) return false;
    const DualVector& g = basis.generators[gi];
    // Largest multiplicity keeping the remainder inside the dual cone.
    Int kmax = -1;
    for (const LatticeVector& p : cone.rays()) {
      Int pg = pairing(p, g);
      if (pg > 0) {
        Int bound = pairing(p, rest) / pg;
        if (kmax < 0 || bound < kmax) kmax = bound;
      }
    }
    assert(kmax >= 0 && "pointed generator must pair positively with some ray");
    for (Int m = kmax; m >= 0; --m) {
      IntVec next = rest - m * g;
      if (!dual_contains(cone, next, Containment::boundary)) continue;
      mults(static_cast<Eigen::Index>(gi)) = m;
      if (dfs(gi + 1, next)) return true;
    }
    mults(static_cast<Eigen::Index>(gi)) = 0;
    return false;
  };

  IntVec start = v;
  bool ok = dfs(0, start);
  if (!ok) throw NotInSemigroup("factorize: no factorization found for " + vec_to_string(v));
  return result;
}

DualVector factorization_vector(const HilbertBasis& basis, const Factorization& f) {
  Eigen::Index n = basis.generators.empty()
                       ? (basis.unit_basis.empty() ? 0 : basis.unit_basis.front().size())
                       : basis.generators.front().size();
  DualVector v = IntVec::Zero(n);
  for (std::size_t i = 0; i < basis.generators.size(); ++i)
    v += f.generator_mults(static_cast<Eigen::Index>(i)) * basis.generators[i];
  for (std::size_t i = 0; i < basis.unit_basis.size(); ++i)
    v += f.unit_mults(static_cast<Eigen::Index>(i)) * basis.unit_basis[i];
  return v;
}

}  // namespace torimon
