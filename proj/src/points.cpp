#include "torimon/points.hpp"

#include <map>

namespace torimon {

Rat evaluate_on(const ToricPoint& x, const HilbertBasis& basis, const Factorization& f) {
  const Eigen::Index ng = static_cast<Eigen::Index>(basis.generators.size());
  Rat value(1);
  for (Eigen::Index i = 0; i < ng; ++i) {
    const Int& m = f.generator_mults(i);
    if (m == 0) continue;
    if (x.values(i) == 0) return Rat(0);
    value *= pow_rat(x.values(i), m);
  }
  for (Eigen::Index j = 0; j < f.unit_mults.size(); ++j) {
    const Int& m = f.unit_mults(j);
    if (m == 0) continue;
    value *= pow_rat(x.values(ng + j), m);
  }
  return value;
}

Rat evaluate_character(const RationalCone& cone, const HilbertBasis& basis, const ToricPoint& x,
                       const DualVector& v, const Budget& budget) {
  return evaluate_on(x, basis, factorize(cone, basis, v, budget));
}

std::vector<int> perp_generator_indices(const RationalCone& cone, const HilbertBasis& basis,
                                        const Face& face) {
  std::vector<int> out;
  auto perp = [&](const DualVector& g) {
    for (int i : face.ray_indices)
      if (pairing(cone.rays()[static_cast<std::size_t>(i)], g) != 0) return false;
    return true;
  };
  for (std::size_t i = 0; i < basis.generators.size(); ++i)
    if (perp(basis.generators[i])) out.push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < basis.unit_basis.size(); ++j)
    out.push_back(static_cast<int>(basis.generators.size() + j));
  return out;
}

ToricPoint distinguished_point(const RationalCone& cone, const HilbertBasis& basis,
                               const Face& face) {
  ToricPoint x;
  x.values = RatVec::Zero(basis.total());
  for (int i : perp_generator_indices(cone, basis, face)) x.values(i) = 1;
  return x;
}

OrbitTag orbit_of(const RationalCone& cone, const HilbertBasis& basis, const ToricPoint& x) {
  if (x.values.size() != basis.total()) throw InvalidPoint("orbit_of: wrong value count");
  std::vector<int> nonzero;
  for (Eigen::Index i = 0; i < x.values.size(); ++i)
    if (x.values(i) != 0) nonzero.push_back(static_cast<int>(i));
  for (const Face& face : cone.faces()) {
    if (perp_generator_indices(cone, basis, face) == nonzero) return OrbitTag{face};
  }
  throw IncoherentZeroPattern("orbit_of: zero pattern matches no face");
}

ToricPoint orbit_point(const RationalCone& cone, const HilbertBasis& basis, const Face& face,
                       const RatVec& torus_values) {
  std::vector<DualVector> perp_basis = perp_lattice_basis(cone, face);
  if (torus_values.size() != static_cast<Eigen::Index>(perp_basis.size()))
    throw DimensionMismatch("orbit_point: expected one value per perp-basis vector");
  for (Eigen::Index i = 0; i < torus_values.size(); ++i)
    if (torus_values(i) == 0) throw ZeroValue("orbit_point: torus values must be nonzero");

  const Eigen::Index n = cone.ambient_dim();
  IntMat bmat(n, static_cast<Eigen::Index>(perp_basis.size()));
  for (std::size_t c = 0; c < perp_basis.size(); ++c)
    bmat.col(static_cast<Eigen::Index>(c)) = perp_basis[c];

  ToricPoint x;
  x.values = RatVec::Zero(basis.total());
  for (int idx : perp_generator_indices(cone, basis, face)) {
    const DualVector& g = idx < static_cast<int>(basis.generators.size())
                              ? basis.generators[static_cast<std::size_t>(idx)]
                              : basis.unit_basis[static_cast<std::size_t>(
                                    idx - static_cast<int>(basis.generators.size()))];
    auto coords = solve_integer(bmat, g);
    if (!coords) throw InvalidPoint("orbit_point: generator outside the perp lattice");
    Rat val(1);
    for (Eigen::Index j = 0; j < coords->size(); ++j) val *= pow_rat(torus_values(j), (*coords)(j));
    x.values(idx) = val;
  }
  return x;
}

bool validate(const RationalCone& cone, const HilbertBasis& basis, const ToricPoint& x,
              int degree_bound, const Budget& budget) {
  if (x.values.size() != basis.total()) throw InvalidPoint("validate: wrong value count");
  if (degree_bound < 2) throw ValidationError("validate: degree bound must be at least 2");

  try {
    orbit_of(cone, basis, x);
  } catch (const IncoherentZeroPattern&) {
    return false;
  }

  // Entries to combine: each generator with its value, each unit basis
  // vector in both directions.
  std::vector<std::pair<DualVector, Rat>> entries;
  const Eigen::Index ng = static_cast<Eigen::Index>(basis.generators.size());
  for (Eigen::Index i = 0; i < ng; ++i) entries.push_back({basis.generators[i], x.values(i)});
  for (std::size_t j = 0; j < basis.unit_basis.size(); ++j) {
    const Rat& t = x.values(ng + static_cast<Eigen::Index>(j));
    entries.push_back({basis.unit_basis[j], t});
    entries.push_back({IntVec(-basis.unit_basis[j]), Rat(1 / t)});
  }

  // Rough count C(#entries + D, D) of multisets; keep it under budget.
  {
    Int count = 1;
    for (int i = 1; i <= degree_bound; ++i) {
      count *= Int(static_cast<long>(entries.size()) + i);
      count /= i;
    }
    if (count > budget.points) throw ScaleLimit("validate: relation scan exceeds point budget");
  }

  std::map<IntVec, Rat, IntVecLess> seen;
  bool ok = true;
  const Eigen::Index n = cone.ambient_dim();
  std::function<void(std::size_t, int, IntVec, Rat)> walk = [&](std::size_t idx, int degree_left,
                                                                IntVec sum, Rat prod) {
    if (!ok) return;
    auto it = seen.find(sum);
    if (it == seen.end()) {
      seen.emplace(sum, prod);
    } else if (it->second != prod) {
      ok = false;
      return;
    }
    if (degree_left == 0 || idx == entries.size()) return;
    for (std::size_t e = idx; e < entries.size(); ++e) {
      walk(e, degree_left - 1, IntVec(sum + entries[e].first), Rat(prod * entries[e].second));
      if (!ok) return;
    }
  };
  walk(0, degree_bound, IntVec::Zero(n), Rat(1));
  return ok;
}

}  // namespace torimon
