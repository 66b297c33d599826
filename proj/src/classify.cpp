#include "torimon/classify.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace torimon {

namespace {

bool vanishes_on_face(const RationalCone& cone, const Face& face, const DualVector& e) {
  for (int i : face.ray_indices)
    if (pairing(cone.rays()[static_cast<std::size_t>(i)], e) != 0) return false;
  return true;
}

IntVec entry_vector(const HilbertBasis& basis, int idx) {
  const int ng = static_cast<int>(basis.generators.size());
  return idx < ng ? basis.generators[static_cast<std::size_t>(idx)]
                  : basis.unit_basis[static_cast<std::size_t>(idx - ng)];
}

}  // namespace

ToricPoint line_sample(const MonoidStructure& m, const LineComponent& line, const Rat& s) {
  ToricPoint x;
  x.values = RatVec::Zero(m.basis().total());
  for (Eigen::Index i = 0; i < x.values.size(); ++i) {
    if (!line.in_gamma_perp[static_cast<std::size_t>(i)]) continue;
    x.values(i) = pow_rat(s, Int(line.parameter_exponents[static_cast<std::size_t>(i)]));
  }
  return x;
}

std::vector<int> free_entries(const LineComponent& line) {
  std::vector<int> out;
  for (std::size_t i = 0; i < line.parameter_exponents.size(); ++i)
    if (line.in_gamma_perp[i] && line.parameter_exponents[i] > 0)
      out.push_back(static_cast<int>(i));
  return out;
}

IdempotentSet idempotents(const MonoidStructure& m) {
  const RationalCone& cone = m.cone();
  const HilbertBasis& basis = m.basis();
  const int rho = m.ray_index();

  IdempotentSet out;
  long faces_with_rho = 0;
  for (const Face& gamma : cone.faces()) {
    if (gamma.contains_ray(rho)) {
      ++faces_with_rho;
      out.isolated.emplace_back(gamma, distinguished_point(cone, basis, gamma));
      continue;
    }
    const bool e1_perp = vanishes_on_face(cone, gamma, m.e1());
    const bool e2_perp = vanishes_on_face(cone, gamma, m.e2());
    if (e1_perp == e2_perp) continue;  // no idempotents in this orbit

    const DualVector& root = e1_perp ? m.e1() : m.e2();
    LineComponent line;
    line.face = gamma;
    line.closure_face = extend_face(cone, gamma, rho, root);
    line.fixed_one_indices = perp_generator_indices(cone, basis, line.closure_face);
    line.closure_point = distinguished_point(cone, basis, line.closure_face);
    const std::vector<int> gamma_perp = perp_generator_indices(cone, basis, gamma);
    line.in_gamma_perp.assign(static_cast<std::size_t>(basis.total()), 0);
    for (int i : gamma_perp) line.in_gamma_perp[static_cast<std::size_t>(i)] = 1;
    line.parameter_exponents.assign(static_cast<std::size_t>(basis.total()), 0);
    for (int i : gamma_perp)
      line.parameter_exponents[static_cast<std::size_t>(i)] =
          m.grades()[static_cast<std::size_t>(i)];
    out.lines.push_back(std::move(line));
  }

  // A line's closure point is the lone case-(a) idempotent of its closure
  // face; report it inside the component only, so components stay disjoint.
  if (!out.lines.empty()) {
    std::vector<std::pair<Face, ToricPoint>> kept;
    for (auto& entry : out.isolated) {
      bool absorbed = false;
      for (const LineComponent& line : out.lines)
        if (line.closure_face == entry.first) {
          absorbed = true;
          break;
        }
      if (!absorbed) kept.push_back(std::move(entry));
    }
    out.isolated = std::move(kept);
  }

  out.finite = out.lines.empty();
  if (out.finite) out.count_if_finite = faces_with_rho;
  return out;
}

bool is_idempotent(const MonoidStructure& m, const ToricPoint& x) {
  return multiply(m, x, x) == x;
}

namespace {

bool matches_line(const MonoidStructure& m, const LineComponent& line, const ToricPoint& x) {
  const Eigen::Index total = m.basis().total();
  for (Eigen::Index i = 0; i < total; ++i)
    if (!line.in_gamma_perp[static_cast<std::size_t>(i)] && x.values(i) != 0) return false;
  for (int i : line.fixed_one_indices)
    if (x.values(i) != 1) return false;
  std::vector<int> free = free_entries(line);
  if (free.empty()) return x == line.closure_point;
  bool all_zero = true;
  for (int i : free)
    if (x.values(i) != 0) all_zero = false;
  if (all_zero) return x == line.closure_point;

  // Recover the line parameter s from a free entry and verify the rest.
  std::vector<Rat> candidates;
  for (int i : free) {
    long e = line.parameter_exponents[static_cast<std::size_t>(i)];
    if (e == 1) {
      candidates.push_back(x.values(i));
      break;
    }
  }
  if (candidates.empty()) {
    int f = free.front();
    long e = line.parameter_exponents[static_cast<std::size_t>(f)];
    auto root = exact_root(x.values(f), static_cast<unsigned long>(e));
    if (!root) return false;
    candidates.push_back(*root);
    if (e % 2 == 0) candidates.push_back(Rat(-*root));
  }
  for (const Rat& s : candidates) {
    if (s == 0) continue;
    if (x == line_sample(m, line, s)) return true;
  }
  return false;
}

}  // namespace

bool in_idempotent_set(const MonoidStructure& m, const IdempotentSet& idem, const ToricPoint& x) {
  for (const auto& entry : idem.isolated)
    if (entry.second == x) return true;
  for (const LineComponent& line : idem.lines)
    if (matches_line(m, line, x)) return true;
  return false;
}

std::string zero_reason_text(ZeroReason r) {
  switch (r) {
    case ZeroReason::none:
      return "";
    case ZeroReason::sigma_perp_nonzero:
      return "sigma^perp is nonzero";
    case ZeroReason::minus_e1_in_dual:
      return "-e1 in dual cone";
    case ZeroReason::minus_e2_in_dual:
      return "-e2 in dual cone";
  }
  return "";
}

ZeroResult zero(const MonoidStructure& m) {
  ZeroResult r;
  if (!m.cone().full_dimensional()) {
    r.reason = ZeroReason::sigma_perp_nonzero;
    return r;
  }
  if (dual_contains(m.cone(), IntVec(-m.e1()), Containment::boundary)) {
    r.reason = ZeroReason::minus_e1_in_dual;
    return r;
  }
  if (dual_contains(m.cone(), IntVec(-m.e2()), Containment::boundary)) {
    r.reason = ZeroReason::minus_e2_in_dual;
    return r;
  }
  r.exists = true;
  r.point = distinguished_point(m.cone(), m.basis(), m.cone().sigma_face());
  return r;
}

CenterDescription center_equations(const MonoidStructure& m, int box_scale, const Budget& budget) {
  CenterDescription desc;
  if (m.commutative()) {
    desc.trivial = true;
    return desc;
  }

  const RationalCone& cone = m.cone();
  const HilbertBasis& basis = m.basis();
  const Eigen::Index n = cone.ambient_dim();
  const LatticeVector& p = m.p();

  for (Eigen::Index i = 0; i < basis.total(); ++i)
    if (m.grades()[static_cast<std::size_t>(i)] != 0)
      desc.vanishing_indices.push_back(static_cast<int>(i));

  // Box hull of the basis vectors and both roots, scaled.
  IntVec lo = IntVec::Zero(n), hi = IntVec::Zero(n);
  auto widen = [&](const IntVec& v) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (v(c) < lo(c)) lo(c) = v(c);
      if (v(c) > hi(c)) hi(c) = v(c);
    }
  };
  for (const DualVector& g : basis.generators) widen(g);
  for (const DualVector& b : basis.unit_basis) {
    widen(b);
    widen(IntVec(-b));
  }
  widen(m.e1());
  widen(m.e2());
  lo *= box_scale;
  hi *= box_scale;

  Int volume = 1;
  for (Eigen::Index c = 0; c < n; ++c) volume *= hi(c) - lo(c) + 1;
  if (volume > budget.points)
    throw ScaleLimit("center_equations: slice box exceeds point budget");

  // Canonicalize slice points modulo the unit lattice (zero unit part).
  IntMat kmat(n, static_cast<Eigen::Index>(basis.unit_basis.size()));
  for (std::size_t c = 0; c < basis.unit_basis.size(); ++c)
    kmat.col(static_cast<Eigen::Index>(c)) = basis.unit_basis[c];
  IntMat w = complete_saturated_basis(kmat, n);
  IntMat full(n, n);
  full.leftCols(kmat.cols()) = kmat;
  full.rightCols(w.cols()) = w;
  IntMat full_inv = adjugate(full);
  if (determinant(full) < 0) full_inv = -full_inv;
  auto canonical_rep = [&](const IntVec& u) {
    if (kmat.cols() == 0) return u;
    IntVec coords = full_inv * u;
    IntVec rep = u;
    for (Eigen::Index c = 0; c < kmat.cols(); ++c) rep -= coords(c) * kmat.col(c);
    return rep;
  };

  std::set<IntVec, IntVecLess> slice;
  IntVec u = lo;
  while (true) {
    if (pairing(p, u) == 1 && dual_contains(cone, u, Containment::boundary))
      slice.insert(canonical_rep(u));
    Eigen::Index pos = 0;
    while (pos < n) {
      u(pos) += 1;
      if (u(pos) <= hi(pos)) break;
      u(pos) = lo(pos);
      ++pos;
    }
    if (pos == n) break;
  }

  std::vector<IntVec> points(slice.begin(), slice.end());
  std::vector<IntVec> minimal;
  for (const IntVec& a : points) {
    bool dominated = false;
    for (const IntVec& b : points) {
      if (vec_eq(a, b)) continue;
      IntVec diff = a - b;
      if (!is_zero(diff) && dual_contains(cone, diff, Containment::boundary)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end(), GradedLexLess{});

  // Covering certificate: every enumerated slice point must be dominated
  // by a kept generator.
  for (const IntVec& a : points) {
    bool covered = false;
    for (const IntVec& g : minimal) {
      IntVec diff = a - g;
      if (dual_contains(cone, diff, Containment::boundary)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      throw ScaleLimit("center_equations: slice covering certificate failed within the budget");
  }

  for (const IntVec& g : minimal) {
    desc.slice_generators.push_back(g);
    IntVec lhs = g + m.e1();
    IntVec rhs = g + m.e2();
    assert(dual_contains(cone, lhs, Containment::boundary));
    assert(dual_contains(cone, rhs, Containment::boundary));
    desc.binomials.emplace_back(lhs, rhs);
  }
  return desc;
}

bool is_central(const MonoidStructure& m, const CenterDescription& desc, const ToricPoint& x) {
  if (x.values.size() != m.basis().total()) throw InvalidPoint("is_central: wrong value count");
  if (desc.trivial) return true;
  for (int i : desc.vanishing_indices)
    if (x.values(i) != 0) return false;
  for (const auto& [lhs, rhs] : desc.binomials) {
    if (evaluate_character(m, x, lhs) != evaluate_character(m, x, rhs)) return false;
  }
  return true;
}

bool is_central(const MonoidStructure& m, const ToricPoint& x) {
  return is_central(m, center_equations(m), x);
}

ToricPoint conjugate(const MonoidStructure& m, const ToricPoint& g, const ToricPoint& x) {
  if (!is_invertible(m, g)) throw NotInvertible("conjugate: conjugating point is not invertible");
  return multiply(m, multiply(m, g, x), invert(m, g));
}

}  // namespace torimon
