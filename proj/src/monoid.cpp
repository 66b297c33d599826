#include "torimon/monoid.hpp"

#include <cassert>
#include <sstream>

namespace torimon {

namespace {

std::optional<std::string> root_violation(const RationalCone& cone, int ray_index,
                                          const DualVector& e, const char* name) {
  for (std::size_t j = 0; j < cone.rays().size(); ++j) {
    Int s = pairing(cone.rays()[j], e);
    std::ostringstream os;
    if (static_cast<int>(j) == ray_index) {
      if (s != -1) {
        os << "<p_" << j << ", " << name << "> = " << s << " != -1 on the distinguished ray";
        return os.str();
      }
    } else if (s < 0) {
      os << "<p_" << j << ", " << name << "> = " << s << " < 0 on non-distinguished ray";
      return os.str();
    }
  }
  return std::nullopt;
}

IntVec entry_vector(const HilbertBasis& basis, int idx) {
  const int ng = static_cast<int>(basis.generators.size());
  return idx < ng ? basis.generators[static_cast<std::size_t>(idx)]
                  : basis.unit_basis[static_cast<std::size_t>(idx - ng)];
}

}  // namespace

MonoidStructure build(const RationalCone& cone, int ray_index, const DualVector& e1,
                      const DualVector& e2, const Budget& budget) {
  if (ray_index < 0 || ray_index >= static_cast<int>(cone.rays().size()))
    throw RayIndexOutOfRange("build: ray index " + std::to_string(ray_index) + " out of range");
  if (e1.size() != cone.ambient_dim() || e2.size() != cone.ambient_dim())
    throw DimensionMismatch("build: root length does not match the ambient rank");
  if (auto why = root_violation(cone, ray_index, e1, "e1")) throw NotADemazureRoot(*why);
  if (auto why = root_violation(cone, ray_index, e2, "e2")) throw NotADemazureRoot(*why);

  MonoidStructure m;
  m.cone_ = cone;
  m.ray_index_ = ray_index;
  m.e1_ = e1;
  m.e2_ = e2;
  m.basis_ = hilbert_basis(cone, budget);

  const Eigen::Index n = cone.ambient_dim();
  const int total = static_cast<int>(m.basis_.total());
  const LatticeVector& p = cone.rays()[static_cast<std::size_t>(ray_index)];

  m.witness_ = IntVec::Zero(n);
  for (const DualVector& g : m.basis_.generators)
    if (pairing(p, g) == 0) m.witness_ += g;
  m.witness_fact_ = factorize(cone, m.basis_, m.witness_, budget);

  const Face& rho = cone.ray_face(ray_index);
  m.perp_basis_ = perp_lattice_basis(cone, rho);
  m.rho_perp_entries_ = perp_generator_indices(cone, m.basis_, rho);

  m.grades_.resize(static_cast<std::size_t>(total), 0);
  m.fact_e2_.resize(static_cast<std::size_t>(total));
  m.fact_e1_.resize(static_cast<std::size_t>(total));
  m.binom_.resize(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) {
    IntVec g = entry_vector(m.basis_, i);
    Int s = pairing(p, g);
    assert(s >= 0);
    if (!s.fits_slong_p()) throw ScaleLimit("build: generator grade out of range");
    long grade = s.get_si();
    m.grades_[static_cast<std::size_t>(i)] = grade;
    for (long k = 0; k <= grade; ++k) {
      m.fact_e2_[static_cast<std::size_t>(i)].push_back(
          factorize(cone, m.basis_, IntVec(g + Int(k) * e2), budget));
      m.fact_e1_[static_cast<std::size_t>(i)].push_back(
          factorize(cone, m.basis_, IntVec(g + Int(k) * e1), budget));
      m.binom_[static_cast<std::size_t>(i)].push_back(
          binomial(static_cast<unsigned long>(grade), static_cast<unsigned long>(k)));
    }
  }

  // Laurent combination tables over the rho^perp entries.
  IntMat rho_mat(n, static_cast<Eigen::Index>(m.rho_perp_entries_.size()));
  for (std::size_t c = 0; c < m.rho_perp_entries_.size(); ++c)
    rho_mat.col(static_cast<Eigen::Index>(c)) = entry_vector(m.basis_, m.rho_perp_entries_[c]);
  IntMat all_mat(n, total);
  for (int c = 0; c < total; ++c) all_mat.col(c) = entry_vector(m.basis_, c);
  IntMat perp_mat(n, static_cast<Eigen::Index>(m.perp_basis_.size()));
  for (std::size_t c = 0; c < m.perp_basis_.size(); ++c)
    perp_mat.col(static_cast<Eigen::Index>(c)) = m.perp_basis_[c];

  auto solve_or_die = [](const IntMat& a, const IntVec& b, const char* what) {
    auto sol = solve_integer(a, b);
    if (!sol) throw ValidationError(std::string("build: unsolvable combination for ") + what);
    return *sol;
  };

  for (int i = 0; i < total; ++i) {
    IntVec g = entry_vector(m.basis_, i);
    Int s(m.grades_[static_cast<std::size_t>(i)]);
    IntVec w0 = -(g + s * e2);  // lies in M(rho)
    m.invert_combos_.push_back(solve_or_die(rho_mat, w0, "inverse"));
    m.from_group_exponents_.push_back(solve_or_die(perp_mat, IntVec(g + s * e1), "group chart"));
  }
  m.alpha_combo_ = solve_or_die(all_mat, IntVec(-e1), "alpha");
  for (const DualVector& b : m.perp_basis_)
    m.torus_basis_combos_.push_back(solve_or_die(rho_mat, b, "torus coordinate"));
  m.chi_exponents_ = solve_or_die(perp_mat, IntVec(e2 - e1), "chi");
  return m;
}

Rat MonoidStructure::eval_rho_laurent(const ToricPoint& x, const IntVec& combo) const {
  Rat v(1);
  for (Eigen::Index c = 0; c < combo.size(); ++c) {
    if (combo(c) == 0) continue;
    v *= pow_rat(x.values(rho_perp_entries_[static_cast<std::size_t>(c)]), combo(c));
  }
  return v;
}

Rat MonoidStructure::eval_full_laurent(const ToricPoint& x, const IntVec& combo) const {
  Rat v(1);
  for (Eigen::Index c = 0; c < combo.size(); ++c) {
    if (combo(c) == 0) continue;
    v *= pow_rat(x.values(c), combo(c));
  }
  return v;
}

Rat MonoidStructure::alpha_of(const ToricPoint& x) const {
  bool torus = true;
  for (Eigen::Index i = 0; i < x.values.size(); ++i)
    if (x.values(i) == 0) {
      torus = false;
      break;
    }
  if (!torus) return Rat(0);  // invertible non-torus points lie on O_rho, where alpha vanishes
  return eval_full_laurent(x, alpha_combo_);
}

ToricPoint identity(const MonoidStructure& m) {
  return distinguished_point(m.cone(), m.basis(), m.rho_face());
}

ToricPoint multiply(const MonoidStructure& m, const ToricPoint& x, const ToricPoint& y) {
  const Eigen::Index total = m.basis().total();
  if (x.values.size() != total || y.values.size() != total)
    throw InvalidPoint("multiply: wrong value count");
  ToricPoint out;
  out.values = RatVec::Zero(total);
  for (Eigen::Index i = 0; i < total; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    const long s = m.grades_[ii];
    Rat acc(0);
    for (long k = 0; k <= s; ++k) {
      Rat lhs = evaluate_on(x, m.basis_, m.fact_e2_[ii][static_cast<std::size_t>(k)]);
      if (lhs == 0) continue;
      Rat rhs = evaluate_on(y, m.basis_, m.fact_e1_[ii][static_cast<std::size_t>(s - k)]);
      if (rhs == 0) continue;
      acc += Rat(m.binom_[ii][static_cast<std::size_t>(k)]) * lhs * rhs;
    }
    out.values(i) = acc;
  }
  return out;
}

bool is_invertible(const MonoidStructure& m, const ToricPoint& x) {
  if (x.values.size() != m.basis().total()) throw InvalidPoint("is_invertible: wrong value count");
  return evaluate_on(x, m.basis(), m.witness_fact_) != 0;
}

ToricPoint invert(const MonoidStructure& m, const ToricPoint& y) {
  if (!is_invertible(m, y)) throw NotInvertible("invert: point is not invertible");
  const Eigen::Index total = m.basis().total();
  Rat alpha = m.alpha_of(y);
  ToricPoint out;
  out.values = RatVec::Zero(total);
  for (Eigen::Index i = 0; i < total; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    const long s = m.grades_[ii];
    Rat v = m.eval_rho_laurent(y, m.invert_combos_[ii]);
    if (s > 0) {
      v *= pow_rat(alpha, Int(s));
      if (s % 2 == 1) v = -v;
    }
    out.values(i) = v;
  }
  return out;
}

GroupCoordinates to_group_coords(const MonoidStructure& m, const ToricPoint& x) {
  if (!is_invertible(m, x)) throw NotInvertible("to_group_coords: point is not invertible");
  GroupCoordinates g;
  g.alpha = m.alpha_of(x);
  g.torus_values = RatVec::Zero(static_cast<Eigen::Index>(m.torus_basis_combos_.size()));
  for (std::size_t k = 0; k < m.torus_basis_combos_.size(); ++k)
    g.torus_values(static_cast<Eigen::Index>(k)) = m.eval_rho_laurent(x, m.torus_basis_combos_[k]);
  return g;
}

ToricPoint from_group_coords(const MonoidStructure& m, const GroupCoordinates& g) {
  if (g.torus_values.size() != static_cast<Eigen::Index>(m.torus_lattice_basis().size()))
    throw DimensionMismatch("from_group_coords: wrong torus value count");
  for (Eigen::Index k = 0; k < g.torus_values.size(); ++k)
    if (g.torus_values(k) == 0) throw NotInvertible("from_group_coords: zero torus value");
  const Eigen::Index total = m.basis().total();
  ToricPoint out;
  out.values = RatVec::Zero(total);
  for (Eigen::Index i = 0; i < total; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    const IntVec& exps = m.from_group_exponents_[ii];
    Rat v(1);
    for (Eigen::Index k = 0; k < exps.size(); ++k) {
      if (exps(k) == 0) continue;
      v *= pow_rat(g.torus_values(k), exps(k));
    }
    const long s = m.grades_[ii];
    if (s > 0) v *= pow_rat(g.alpha, Int(s));
    out.values(i) = v;
  }
  return out;
}

GroupCoordinates semidirect_multiply(const MonoidStructure& m, const GroupCoordinates& g,
                                     const GroupCoordinates& h) {
  Rat chi(1);
  for (Eigen::Index k = 0; k < m.chi_exponents_.size(); ++k) {
    if (m.chi_exponents_(k) == 0) continue;
    chi *= pow_rat(g.torus_values(k), m.chi_exponents_(k));
  }
  GroupCoordinates out;
  out.alpha = g.alpha + chi * h.alpha;
  out.torus_values = RatVec::Zero(g.torus_values.size());
  for (Eigen::Index k = 0; k < g.torus_values.size(); ++k)
    out.torus_values(k) = g.torus_values(k) * h.torus_values(k);
  return out;
}

ToricPoint torus_act(const MonoidStructure& m, const RatVec& t, const ToricPoint& x) {
  if (t.size() != m.cone().ambient_dim()) throw DimensionMismatch("torus_act: wrong torus rank");
  for (Eigen::Index k = 0; k < t.size(); ++k)
    if (t(k) == 0) throw ZeroValue("torus_act: torus values must be nonzero");
  const Eigen::Index total = m.basis().total();
  if (x.values.size() != total) throw InvalidPoint("torus_act: wrong value count");
  ToricPoint out;
  out.values = RatVec::Zero(total);
  for (Eigen::Index i = 0; i < total; ++i) {
    IntVec g = entry_vector(m.basis(), static_cast<int>(i));
    Rat chi(1);
    for (Eigen::Index k = 0; k < t.size(); ++k) {
      if (g(k) == 0) continue;
      chi *= pow_rat(t(k), g(k));
    }
    out.values(i) = chi * x.values(i);
  }
  return out;
}

ToricPoint distinguished_point(const MonoidStructure& m, const Face& face) {
  return distinguished_point(m.cone(), m.basis(), face);
}

OrbitTag orbit_of(const MonoidStructure& m, const ToricPoint& x) {
  return orbit_of(m.cone(), m.basis(), x);
}

ToricPoint orbit_point(const MonoidStructure& m, const Face& face, const RatVec& torus_values) {
  return orbit_point(m.cone(), m.basis(), face, torus_values);
}

bool validate(const MonoidStructure& m, const ToricPoint& x, int degree_bound) {
  return validate(m.cone(), m.basis(), x, degree_bound);
}

Rat evaluate_character(const MonoidStructure& m, const ToricPoint& x, const DualVector& v) {
  return evaluate_character(m.cone(), m.basis(), x, v);
}

}  // namespace torimon
