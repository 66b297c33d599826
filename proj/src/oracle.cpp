#include "torimon/oracle.hpp"

#include <sstream>

namespace torimon {

namespace {

std::string point_text(const ToricPoint& x) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < x.values.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(x.values(i));
  }
  os << ")";
  return os.str();
}

}  // namespace

std::uint64_t RatSampler::next_u64() {
  // splitmix64: tiny, stable across platforms.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long RatSampler::below(long n) { return static_cast<long>(next_u64() % static_cast<std::uint64_t>(n)); }

Rat RatSampler::any() {
  long num = below(19) - 9;
  long den = below(3) + 1;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat RatSampler::nonzero() {
  while (true) {
    Rat q = any();
    if (q != 0) return q;
  }
}

RatVec RatSampler::nonzero_vec(Eigen::Index size) {
  RatVec v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = nonzero();
  return v;
}

std::vector<ToricPoint> grid_idempotents(const MonoidStructure& m, const std::vector<Rat>& values,
                                         int degree_bound, const Budget& budget) {
  if (values.empty()) throw ValidationError("grid_idempotents: empty grid");
  bool has_zero = false, has_one = false;
  for (const Rat& v : values) {
    if (v == 0) has_zero = true;
    if (v == 1) has_one = true;
  }
  if (!has_zero || !has_one)
    throw ValidationError("grid_idempotents: grid must contain 0 and 1");

  const Eigen::Index total = m.basis().total();
  Int count = 1;
  for (Eigen::Index i = 0; i < total; ++i) count *= static_cast<long>(values.size());
  if (count > budget.points) throw ScaleLimit("grid_idempotents: grid exceeds point budget");

  std::vector<ToricPoint> found;
  std::vector<std::size_t> odo(static_cast<std::size_t>(total), 0);
  while (true) {
    ToricPoint x;
    x.values = RatVec::Zero(total);
    for (Eigen::Index i = 0; i < total; ++i) x.values(i) = values[odo[static_cast<std::size_t>(i)]];
    if (validate(m, x, degree_bound) && is_idempotent(m, x)) found.push_back(x);
    std::size_t pos = 0;
    while (pos < odo.size()) {
      if (++odo[pos] < values.size()) break;
      odo[pos] = 0;
      ++pos;
    }
    if (pos == odo.size()) break;
  }
  return found;
}

namespace {

// Mixed-stratum point source for the axiom checks.
class StratifiedSampler {
 public:
  StratifiedSampler(const MonoidStructure& m, RatSampler& rng)
      : m_(m), rng_(rng), idem_(idempotents(m)) {}

  ToricPoint point() {
    switch (rng_.below(3)) {
      case 0:
        return torus_point();
      case 1: {
        const auto& faces = m_.cone().faces();
        const Face& f = faces[static_cast<std::size_t>(rng_.below(static_cast<long>(faces.size())))];
        std::vector<DualVector> basis = perp_lattice_basis(m_.cone(), f);
        return orbit_point(m_, f, rng_.nonzero_vec(static_cast<Eigen::Index>(basis.size())));
      }
      default:
        return idempotent_point();
    }
  }

  ToricPoint torus_point() {
    return orbit_point(m_, m_.cone().zero_face(), rng_.nonzero_vec(m_.cone().ambient_dim()));
  }

  ToricPoint invertible_point() {
    if (rng_.below(2) == 0) return torus_point();
    std::vector<DualVector> basis = perp_lattice_basis(m_.cone(), m_.rho_face());
    return orbit_point(m_, m_.rho_face(), rng_.nonzero_vec(static_cast<Eigen::Index>(basis.size())));
  }

  ToricPoint idempotent_point() {
    long total = static_cast<long>(idem_.isolated.size() + 2 * idem_.lines.size());
    if (total == 0) return torus_point();
    long pick = rng_.below(total);
    if (pick < static_cast<long>(idem_.isolated.size()))
      return idem_.isolated[static_cast<std::size_t>(pick)].second;
    pick -= static_cast<long>(idem_.isolated.size());
    const LineComponent& line = idem_.lines[static_cast<std::size_t>(pick / 2)];
    if (pick % 2 == 0) return line.closure_point;
    return line_sample(m_, line, rng_.nonzero());
  }

 private:
  const MonoidStructure& m_;
  RatSampler& rng_;
  IdempotentSet idem_;
};

}  // namespace

OracleReport check_associativity(const MonoidStructure& m, int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("check_associativity: samples must be positive");
  RatSampler rng(seed);
  StratifiedSampler strata(m, rng);
  OracleReport report;
  for (int k = 0; k < samples; ++k) {
    ToricPoint x = strata.point(), y = strata.point(), z = strata.point();
    ToricPoint lhs = multiply(m, multiply(m, x, y), z);
    ToricPoint rhs = multiply(m, x, multiply(m, y, z));
    report.note(lhs == rhs, "associativity failed on x=" + point_text(x) + " y=" + point_text(y) +
                                " z=" + point_text(z) + ": (xy)z=" + point_text(lhs) +
                                " x(yz)=" + point_text(rhs));
  }
  return report;
}

OracleReport check_group_axioms(const MonoidStructure& m, int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("check_group_axioms: samples must be positive");
  RatSampler rng(seed);
  StratifiedSampler strata(m, rng);
  OracleReport report;
  const ToricPoint one = identity(m);
  for (int k = 0; k < samples; ++k) {
    ToricPoint y = strata.invertible_point();
    bool ok = true;
    std::ostringstream why;
    ToricPoint inv = invert(m, y);
    if (multiply(m, y, inv) != one || multiply(m, inv, y) != one) {
      ok = false;
      why << "inverse law failed for y=" << point_text(y) << " y^-1=" << point_text(inv) << "; ";
    }
    GroupCoordinates gy = to_group_coords(m, y);
    if (from_group_coords(m, gy) != y) {
      ok = false;
      why << "group chart round trip failed for y=" << point_text(y) << "; ";
    }
    ToricPoint x = strata.invertible_point();
    GroupCoordinates gx = to_group_coords(m, x);
    GroupCoordinates prod = semidirect_multiply(m, gx, gy);
    if (!(to_group_coords(m, multiply(m, x, y)) == prod)) {
      ok = false;
      why << "semidirect product disagrees with multiply on x=" << point_text(x)
          << " y=" << point_text(y) << "; ";
    }
    report.note(ok, why.str());
  }
  return report;
}

namespace {

bool is_standard_octant(const RationalCone& cone) {
  const Eigen::Index n = cone.ambient_dim();
  if (static_cast<Eigen::Index>(cone.rays().size()) != n) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    const LatticeVector& r = cone.rays()[static_cast<std::size_t>(i)];
    for (Eigen::Index c = 0; c < n; ++c)
      if (r(c) != (c == i ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

OracleReport differential_example_formulas(const MonoidStructure& m, ExampleTemplate which,
                                           int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("differential: samples must be positive");
  RatSampler rng(seed);
  OracleReport report;

  if (which == ExampleTemplate::affine_space) {
    const Eigen::Index n = m.cone().ambient_dim();
    if (!is_standard_octant(m.cone()))
      throw TemplateMismatch("differential: cone is not the standard octant");
    const int r = m.ray_index();
    // Coordinates are the basis characters u_1..u_n in order.
    auto sample_point = [&]() {
      ToricPoint x;
      x.values = RatVec::Zero(n);
      for (Eigen::Index i = 0; i < n; ++i) x.values(i) = rng.below(5) == 0 ? Rat(0) : rng.any();
      return x;
    };
    auto closed_formula = [&](const ToricPoint& x, const ToricPoint& y) {
      ToricPoint out;
      out.values = RatVec::Zero(n);
      for (Eigen::Index i = 0; i < n; ++i)
        if (static_cast<int>(i) != r) out.values(i) = x.values(i) * y.values(i);
      Rat xmono(1), ymono(1);
      for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<int>(i) == r) continue;
        xmono *= pow_rat(x.values(i), m.e2()(i));  // a-exponents
        ymono *= pow_rat(y.values(i), m.e1()(i));  // b-exponents
      }
      out.values(r) = xmono * y.values(r) + ymono * x.values(r);
      return out;
    };
    for (int k = 0; k < samples; ++k) {
      ToricPoint x = sample_point(), y = sample_point();
      ToricPoint got = multiply(m, x, y);
      ToricPoint want = closed_formula(x, y);
      report.note(got == want, "affine-space formula mismatch on x=" + point_text(x) +
                                   " y=" + point_text(y) + ": multiply=" + point_text(got) +
                                   " formula=" + point_text(want));
    }
    return report;
  }

  // Quadratic cone vw = zt with rays (1,0,0),(0,1,0),(1,0,1),(0,1,1) and
  // the distinguished ray p_1; coordinates v,w,z,t in basis order.
  {
    std::vector<IntVec> expected = {make_vec({1, 0, 0}), make_vec({0, 1, 0}), make_vec({1, 0, 1}),
                                    make_vec({0, 1, 1})};
    if (m.cone().ambient_dim() != 3 || m.cone().rays().size() != 4)
      throw TemplateMismatch("differential: not the quadratic cone");
    for (std::size_t i = 0; i < 4; ++i)
      if (!vec_eq(m.cone().rays()[i], expected[i]))
        throw TemplateMismatch("differential: not the quadratic cone");
    if (m.ray_index() != 0)
      throw TemplateMismatch("differential: distinguished ray must be p_1");
    if (m.e1()(0) != -1 || m.e2()(0) != -1)
      throw TemplateMismatch("differential: roots must have the form (-1,k,l)");
  }
  const Int k1 = m.e1()(1), l1 = m.e1()(2);
  const Int k2 = m.e2()(1), l2 = m.e2()(2);

  auto sample_point = [&]() -> ToricPoint {
    if (rng.below(2) == 0) {
      return orbit_point(m, m.cone().zero_face(), rng.nonzero_vec(3));
    }
    const auto& faces = m.cone().faces();
    const Face& f = faces[static_cast<std::size_t>(rng.below(static_cast<long>(faces.size())))];
    std::vector<DualVector> basis = perp_lattice_basis(m.cone(), f);
    return orbit_point(m, f, rng.nonzero_vec(static_cast<Eigen::Index>(basis.size())));
  };
  auto closed_formula = [&](const ToricPoint& x, const ToricPoint& y) {
    const Rat &vx = x.values(0), &wx = x.values(1), &zx = x.values(2), &tx = x.values(3);
    const Rat &vy = y.values(0), &wy = y.values(1), &zy = y.values(2), &ty = y.values(3);
    ToricPoint out;
    out.values = RatVec::Zero(4);
    out.values(0) = vx * pow_rat(wy, k1) * pow_rat(zy, l1) + vy * pow_rat(wx, k2) * pow_rat(zx, l2);
    out.values(1) = wx * wy;
    out.values(2) = zx * zy;
    out.values(3) = tx * pow_rat(wy, Int(k1 + 1)) * pow_rat(zy, Int(l1 - 1)) +
                    ty * pow_rat(wx, Int(k2 + 1)) * pow_rat(zx, Int(l2 - 1));
    return out;
  };
  for (int k = 0; k < samples; ++k) {
    ToricPoint x = sample_point(), y = sample_point();
    ToricPoint got = multiply(m, x, y);
    ToricPoint want = closed_formula(x, y);
    report.note(got == want, "quadratic-cone formula mismatch on x=" + point_text(x) +
                                 " y=" + point_text(y) + ": multiply=" + point_text(got) +
                                 " formula=" + point_text(want));
  }
  return report;
}

}  // namespace torimon
