#include "torimon/report.hpp"

#include <sstream>

#include "torimon/oracle.hpp"

namespace torimon {

namespace {

using nlohmann::json;

json vec_json(const IntVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).fits_slong_p()) throw ScaleLimit("report: lattice coordinate exceeds integer range");
    a.push_back(v(i).get_si());
  }
  return a;
}

json point_json(const ToricPoint& x) {
  json a = json::array();
  for (Eigen::Index i = 0; i < x.values.size(); ++i) a.push_back(rat_to_string(x.values(i)));
  return a;
}

json face_json(const Face& f) {
  json j;
  j["dim"] = f.dim;
  j["rays"] = f.ray_indices;
  return j;
}

json report_json(const OracleReport& r) {
  json j;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["witnesses"] = r.witnesses;
  return j;
}

std::vector<Rat> parse_rat_csv(const std::string& csv, const std::string& what) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ',')) out.push_back(parse_rat(item));
  if (out.empty()) throw UsageError("empty value list for " + what);
  return out;
}

/// chi^v written as a monomial in the named coordinates, via factorization.
std::string monomial_text(const MonoidStructure& m, const std::vector<std::string>& names,
                          const DualVector& v) {
  Factorization f = factorize(m.cone(), m.basis(), v);
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& name, const Int& e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
  };
  for (Eigen::Index i = 0; i < f.generator_mults.size(); ++i)
    emit(names[static_cast<std::size_t>(i)], f.generator_mults(i));
  for (Eigen::Index i = 0; i < f.unit_mults.size(); ++i)
    emit(names[static_cast<std::size_t>(f.generator_mults.size() + i)], f.unit_mults(i));
  if (first) os << "1";
  return os.str();
}

json cone_json(const MonoidStructure& m, const std::vector<std::string>& names) {
  json c;
  c["dim"] = static_cast<int>(m.cone().ambient_dim());
  json dual = json::array();
  for (const DualVector& u : m.cone().dual_rays()) dual.push_back(vec_json(u));
  c["dual_rays"] = dual;
  json units = json::array();
  for (const DualVector& u : m.basis().unit_basis) units.push_back(vec_json(u));
  c["unit_generators"] = units;
  json faces = json::array();
  for (const Face& f : m.cone().faces()) faces.push_back(face_json(f));
  c["faces"] = faces;
  json hb = json::array();
  for (const DualVector& g : m.basis().generators) hb.push_back(vec_json(g));
  c["hilbert_basis"] = hb;
  c["generator_names"] = names;
  return c;
}

json idempotents_json(const MonoidStructure& m, const IdempotentSet& idem,
                      const std::vector<std::string>& names) {
  json j;
  j["finite"] = idem.finite;
  if (idem.count_if_finite)
    j["count"] = *idem.count_if_finite;
  else
    j["count"] = nullptr;
  json iso = json::array();
  for (const auto& [face, pt] : idem.isolated) {
    json e;
    e["face"] = face.ray_indices;
    e["point"] = point_json(pt);
    iso.push_back(e);
  }
  j["isolated"] = iso;
  json lines = json::array();
  for (const LineComponent& line : idem.lines) {
    json e;
    e["face"] = line.face.ray_indices;
    e["closure_face"] = line.closure_face.ray_indices;
    e["closure_point"] = point_json(line.closure_point);
    json ones = json::array();
    for (int i : line.fixed_one_indices) ones.push_back(names[static_cast<std::size_t>(i)]);
    e["unit_equations"] = ones;
    json free = json::array();
    for (int i : free_entries(line)) free.push_back(names[static_cast<std::size_t>(i)]);
    e["free_generators"] = free;
    e["sample_at_2"] = point_json(line_sample(m, line, Rat(2)));
    lines.push_back(e);
  }
  j["lines"] = lines;
  return j;
}

json zero_json(const MonoidStructure& m, const ZeroResult& z) {
  (void)m;
  json j;
  j["exists"] = z.exists;
  if (z.exists) {
    j["point"] = point_json(*z.point);
  } else {
    j["reason"] = zero_reason_text(z.reason);
  }
  return j;
}

json center_json(const MonoidStructure& m, const CenterDescription& c,
                 const std::vector<std::string>& names) {
  json j;
  j["trivial"] = c.trivial;
  if (c.trivial) return j;
  json vanish = json::array();
  for (int i : c.vanishing_indices) vanish.push_back(names[static_cast<std::size_t>(i)]);
  j["vanishing"] = vanish;
  json slice = json::array();
  for (const DualVector& u : c.slice_generators) slice.push_back(vec_json(u));
  j["slice_generators"] = slice;
  json eqs = json::array();
  for (const auto& [lhs, rhs] : c.binomials) {
    json e;
    e["lhs"] = vec_json(lhs);
    e["rhs"] = vec_json(rhs);
    e["text"] = monomial_text(m, names, lhs) + " = " + monomial_text(m, names, rhs);
    eqs.push_back(e);
  }
  j["equations"] = eqs;
  return j;
}

json verification_json(const MonoidStructure& m, const MonoidSpec& spec, const RunFlags& flags,
                       const Budget& budget) {
  json v;
  v["samples"] = flags.samples;
  v["seed"] = flags.seed;
  v["associativity"] = report_json(check_associativity(m, flags.samples, flags.seed));
  v["group_axioms"] = report_json(check_group_axioms(m, flags.samples, flags.seed));

  // Differential test whenever the monoid matches a known template.
  try {
    v["differential"] =
        report_json(differential_example_formulas(m, ExampleTemplate::affine_space, flags.samples,
                                                  flags.seed));
    v["differential"]["template"] = "affine_space";
  } catch (const TemplateMismatch&) {
    try {
      v["differential"] = report_json(differential_example_formulas(
          m, ExampleTemplate::quadratic_cone, flags.samples, flags.seed));
      v["differential"]["template"] = "quadratic_cone";
    } catch (const TemplateMismatch&) {
    }
  }

  std::vector<Rat> grid;
  if (flags.grid_csv) {
    grid = parse_rat_csv(*flags.grid_csv, "--grid");
  } else {
    grid = {Rat(0), Rat(1)};
  }
  std::vector<ToricPoint> found = grid_idempotents(m, grid, spec.budgets.degree_bound, budget);
  IdempotentSet idem = idempotents(m);
  // Two-way equivalence over the whole grid: a point is found by the scan
  // exactly when it lies on a classified component.
  bool matches = true;
  {
    const Eigen::Index total = m.basis().total();
    std::vector<std::size_t> odo(static_cast<std::size_t>(total), 0);
    while (true) {
      ToricPoint x;
      x.values = RatVec::Zero(total);
      for (Eigen::Index i = 0; i < total; ++i)
        x.values(i) = grid[odo[static_cast<std::size_t>(i)]];
      bool scanned = false;
      for (const ToricPoint& p : found)
        if (p == x) scanned = true;
      if (scanned != in_idempotent_set(m, idem, x)) matches = false;
      std::size_t pos = 0;
      while (pos < odo.size()) {
        if (++odo[pos] < grid.size()) break;
        odo[pos] = 0;
        ++pos;
      }
      if (pos == odo.size()) break;
    }
  }
  json g;
  json gv = json::array();
  for (const Rat& q : grid) gv.push_back(rat_to_string(q));
  g["values"] = gv;
  g["count"] = static_cast<long>(found.size());
  json pts = json::array();
  for (const ToricPoint& x : found) pts.push_back(point_json(x));
  g["points"] = pts;
  g["matches_classification"] = matches;
  v["grid_idempotents"] = g;
  return v;
}

}  // namespace

json run(const std::string& command, const MonoidSpec& spec, const RunFlags& flags) {
  static const std::vector<std::string> known = {"classify", "idempotents", "center", "zero",
                                                 "roots",    "multiply",    "verify", "report"};
  bool ok = false;
  for (const std::string& k : known) ok = ok || k == command;
  if (!ok) throw UsageError("unknown command '" + command + "'");

  Budget budget{flags.budget_override.value_or(spec.budgets.points)};
  MonoidSpec effective = spec;
  effective.budgets.points = budget.points;
  MonoidStructure m = build(effective);

  std::vector<std::string> warnings;
  std::vector<std::string> names = entry_names(spec, m.basis(), &warnings);

  json rep;
  rep["schema_version"] = "1";
  rep["command"] = command;
  {
    json v;
    v["dim"] = spec.dim;
    json rays = json::array();
    for (const LatticeVector& r : spec.rays) rays.push_back(vec_json(r));
    v["rays"] = rays;
    v["distinguished_ray"] = spec.distinguished_ray;
    v["e1"] = vec_json(spec.e1);
    v["e2"] = vec_json(spec.e2);
    v["warnings"] = warnings;
    rep["validation"] = v;
  }
  rep["cone"] = cone_json(m, names);

  const bool want_classify =
      command == "classify" || command == "report" || command == "idempotents" ||
      command == "center" || command == "zero";
  if (want_classify) {
    if (command != "center" && command != "zero")
      rep["idempotents"] = idempotents_json(m, idempotents(m), names);
    if (command != "idempotents" && command != "center") rep["zero"] = zero_json(m, zero(m));
    if (command != "idempotents" && command != "zero")
      rep["center"] = center_json(m, center_equations(m, 4, budget), names);
  }

  if (command == "roots") {
    long bound;
    if (flags.bound)
      bound = *flags.bound;
    else if (spec.budgets.root_bound)
      bound = *spec.budgets.root_bound;
    else
      throw UsageError("roots: --bound is required (the root set is infinite)");
    int ray = flags.ray.value_or(spec.distinguished_ray);
    json r;
    r["ray"] = ray;
    r["bound"] = bound;
    json roots = json::array();
    for (const DemazureRoot& root : enumerate_roots(m.cone(), ray, bound, budget))
      roots.push_back(vec_json(root.e));
    r["roots"] = roots;
    rep["roots"] = r;
  }

  if (command == "multiply") {
    if (!flags.x_csv || !flags.y_csv) throw UsageError("multiply: --x and --y are required");
    std::vector<Rat> xs = parse_rat_csv(*flags.x_csv, "--x");
    std::vector<Rat> ys = parse_rat_csv(*flags.y_csv, "--y");
    if (static_cast<Eigen::Index>(xs.size()) != m.basis().total() ||
        static_cast<Eigen::Index>(ys.size()) != m.basis().total())
      throw ValidationError("multiply: expected " + std::to_string(m.basis().total()) +
                            " values per point");
    ToricPoint x, y;
    x.values = RatVec::Zero(m.basis().total());
    y.values = RatVec::Zero(m.basis().total());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      x.values(static_cast<Eigen::Index>(i)) = xs[i];
      y.values(static_cast<Eigen::Index>(i)) = ys[i];
    }
    if (!validate(m, x, spec.budgets.degree_bound) || !validate(m, y, spec.budgets.degree_bound))
      throw InvalidPoint("multiply: input is not a point of the variety");
    json mj;
    mj["x"] = point_json(x);
    mj["y"] = point_json(y);
    mj["result"] = point_json(multiply(m, x, y));
    rep["multiply"] = mj;
  }

  if (command == "verify" || command == "report")
    rep["verification"] = verification_json(m, effective, flags, budget);

  return rep;
}

namespace {

std::string text_point(const json& arr) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) os << ", ";
    first = false;
    os << v.get<std::string>();
  }
  os << ")";
  return os.str();
}

std::string text_vec(const json& arr) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) os << ",";
    first = false;
    os << v.get<long>();
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string emit_report(const json& rep, const std::string& format) {
  if (format == "json") return rep.dump(2) + "\n";
  if (format != "text") throw UsageError("unknown format '" + format + "'");

  std::ostringstream os;
  os << "torimon report (schema " << rep["schema_version"].get<std::string>() << ", command "
     << rep["command"].get<std::string>() << ")\n";

  if (rep.contains("validation")) {
    const json& v = rep["validation"];
    os << "\nmonoid datum:\n";
    os << "  dim " << v["dim"].get<int>() << ", distinguished ray " << v["distinguished_ray"].get<int>()
       << "\n";
    os << "  e1 = " << text_vec(v["e1"]) << ", e2 = " << text_vec(v["e2"]) << "\n";
    for (const auto& w : v["warnings"]) os << "  warning: " << w.get<std::string>() << "\n";
  }
  if (rep.contains("cone")) {
    const json& c = rep["cone"];
    os << "\ncone:\n  hilbert basis:";
    const auto& names = c["generator_names"];
    for (std::size_t i = 0; i < c["hilbert_basis"].size(); ++i)
      os << " " << names[i].get<std::string>() << "=" << text_vec(c["hilbert_basis"][i]);
    os << "\n  faces: " << c["faces"].size() << "\n";
  }
  if (rep.contains("idempotents")) {
    const json& j = rep["idempotents"];
    os << "\nidempotents: " << (j["finite"].get<bool>() ? "finite" : "infinite");
    if (!j["count"].is_null()) os << ", count " << j["count"].get<long>();
    os << "\n";
    for (const auto& e : j["isolated"]) os << "  point " << text_point(e["point"]) << "\n";
    for (const auto& e : j["lines"]) {
      os << "  line: free";
      for (const auto& n : e["free_generators"]) os << " " << n.get<std::string>();
      os << ", unit constraints";
      if (e["unit_equations"].empty()) os << " none";
      for (const auto& n : e["unit_equations"]) os << " " << n.get<std::string>() << " = 1";
      os << ", closure point " << text_point(e["closure_point"]) << "\n";
    }
  }
  if (rep.contains("zero")) {
    const json& j = rep["zero"];
    if (j["exists"].get<bool>())
      os << "\nzero: " << text_point(j["point"]) << "\n";
    else
      os << "\nzero: none (" << j["reason"].get<std::string>() << ")\n";
  }
  if (rep.contains("center")) {
    const json& j = rep["center"];
    if (j["trivial"].get<bool>()) {
      os << "\ncenter: the whole monoid (e1 = e2)\n";
    } else {
      os << "\ncenter:";
      bool first = true;
      for (const auto& n : j["vanishing"]) {
        os << (first ? " " : ", ") << n.get<std::string>() << " = 0";
        first = false;
      }
      for (const auto& e : j["equations"]) {
        os << (first ? " " : ", ") << e["text"].get<std::string>();
        first = false;
      }
      os << "\n";
    }
  }
  if (rep.contains("roots")) {
    const json& j = rep["roots"];
    os << "\nroots of ray " << j["ray"].get<int>() << " with coordinates up to "
       << j["bound"].get<long>() << ":";
    for (const auto& r : j["roots"]) os << " " << text_vec(r);
    os << "\n";
  }
  if (rep.contains("multiply")) {
    const json& j = rep["multiply"];
    std::ostringstream flat;
    bool first = true;
    for (const auto& v : j["result"]) {
      if (!first) flat << ", ";
      first = false;
      flat << v.get<std::string>();
    }
    os << "\nproduct: " << flat.str() << "\n";
  }
  if (rep.contains("verification") && !rep["verification"].empty()) {
    const json& j = rep["verification"];
    os << "\nverification (samples " << j["samples"].get<int>() << ", seed "
       << j["seed"].get<std::uint64_t>() << "):\n";
    auto line = [&](const char* name, const json& r) {
      os << "  " << name << ": " << r["passed"].get<long>() << "/" << r["checked"].get<long>()
         << " passed\n";
      for (const auto& w : r["witnesses"]) os << "    witness: " << w.get<std::string>() << "\n";
    };
    line("associativity", j["associativity"]);
    line("group axioms", j["group_axioms"]);
    if (j.contains("differential")) line("differential", j["differential"]);
    const json& g = j["grid_idempotents"];
    os << "  grid idempotents: " << g["count"].get<long>() << " found, "
       << (g["matches_classification"].get<bool>() ? "matches" : "DISAGREES with")
       << " the classification\n";
  }
  return os.str();
}

}  // namespace torimon
