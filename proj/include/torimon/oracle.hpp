// Brute-force and differential verification of monoid structures:
// exhaustive idempotent grids, seeded axiom checks, and comparisons
// against closed-form example multiplication formulas. Everything is
// deterministic given (seed, budget).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torimon/classify.hpp"

namespace torimon {

struct OracleReport {
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::vector<std::string> witnesses;

  void note(bool ok, const std::string& witness_on_failure) {
    ++checked;
    if (ok) {
      ++passed;
    } else {
      ++failed;
      witnesses.push_back(witness_on_failure);
    }
  }
  bool clean() const { return failed == 0 && checked > 0; }
};

/// Deterministic sampler of small rationals: numerators in [-9, 9],
/// denominators in {1, 2, 3}.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64();
  long below(long n);  // uniform in [0, n)
  Rat any();           // may be zero
  Rat nonzero();
  RatVec nonzero_vec(Eigen::Index size);

 private:
  std::uint64_t state_;
};

/// All grid-valued assignments that are genuine points and satisfy
/// x * x == x, by exhaustive enumeration. The grid must contain 0 and 1.
std::vector<ToricPoint> grid_idempotents(const MonoidStructure& m, const std::vector<Rat>& values,
                                         int degree_bound = 6, const Budget& budget = {});

/// Exact associativity on seeded triples drawn from mixed strata: torus
/// points, orbit points of every face, and idempotent components.
OracleReport check_associativity(const MonoidStructure& m, int samples, std::uint64_t seed);

/// Inverse law, group-chart round trips, and agreement of multiply with
/// the semidirect product law on invertible points.
OracleReport check_group_axioms(const MonoidStructure& m, int samples, std::uint64_t seed);

enum class ExampleTemplate { affine_space, quadratic_cone };

/// Differential test of multiply against the closed coordinate formula of
/// the matching template; TemplateMismatch if the monoid does not fit.
OracleReport differential_example_formulas(const MonoidStructure& m, ExampleTemplate which,
                                           int samples, std::uint64_t seed);

}  // namespace torimon
