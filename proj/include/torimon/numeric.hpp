// Exact scalar types and dense containers used throughout torimon.
//
// All arithmetic is exact: lattice data lives in Eigen vectors/matrices of
// GMP integers, point coordinates are GMP rationals. Eigen is used purely
// as a dense container/expression layer; no floating point anywhere.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80
  };
};

}  // namespace Eigen

namespace torimon {

using Int = mpz_class;
using Rat = mpq_class;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVec = Vector<Int>;
using IntMat = DenseMatrix<Int>;
using RatVec = Vector<Rat>;
using RatMat = DenseMatrix<Rat>;

/// Element of the lattice N of one-parameter subgroups.
using LatticeVector = IntVec;
/// Element of the character lattice M = Hom(N, Z).
using DualVector = IntVec;

/// Canonical pairing N x M -> Z (coordinates are taken in dual bases).
inline Int pairing(const LatticeVector& v, const DualVector& u) { return v.dot(u); }

inline IntVec make_vec(std::initializer_list<long> cs) {
  IntVec v(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (long c : cs) v(i++) = Int(c);
  return v;
}

inline IntVec make_vec(const std::vector<long>& cs) {
  IntVec v(static_cast<Eigen::Index>(cs.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) v(static_cast<Eigen::Index>(i)) = Int(cs[i]);
  return v;
}

inline RatVec make_rat_vec(std::initializer_list<long> cs) {
  RatVec v(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (long c : cs) v(i++) = Rat(c);
  return v;
}

inline bool vec_eq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline bool vec_eq(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline bool is_zero(const IntVec& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) return false;
  return true;
}

/// Strict lexicographic order on integer vectors of equal length.
inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

inline Int l1_norm(const IntVec& a) {
  Int s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += abs(a(i));
  return s;
}

/// Canonical generator order: ascending L1 degree, ties broken by
/// descending lexicographic comparison. On the standard octant this lists
/// the unit vectors u_1, ..., u_n in coordinate order.
inline bool graded_lex_less(const IntVec& a, const IntVec& b) {
  Int da = l1_norm(a), db = l1_norm(b);
  if (da != db) return da < db;
  return lex_less(b, a);
}

struct IntVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

struct GradedLexLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return graded_lex_less(a, b); }
};

/// Exact power with integer exponent; requires base != 0 when e < 0.
Rat pow_rat(const Rat& base, const Int& e);

/// Binomial coefficient, exact.
Int binomial(unsigned long n, unsigned long k);

/// Exact k-th root in Q, when one exists (k >= 1).
std::optional<Rat> exact_root(const Rat& q, unsigned long k);

/// Canonicalized rational from a "p/q" or "p" string; throws ParseError on junk.
Rat parse_rat(const std::string& text);

/// Renders q as "p/q", or "p" when the denominator is one.
std::string rat_to_string(const Rat& q);

std::string vec_to_string(const IntVec& v);

/// Enumeration budget shared by all lattice-point scans. Exceeding it is a
/// hard ScaleLimit error, never a silent truncation.
struct Budget {
  std::int64_t points = 1'000'000;
};

}  // namespace torimon
