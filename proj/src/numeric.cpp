#include "torimon/numeric.hpp"

#include <sstream>

#include "torimon/errors.hpp"

namespace torimon {

Rat pow_rat(const Rat& base, const Int& e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw ZeroValue("pow_rat: zero base with negative exponent");
    return Rat(0);
  }
  Int n = abs(e);
  if (!n.fits_ulong_p()) throw ScaleLimit("pow_rat: exponent out of range");
  unsigned long k = n.get_ui();
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), k);
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::optional<Rat> exact_root(const Rat& q, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return q;
  if (q == 0) return Rat(0);
  bool negative = q < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  Int num = abs(q.get_num()), den = q.get_den();
  Int rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k);
  int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k);
  if (!exact_n || !exact_d) return std::nullopt;
  Rat r(negative ? Int(-rn) : rn, rd);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty rational literal");
  s = s.substr(b, e - b + 1);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rat(n);
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v(i);
  }
  os << ")";
  return os.str();
}

}  // namespace torimon
