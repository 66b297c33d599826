#include "torimon/linalg.hpp"

#include <cassert>

#include "torimon/errors.hpp"

namespace torimon {

Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

void make_primitive(IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd_int(g, v(i));
  if (g > 1) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  }
}

bool is_primitive(const IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd_int(g, v(i));
  return g == 1;
}

long rank_of(const IntMat& a) {
  RatMat m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
  long rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        Rat f = m(r, col) / m(row, col);
        for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

long rank_of_rows(const std::vector<IntVec>& rows, Eigen::Index dim) {
  IntMat a(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return rank_of(a);
}

IntMat column_hermite(const IntMat& a, IntMat* u_out) {
  IntMat h = a;
  const Eigen::Index rows = h.rows(), cols = h.cols();
  IntMat u = IntMat::Identity(cols, cols);

  Eigen::Index pivot_col = 0;
  for (Eigen::Index row = 0; row < rows && pivot_col < cols; ++row) {
    // Euclidean reduction across columns pivot_col..cols-1 on this row.
    while (true) {
      Eigen::Index nz = -1;
      for (Eigen::Index c = pivot_col; c < cols; ++c) {
        if (h(row, c) != 0 && (nz < 0 || abs(h(row, c)) < abs(h(row, nz)))) nz = c;
      }
      if (nz < 0) break;  // row is zero on the working columns
      h.col(pivot_col).swap(h.col(nz));
      u.col(pivot_col).swap(u.col(nz));
      bool done = true;
      for (Eigen::Index c = pivot_col + 1; c < cols; ++c) {
        if (h(row, c) != 0) {
          Int q = h(row, c) / h(row, pivot_col);  // truncated division is fine here
          h.col(c) -= q * h.col(pivot_col);
          u.col(c) -= q * u.col(pivot_col);
          if (h(row, c) != 0) done = false;
        }
      }
      if (done) break;
    }
    if (h(row, pivot_col) != 0) {
      if (h(row, pivot_col) < 0) {
        h.col(pivot_col) = -h.col(pivot_col);
        u.col(pivot_col) = -u.col(pivot_col);
      }
      // Reduce earlier pivot columns against this one (upper reduction).
      for (Eigen::Index c = 0; c < pivot_col; ++c) {
        if (h(row, c) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), h(row, c).get_mpz_t(), h(row, pivot_col).get_mpz_t());
          if (q != 0) {
            h.col(c) -= q * h.col(pivot_col);
            u.col(c) -= q * u.col(pivot_col);
          }
        }
      }
      ++pivot_col;
    }
  }
  if (u_out) *u_out = u;
  return h;
}

IntMat integer_kernel(const IntMat& a) {
  IntMat u;
  IntMat h = column_hermite(a, &u);
  std::vector<Eigen::Index> zero_cols;
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    bool zero = true;
    for (Eigen::Index r = 0; r < h.rows(); ++r)
      if (h(r, c) != 0) {
        zero = false;
        break;
      }
    if (zero) zero_cols.push_back(c);
  }
  IntMat k(a.cols(), static_cast<Eigen::Index>(zero_cols.size()));
  for (std::size_t i = 0; i < zero_cols.size(); ++i) k.col(static_cast<Eigen::Index>(i)) = u.col(zero_cols[i]);
  if (k.cols() == 0) return k;
  // Canonicalize: present the kernel lattice by Hermite-reduced rows.
  IntMat rows = row_hermite(k.transpose());
  return rows.transpose();
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve_integer: size mismatch");
  IntMat u;
  IntMat h = column_hermite(a, &u);
  // h is in column echelon form; solve h * y = b by walking pivot rows.
  IntVec y = IntVec::Zero(h.cols());
  IntVec r = b;
  Eigen::Index col = 0;
  for (Eigen::Index row = 0; row < h.rows(); ++row) {
    if (col < h.cols() && h(row, col) != 0) {
      Int q = r(row) / h(row, col);
      if (q * h(row, col) != r(row)) return std::nullopt;  // non-integral
      y(col) = q;
      r -= q * h.col(col);
      ++col;
    } else if (r(row) != 0) {
      return std::nullopt;  // inconsistent
    }
  }
  for (Eigen::Index row = 0; row < h.rows(); ++row)
    if (r(row) != 0) return std::nullopt;
  IntVec x = u.leftCols(h.cols()) * y;
  return x;
}

IntMat row_hermite(const IntMat& a) {
  IntMat m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    while (true) {
      Eigen::Index nz = -1;
      for (Eigen::Index r = pivot_row; r < rows; ++r) {
        if (m(r, col) != 0 && (nz < 0 || abs(m(r, col)) < abs(m(nz, col)))) nz = r;
      }
      if (nz < 0) break;
      m.row(pivot_row).swap(m.row(nz));
      bool done = true;
      for (Eigen::Index r = pivot_row + 1; r < rows; ++r) {
        if (m(r, col) != 0) {
          Int q = m(r, col) / m(pivot_row, col);
          m.row(r) -= q * m.row(pivot_row);
          if (m(r, col) != 0) done = false;
        }
      }
      if (done) break;
    }
    if (pivot_row < rows && m(pivot_row, col) != 0) {
      if (m(pivot_row, col) < 0) m.row(pivot_row) = -m.row(pivot_row);
      for (Eigen::Index r = 0; r < pivot_row; ++r) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, col).get_mpz_t(), m(pivot_row, col).get_mpz_t());
        if (q != 0) m.row(r) -= q * m.row(pivot_row);
      }
      ++pivot_row;
    }
  }
  return m.topRows(pivot_row);
}

IntMat complete_saturated_basis(const IntMat& l, Eigen::Index n) {
  if (l.cols() == 0) return IntMat::Identity(n, n);
  IntMat h = column_hermite(l);
  std::vector<bool> pivot_rows(static_cast<std::size_t>(n), false);
  Eigen::Index col = 0;
  for (Eigen::Index row = 0; row < h.rows() && col < h.cols(); ++row) {
    if (h(row, col) != 0) {
      assert(h(row, col) == 1 && "sublattice must be saturated");
      pivot_rows[static_cast<std::size_t>(row)] = true;
      ++col;
    }
  }
  IntMat w(n, n - col);
  Eigen::Index wc = 0;
  for (Eigen::Index row = 0; row < n; ++row) {
    if (!pivot_rows[static_cast<std::size_t>(row)]) {
      w.col(wc) = IntVec::Zero(n);
      w(row, wc) = 1;
      ++wc;
    }
  }
  return w;
}

Int determinant(const IntMat& a) {
  assert(a.rows() == a.cols());
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      m.row(k).swap(m.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

IntMat adjugate(const IntMat& a) {
  assert(a.rows() == a.cols());
  const Eigen::Index n = a.rows();
  IntMat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMat minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::Index mr = 0;
      for (Eigen::Index r = 0; r < n; ++r) {
        if (r == i) continue;
        Eigen::Index mc = 0;
        for (Eigen::Index c = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc) = a(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;  // transpose of cofactor matrix
    }
  }
  return adj;
}

}  // namespace torimon
