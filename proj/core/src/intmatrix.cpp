#include "modpic/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace modpic {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::domain_error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::domain_error("matrix dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw std::domain_error("det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  return os.str();
}

namespace {

struct SnfWork {
  IntMatrix m, u, v, vinv;

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    for (std::size_t j = 0; j < vinv.cols(); ++j) std::swap(vinv.at(a, j), vinv.at(b, j));
  }
  // row a -= q * row b
  void row_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
  }
  // col a -= q * col b
  void col_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
    // inverse op on vinv: row b += q * row a
    for (std::size_t j = 0; j < vinv.cols(); ++j) vinv.at(b, j) += q * vinv.at(a, j);
  }
  void row_negate(std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
};

// nearest-integer quotient so remainders shrink fast
Int round_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  Int b2 = abs_int(b);
  if (2 * abs_int(r) > b2) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& in) {
  SnfWork w{in, IntMatrix::identity(in.rows()), IntMatrix::identity(in.cols()),
            IntMatrix::identity(in.cols())};
  const std::size_t r = in.rows(), c = in.cols();
  const std::size_t n = std::min(r, c);

  for (std::size_t t = 0; t < n; ++t) {
    // entry-minimizing pivot in the trailing block
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        Int a = abs_int(w.m.at(i, j));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (w.m.at(i, t) == 0) continue;
        Int q = round_div(w.m.at(i, t), w.m.at(t, t));
        w.row_sub(i, t, q);
        if (w.m.at(i, t) != 0) {
          w.row_swap(t, i);  // smaller remainder becomes the pivot
          again = true;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (w.m.at(t, j) == 0) continue;
        Int q = round_div(w.m.at(t, j), w.m.at(t, t));
        w.col_sub(j, t, q);
        if (w.m.at(t, j) != 0) {
          w.col_swap(t, j);
          again = true;
        }
      }
    }
    if (w.m.at(t, t) < 0) w.row_negate(t);
  }

  // enforce d_i | d_{i+1}: fold the offender into column i and re-reduce
  bool chain_ok = false;
  while (!chain_ok) {
    chain_ok = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Int a = w.m.at(i, i);
      const Int b = w.m.at(i + 1, i + 1);
      if (a == 0 && b != 0) {
        // zeros sort to the end
        w.row_swap(i, i + 1);
        w.col_swap(i, i + 1);
        chain_ok = false;
        continue;
      }
      if (a == 0 || b == 0) continue;
      if (b % a == 0) continue;
      chain_ok = false;
      // col i += col i+1, then clear the 2x2 block with gcd steps
      w.col_sub(i, i + 1, Int(-1));
      while (w.m.at(i + 1, i) != 0 || w.m.at(i, i + 1) != 0) {
        if (w.m.at(i + 1, i) != 0) {
          Int q = round_div(w.m.at(i + 1, i), w.m.at(i, i));
          w.row_sub(i + 1, i, q);
          if (w.m.at(i + 1, i) != 0) w.row_swap(i, i + 1);
        }
        if (w.m.at(i, i + 1) != 0) {
          Int q = round_div(w.m.at(i, i + 1), w.m.at(i, i));
          w.col_sub(i + 1, i, q);
          if (w.m.at(i, i + 1) != 0) w.col_swap(i, i + 1);
        }
      }
      if (w.m.at(i, i) < 0) w.row_negate(i);
      if (w.m.at(i + 1, i + 1) < 0) w.row_negate(i + 1);
    }
  }

  return SnfResult{w.u, w.m, w.v, w.vinv};
}

}  // namespace modpic
