#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modpic/bigint.hpp"

namespace modpic {

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const;

  Int det() const;  // Bareiss, square matrices
  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

struct SnfResult {
  IntMatrix u;     // rows x rows, unimodular
  IntMatrix d;     // diagonal, d1 | d2 | ..., nonnegative
  IntMatrix v;     // cols x cols, unimodular
  IntMatrix vinv;  // v^{ -1 }
};

// U * M * V = D with U, V unimodular and the divisibility chain on the
// diagonal. Pivots are chosen entry-minimizing to limit coefficient growth.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace modpic
