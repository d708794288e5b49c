#include "cliffrep/rational_matrix.hpp"

#include "cliffrep/errors.hpp"

#include <utility>

namespace cliffrep {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::vector<Rational>> m(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    m[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);

  std::size_t rank = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows_) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      factor = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols_; ++j) {
        if (sgn(m[rank][j]) != 0) m[r][j] -= factor * m[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a.at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b.at(k, j)) != 0) out.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return out;
}

}  // namespace cliffrep
