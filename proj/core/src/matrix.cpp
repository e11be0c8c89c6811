// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/matrix.hpp"

#include <utility>

#include "wfano/error.hpp"

namespace wfano {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::string RationalMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += " / ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ' ';
      out += wfano::to_string((*this)(i, j));
    }
  }
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "minors of non-square matrix");
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix block(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    }
    out.push_back(determinant(block));
  }
  return out;
}

bool is_negative_definite(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw Error(Errc::NotSymmetric, "matrix is not symmetric");
  const auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const bool odd = (k % 2) == 0;  // minor of order k+1
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

}  // namespace wfano
