// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wfano/rational.hpp"

namespace wfano {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Rows separated by " / ", entries by spaces: "-7/24 3/8 / 3/8 -5/8".
  std::string to_string() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by Gaussian elimination. Throws Error(DimensionMismatch)
/// for non-square input.
Rational determinant(const RationalMatrix& m);

/// Determinants of the top-left k x k blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Sylvester: the k-th leading minor has sign (-1)^k. Throws
/// Error(NotSymmetric) for non-symmetric input.
bool is_negative_definite(const RationalMatrix& m);

}  // namespace wfano
