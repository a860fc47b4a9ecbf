#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bredonk/exactlinalg/integer.hpp"

namespace bredonk {

/// Dense row-major matrix of arbitrary-precision integers. Zero rows or zero
/// columns are legal and describe maps into or out of the zero module.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  /// Builds from nested rows; every row must have the same length.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  /// Diagonal of `diag` placed on a rows × cols zero matrix.
  static IntMatrix padded_diagonal(std::size_t rows, std::size_t cols,
                                   std::span<const Integer> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Integer> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix scaled(const Integer& k) const;

  /// Copies `block` into this matrix with its top-left corner at (r0, c0),
  /// adding to whatever is already there.
  void add_block(std::size_t r0, std::size_t c0, const IntMatrix& block,
                 const Integer& coefficient = 1);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

}  // namespace bredonk
