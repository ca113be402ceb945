#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flopcalc {

/// Dense bit-packed matrix over GF(2), row-major with 64 columns per word.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  static GF2Matrix identity(std::size_t n);
  static GF2Matrix from_rows(const std::vector<std::vector<bool>>& rows, std::size_t cols);
  static GF2Matrix from_columns(const std::vector<std::vector<bool>>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return (data_[r * words_ + (c >> 6)] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v);
  std::vector<bool> row(std::size_t r) const;
  std::vector<bool> column(std::size_t c) const;
  void append_row(const std::vector<bool>& v);

  GF2Matrix transpose() const;
  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::size_t rank() const;
  /// Reduced row echelon form with the zero rows dropped: the canonical
  /// basis of the row space.
  GF2Matrix row_basis() const;
  /// Rows form a basis of {x : A x = 0}.
  GF2Matrix null_space() const;
  /// Rows form a basis of {y : y^T A = 0}.
  GF2Matrix left_kernel() const { return transpose().null_space(); }

  bool row_space_equals(const GF2Matrix& other) const;
  bool row_space_contains(const std::vector<bool>& v) const;
  bool column_space_contains(const std::vector<bool>& v) const;
  bool is_identity() const;

  /// One line per row of '0'/'1' characters.
  std::string to_string() const;

 private:
  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  // Gauss-Jordan in place; returns the pivot column of each leading row.
  std::vector<std::size_t> eliminate();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

GF2Matrix vstack(const GF2Matrix& a, const GF2Matrix& b);

}  // namespace flopcalc
