#include "flopcalc/gf2matrix.hpp"

#include <stdexcept>

namespace flopcalc {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<bool>>& rows, std::size_t cols) {
  GF2Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

GF2Matrix GF2Matrix::from_columns(const std::vector<std::vector<bool>>& columns, std::size_t rows) {
  GF2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("GF2Matrix: column has the wrong length");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c][r]) m.set(r, c, true);
    }
  }
  return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("GF2Matrix::set");
  std::uint64_t& w = data_[r * words_ + (c >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (c & 63);
  w = v ? (w | bit) : (w & ~bit);
}

std::vector<bool> GF2Matrix::row(std::size_t r) const {
  std::vector<bool> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
  return out;
}

std::vector<bool> GF2Matrix::column(std::size_t c) const {
  std::vector<bool> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = get(r, c);
  return out;
}

void GF2Matrix::append_row(const std::vector<bool>& v) {
  if (v.size() != cols_) throw std::invalid_argument("GF2Matrix: row has the wrong length");
  data_.resize(data_.size() + words_, 0);
  ++rows_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c]) set(rows_ - 1, c, true);
  }
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("GF2Matrix: dimension mismatch in product");
  GF2Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a.get(r, k)) continue;
      for (std::size_t w = 0; w < b.words_; ++w) out.data_[r * out.words_ + w] ^= b.data_[k * b.words_ + w];
    }
  }
  return out;
}

void GF2Matrix::xor_row(std::size_t dst, std::size_t src) {
  for (std::size_t w = 0; w < words_; ++w) data_[dst * words_ + w] ^= data_[src * words_ + w];
}

void GF2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < words_; ++w) std::swap(data_[a * words_ + w], data_[b * words_ + w]);
}

std::vector<std::size_t> GF2Matrix::eliminate() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t p = lead;
    while (p < rows_ && !get(p, c)) ++p;
    if (p == rows_) continue;
    swap_rows(lead, p);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != lead && get(r, c)) xor_row(r, lead);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t GF2Matrix::rank() const {
  GF2Matrix m = *this;
  return m.eliminate().size();
}

GF2Matrix GF2Matrix::row_basis() const {
  GF2Matrix m = *this;
  const std::size_t r = m.eliminate().size();
  m.rows_ = r;
  m.data_.resize(r * m.words_);
  return m;
}

GF2Matrix GF2Matrix::null_space() const {
  GF2Matrix m = *this;
  const auto pivots = m.eliminate();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  GF2Matrix basis(0, cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<bool> v(cols_, false);
    v[f] = true;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (m.get(i, f)) v[pivots[i]] = true;
    }
    basis.append_row(v);
  }
  return basis;
}

bool GF2Matrix::row_space_equals(const GF2Matrix& other) const {
  if (cols_ != other.cols_) return false;
  return row_basis() == other.row_basis();
}

bool GF2Matrix::row_space_contains(const std::vector<bool>& v) const {
  GF2Matrix m = *this;
  const std::size_t before = m.rank();
  m.append_row(v);
  return m.rank() == before;
}

bool GF2Matrix::column_space_contains(const std::vector<bool>& v) const {
  if (v.size() != rows_) throw std::invalid_argument("GF2Matrix: vector has the wrong length");
  return transpose().row_space_contains(v);
}

bool GF2Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

std::string GF2Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

GF2Matrix vstack(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  GF2Matrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

}  // namespace flopcalc
