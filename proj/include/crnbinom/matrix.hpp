#pragma once

#include "crnbinom/polynomial.hpp"
#include "crnbinom/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crnbinom {

/// Dense matrix of exact rationals with row and column labels carried
/// through structural operations.
class RationalMatrix {
public:
  RationalMatrix() = default;

  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)),
        row_labels_(rows), col_labels_(cols) {}

  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> row_labels,
                 std::vector<std::string> col_labels)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)),
        row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    if (row_labels_.size() != rows_ || col_labels_.size() != cols_) {
      throw std::invalid_argument("RationalMatrix: label counts must match dimensions");
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return data_[r * cols_ + c];
  }
  Rational& at(std::size_t r, std::size_t c) {
    check(r, c);
    return data_[r * cols_ + c];
  }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_row_label(std::size_t r, std::string s) { row_labels_.at(r) = std::move(s); }
  void set_col_label(std::size_t c, std::string s) { col_labels_.at(c) = std::move(s); }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_, col_labels_, row_labels_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    }
    return t;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix: index out of range");
  }

  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<Rational> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::size_t rank{0};
  std::vector<std::size_t> pivot_cols;  // ascending; one per nonzero row
};

/// Gauss-Jordan reduction to reduced row echelon form. Columns are scanned
/// left to right; within a column the pivot is the first nonzero entry at
/// or below the current row. Pivots are normalized to 1 and their columns
/// fully cleared, so nonzero rows come first and zero rows last. Labels are
/// kept positionally (columns still name the same generators).
inline RrefResult rref(const RationalMatrix& input) {
  RrefResult res{input, 0, {}};
  RationalMatrix& m = res.matrix;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(lead, c));
    }
    Rational inv = m.at(lead, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(lead, c) /= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, col) == 0) continue;
      Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(lead, c);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

/// Horizontal concatenation [A | B]. Requires equal row counts and equal
/// row labels; column labels are concatenated.
inline RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
  if (a.row_labels() != b.row_labels()) throw std::invalid_argument("hstack: row labels differ");
  std::vector<std::string> cols = a.col_labels();
  cols.insert(cols.end(), b.col_labels().begin(), b.col_labels().end());
  RationalMatrix out(a.rows(), a.cols() + b.cols(), a.row_labels(), std::move(cols));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
  }
  return out;
}

/// Column indices of the nonzero entries in one row, ascending.
inline std::vector<std::size_t> row_support(const RationalMatrix& m, std::size_t row) {
  if (row >= m.rows()) throw std::out_of_range("row_support: row out of range");
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.at(row, c) != 0) out.push_back(c);
  }
  return out;
}

/// For each nonzero row i of an RREF, the polynomial
///   sum_j R[i][j] * basis[j].
/// The basis must have one polynomial per column.
inline std::vector<Polynomial> combine(const RrefResult& r, const std::vector<Polynomial>& basis) {
  if (basis.size() != r.matrix.cols()) {
    throw std::invalid_argument("combine: basis size must match column count");
  }
  std::vector<Polynomial> out;
  out.reserve(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) {
    Polynomial acc;
    for (std::size_t j = 0; j < r.matrix.cols(); ++j) {
      const Rational& c = r.matrix.at(i, j);
      if (c != 0) acc += basis[j].scaled(c);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// Plain text rendering with labels, entries as exact fractions.
inline std::string render(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1,
                                              std::vector<std::string>(m.cols() + 1));
  for (std::size_t c = 0; c < m.cols(); ++c) cells[0][c + 1] = m.col_labels()[c];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cells[r + 1][0] = m.row_labels()[r];
    for (std::size_t c = 0; c < m.cols(); ++c) cells[r + 1][c + 1] = to_string(m.at(r, c));
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += std::string(width[c] - row[c].size(), ' ') + row[c];
      out += (c + 1 == row.size()) ? "" : "  ";
    }
    out += "\n";
  }
  return out;
}

}  // namespace crnbinom
