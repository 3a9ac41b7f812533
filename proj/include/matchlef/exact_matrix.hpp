#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchlef/numeric.hpp"

namespace matchlef {

/// Dense row-major matrix of exact rationals with a label per row and column
/// (the monomials or subsets that index each line).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  bool is_symmetric() const;
  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// Exact determinant by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix. Throws std::invalid_argument for non-square input.
Rational det_exact(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Indices of the pivot columns of the row echelon form, i.e. a maximal set of
/// linearly independent columns chosen greedily from the left.
std::vector<std::size_t> pivot_columns(const ExactMatrix& m);

/// Basis of the right null space, one primitive integer vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

/// {"rows":r,"cols":c,"row_labels":[..],"col_labels":[..],"entries":[["1","0"],..]}
nlohmann::ordered_json to_json(const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const nlohmann::ordered_json& j);

/// Header line of column labels (first cell blank), then one labelled row per line.
std::string to_csv(const ExactMatrix& m);

/// "[a b c]" per row, newline separated.
std::string to_text(const ExactMatrix& m);

}  // namespace matchlef
