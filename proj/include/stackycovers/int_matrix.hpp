#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stackycovers/bigint.hpp"

namespace stacky {

// Dense matrix of arbitrary-precision integers, row-major. Carrier for
// character-lattice bases and the maps between them. All operations are
// exact.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const;
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[a] += c * row[b]
  void add_row_multiple(std::size_t a, std::size_t b, const Int& c);
  // col[a] += c * col[b]
  void add_col_multiple(std::size_t a, std::size_t b, const Int& c);
  void negate_row(std::size_t a);

  IntMatrix column(std::size_t j) const;
  Int max_abs_entry() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

// Smith normal form of A: left * A * right is diagonal with each entry
// dividing the next nonzero one; left and right are unimodular.
struct SmithForm {
  std::vector<Int> diagonal;  // length min(rows, cols), nonnegative
  IntMatrix left;             // rows x rows
  IntMatrix right;            // cols x cols

  std::size_t rank() const;
  Int diagonal_product() const;  // product over nonzero entries
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Exact determinant by fraction-free (Bareiss) elimination. Square only.
Int det_bareiss(const IntMatrix& a);

// Integer basis of { v : a v = 0 }, returned as columns. May have zero
// columns when the kernel is trivial.
IntMatrix kernel_basis(const IntMatrix& a);

// Columns of b must span a full-rank lattice; solves b x = v over the
// integers, nullopt when v is not an integer combination (including when
// v is outside the rational span).
std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& b,
                                                 const std::vector<Int>& v);

// Index [ambient : sub] where both are given by columns. Returns nullopt
// ("infinite") when the sublattice has deficient rank. Throws
// MembershipError when a sub column is not an integer combination of the
// ambient columns.
std::optional<Int> lattice_index(const IntMatrix& sub, const IntMatrix& ambient);

// Column-style Hermite reduction for 2-row generator sets. Result has
// shape [[h00, 0], [h10, h11]] (full rank), a single column (rank 1), or
// zero columns. h00, h11 > 0 and 0 <= h10 < h11 when full rank.
IntMatrix hnf2_columns(const IntMatrix& gens);

}  // namespace stacky
