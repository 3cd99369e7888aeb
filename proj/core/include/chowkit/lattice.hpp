#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace chowkit {

// Dense matrix over Z with arbitrary-precision entries, row major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<mpz_class> row(std::size_t i) const;
  bool row_is_zero(std::size_t i) const;

  void swap_rows(std::size_t i, std::size_t j);
  // row i -= q * row j
  void subtract_row_multiple(std::size_t i, std::size_t j, const mpz_class& q);
  void negate_row(std::size_t i);

  bool operator==(const IntMatrix& other) const;
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);

struct HermiteResult {
  IntMatrix h;          // row echelon, same row count as the input
  IntMatrix transform;  // unimodular, transform * input == h
};

// Row-style Hermite normal form: pivots positive and strictly to the right
// as rows descend, entries above each pivot reduced into [0, pivot),
// zero rows pushed to the bottom.  The transform is unimodular, so h spans
// the same row lattice as the input.
HermiteResult hnf_with_transform(const IntMatrix& a);

// Hermite normal form with zero rows removed: the canonical basis of the
// row lattice.  Two matrices span the same lattice iff their hnf()s match.
IntMatrix hnf(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix left;               // unimodular
  std::vector<mpz_class> diag;  // positive invariant factors, d1 | d2 | ...
  IntMatrix right;              // unimodular
};

// Smith normal form: left * a * right is diagonal with the returned
// invariant factors followed by zeros.  diag holds only the nonzero
// factors, so the zero matrix yields an empty diag.
SmithDecomposition snf(const IntMatrix& a);

// Expands a decomposition's diag back into a rows x cols diagonal matrix.
IntMatrix smith_diagonal(const SmithDecomposition& d, std::size_t rows,
                         std::size_t cols);

// Inverse of a unimodular matrix.  Throws std::invalid_argument when the
// matrix is not square with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& u);

// True when v lies in the lattice generated by the rows of a.
bool lattice_contains(const IntMatrix& a, const std::vector<mpz_class>& v);

// True when the rows of a and b generate the same lattice.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

} // namespace chowkit
