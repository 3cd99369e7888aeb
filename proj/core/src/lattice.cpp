#include "chowkit/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace chowkit {

namespace {

mpz_class fdiv_q(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const mpz_class& d, const mpz_class& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

} // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<mpz_class>>& rows) {
  if (rows.empty()) return IntMatrix();
  std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw std::invalid_argument("matrix rows have unequal lengths");
    }
  }
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<mpz_class> IntMatrix::row(std::size_t i) const {
  std::vector<mpz_class> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

bool IntMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (at(i, j) != 0) return false;
  }
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::subtract_row_multiple(std::size_t i, std::size_t j,
                                      const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

HermiteResult hnf_with_transform(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Gcd elimination on the column below pivot_row.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() ||
            cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0) {
          best = i;
        }
      }
      if (best == h.rows()) break;  // column already clear

      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      if (h.at(pivot_row, col) < 0) {
        h.negate_row(pivot_row);
        u.negate_row(pivot_row);
      }

      bool residue = false;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        mpz_class q = fdiv_q(h.at(i, col), h.at(pivot_row, col));
        h.subtract_row_multiple(i, pivot_row, q);
        u.subtract_row_multiple(i, pivot_row, q);
        if (h.at(i, col) != 0) residue = true;
      }
      if (!residue) break;
    }

    if (h.at(pivot_row, col) == 0) continue;  // no pivot in this column

    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      mpz_class q = fdiv_q(h.at(i, col), h.at(pivot_row, col));
      h.subtract_row_multiple(i, pivot_row, q);
      u.subtract_row_multiple(i, pivot_row, q);
    }
    ++pivot_row;
  }

  return HermiteResult{std::move(h), std::move(u)};
}

IntMatrix hnf(const IntMatrix& a) {
  IntMatrix h = hnf_with_transform(a).h;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (!h.row_is_zero(i)) ++rank;
  }
  IntMatrix basis(rank, h.cols());
  std::size_t out = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h.row_is_zero(i)) continue;
    for (std::size_t j = 0; j < h.cols(); ++j) basis.at(out, j) = h.at(i, j);
    ++out;
  }
  return basis;
}

namespace {

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

// col i -= q * col j
void subtract_col_multiple(IntMatrix& m, std::size_t i, std::size_t j,
                           const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, i) -= q * m.at(r, j);
}

// col t += col i
void add_col(IntMatrix& m, std::size_t t, std::size_t i) {
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, t) += m.at(r, i);
}

} // namespace

SmithDecomposition snf(const IntMatrix& a) {
  IntMatrix s = a;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());

  std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
      std::size_t bi = s.rows(), bj = s.cols();
      for (std::size_t i = t; i < s.rows(); ++i) {
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s.at(i, j) == 0) continue;
          if (bi == s.rows() ||
              cmp(abs(s.at(i, j)), abs(s.at(bi, bj))) < 0) {
            bi = i;
            bj = j;
          }
        }
      }
      return {bi, bj};
    };

    auto [pi, pj] = find_pivot();
    if (pi == s.rows()) break;  // trailing submatrix is zero

    while (true) {
      s.swap_rows(t, pi);
      left.swap_rows(t, pi);
      swap_cols(s, t, pj);
      swap_cols(right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        mpz_class q = fdiv_q(s.at(i, t), s.at(t, t));
        s.subtract_row_multiple(i, t, q);
        left.subtract_row_multiple(i, t, q);
        if (s.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        mpz_class q = fdiv_q(s.at(t, j), s.at(t, t));
        subtract_col_multiple(s, j, t, q);
        subtract_col_multiple(right, j, t, q);
        if (s.at(t, j) != 0) clean = false;
      }

      if (clean) {
        // Pivot must divide the whole trailing submatrix.
        bool fixed = true;
        for (std::size_t i = t + 1; i < s.rows() && fixed; ++i) {
          for (std::size_t j = t + 1; j < s.cols() && fixed; ++j) {
            if (!divides(s.at(t, t), s.at(i, j))) {
              s.subtract_row_multiple(t, i, mpz_class(-1));
              left.subtract_row_multiple(t, i, mpz_class(-1));
              fixed = false;
            }
          }
        }
        if (fixed) break;
      }

      std::tie(pi, pj) = find_pivot();
    }

    if (s.at(t, t) < 0) {
      s.negate_row(t);
      left.negate_row(t);
    }
  }

  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < n; ++t) {
    if (s.at(t, t) != 0) diag.push_back(s.at(t, t));
  }
  return SmithDecomposition{std::move(left), std::move(diag),
                            std::move(right)};
}

IntMatrix smith_diagonal(const SmithDecomposition& d, std::size_t rows,
                         std::size_t cols) {
  if (d.diag.size() > std::min(rows, cols)) {
    throw std::invalid_argument("diagonal longer than the matrix");
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.diag.size(); ++i) m.at(i, i) = d.diag[i];
  return m;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("unimodular_inverse needs a square matrix");
  }
  HermiteResult r = hnf_with_transform(u);
  if (r.h != IntMatrix::identity(u.rows())) {
    throw std::invalid_argument("matrix is not unimodular");
  }
  return r.transform;
}

bool lattice_contains(const IntMatrix& a, const std::vector<mpz_class>& v) {
  if (v.size() != a.cols()) {
    throw std::invalid_argument("vector length does not match the lattice");
  }
  IntMatrix basis = hnf(a);
  std::vector<mpz_class> rest = v;

  std::size_t row = 0;
  for (std::size_t col = 0; col < basis.cols() && row < basis.rows(); ++col) {
    if (basis.at(row, col) == 0) continue;  // not a pivot column
    if (rest[col] != 0) {
      if (!divides(basis.at(row, col), rest[col])) return false;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), rest[col].get_mpz_t(),
                   basis.at(row, col).get_mpz_t());
      for (std::size_t j = col; j < basis.cols(); ++j) {
        rest[j] -= q * basis.at(row, j);
      }
    }
    ++row;
  }
  for (const mpz_class& x : rest) {
    if (x != 0) return false;
  }
  return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument(
        "lattices live in different ambient dimensions");
  }
  return hnf(a) == hnf(b);
}

} // namespace chowkit
