#pragma once

#include "chowkit/graded_ideal.hpp"
#include "chowkit/poly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chowkit {

// Character matrix of a split-torus representation: one labeled row per
// coordinate line, one column per torus factor.  Rank zero encodes the
// trivial torus, which the projectivization builders accept.
struct WeightRow {
  std::string label;
  std::vector<long> weights;
};

class WeightMatrix {
public:
  WeightMatrix(std::size_t torus_rank, std::vector<WeightRow> rows);

  std::size_t torus_rank() const { return torus_rank_; }
  const std::vector<WeightRow>& rows() const { return rows_; }
  const WeightRow& row(std::string_view label) const;

private:
  std::size_t torus_rank_;
  std::vector<WeightRow> rows_;
};

// A graded ring given by generators and relations.
struct Presentation {
  RingPtr ring;
  GradedIdeal relations;
};

// Polynomial ring of a rank-r torus classifying space, one degree-1
// variable per factor.  Default variable names are T1..Tr.
RingPtr torus_ring(std::size_t rank, std::vector<std::string> names = {});

// CH of the classifying space of a rank-r torus: the free presentation
// Z[T1..Tr] with no relations.  Rejects rank 0.
Presentation chow_bt(std::size_t rank, std::vector<std::string> names = {});

// First Chern class of the line with the given character: the linear form
// sum_j weights[j] * ring variable j.  The ring must have one degree-1
// variable per weight.
Polynomial chern_form(const WeightRow& row, const RingPtr& ring);

// Equivariant Chow ring of the punctured representation A^n minus 0:
// Z[T1..Tr] modulo the product of the rows' Chern forms.
Presentation punctured_rep_presentation(const WeightMatrix& w,
                                        std::vector<std::string> names = {});

// Equivariant Chow ring of the projectivization of the representation with
// the extra scaling action h: Z[T1..Tr, h] modulo
// prod_i (gm_weights[i] * h + chern_form(row_i)).  The Gm weights must be
// positive and match the row count.
Presentation weighted_proj_presentation(const WeightMatrix& w,
                                        const std::vector<long>& gm_weights,
                                        std::vector<std::string> names = {});

// Sets the last variable, which must be named "h", to zero and re-expresses
// the result in the ring without it.
Polynomial specialize_h_zero(const Polynomial& f);

enum class Parity { even, odd };

Parity parity_of(long g);
std::string to_string(Parity p);

// Weight table of the rank-2 torus action on the space of binary forms
// f = sum a_i x0^(N-i) x1^i of degree N = 2g+2 together with the
// square root s of f(0,1), genus g >= 2.  Rows are labeled a0..aN and s.
//
// even g:  weight(a_i) = (i-g-2, g-i),   weight(s) = (g/2, -(g+2)/2)
// odd  g:  weight(a_i) = (-2, i-g-1),    weight(s) = (-1, (g+1)/2)
WeightMatrix action_weights(long g);

// Same table restricted to the coordinates of the standard chart, which
// eliminates a_N against the constraint f(0,1) = s^2.
WeightMatrix action_weights_xi_chart(long g);

// Checks 2 * weight(s) == weight(a_N), the compatibility forced by
// f(0,1) = s^2.  Expects the full table.
bool weight_table_consistent(const WeightMatrix& w);

} // namespace chowkit
