#pragma once

#include "chowkit/lattice.hpp"
#include "chowkit/poly.hpp"

#include <vector>

namespace chowkit {

// Homogeneous ideal in a graded polynomial ring, given by a finite list of
// homogeneous generators.  Zero generators are dropped on construction;
// inhomogeneous ones are rejected.
class GradedIdeal {
public:
  GradedIdeal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

// All monomials of the ring with the given weighted degree, in descending
// graded-lex order.  Degree 0 yields the constant monomial only.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, long d);

// The degree-d slice of an ideal: the lattice inside the free Z-module on
// monomials_of_degree spanned by all products m * g with g a generator and
// m a monomial of complementary degree.  Vector coordinates follow the
// basis order.
struct DegreePiece {
  long degree = 0;
  std::vector<Monomial> basis;
  IntMatrix lattice;  // one spanning row per product, before reduction
};

DegreePiece degree_piece(const GradedIdeal& ideal, long d);

// Rank and torsion of a finitely generated abelian group, the torsion part
// listed as its invariant factors > 1 in divisibility order.
struct InvariantFactors {
  long free_rank = 0;
  std::vector<mpz_class> torsion;

  bool operator==(const InvariantFactors& other) const = default;
};

// Membership of a homogeneous polynomial in the ideal, decided inside the
// degree slice of f.  Zero belongs to every ideal; inhomogeneous input is
// rejected.
bool contains(const GradedIdeal& ideal, const Polynomial& f);

// Degreewise comparison of two ideals over the same ring: entry d says
// whether the degree-d slices agree as lattices, for d = 0 .. max_degree.
std::vector<bool> equal_up_to(const GradedIdeal& a, const GradedIdeal& b,
                              long max_degree);

// Invariant factors of the degree-d piece of the quotient ring/ideal.
InvariantFactors invariant_factors(const GradedIdeal& ideal, long d);

} // namespace chowkit
