#include "chowkit/graded_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowkit {

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("ideal needs a ring");
  for (Polynomial& g : generators) {
    if (!same_ring(g.ring(), ring_)) {
      throw std::invalid_argument("generator lives in the wrong ring");
    }
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw std::invalid_argument("generator is not homogeneous: " +
                                  canonical_string(g));
    }
    generators_.push_back(std::move(g));
  }
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, long d) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");

  std::vector<Monomial> result;
  Monomial current{std::vector<unsigned>(ring.variable_count(), 0)};

  // Depth-first over exponent choices, largest exponent first per variable,
  // so the output comes out in descending graded-lex order directly.
  auto walk = [&](auto&& self, std::size_t var, long remaining) -> void {
    if (var == ring.variable_count()) {
      if (remaining == 0) result.push_back(current);
      return;
    }
    if (var + 1 == ring.variable_count()) {
      long w = ring.variable(var).degree;
      if (remaining % w == 0) {
        current.exponents[var] = static_cast<unsigned>(remaining / w);
        result.push_back(current);
        current.exponents[var] = 0;
      }
      return;
    }
    long w = ring.variable(var).degree;
    for (long e = remaining / w; e >= 0; --e) {
      current.exponents[var] = static_cast<unsigned>(e);
      self(self, var + 1, remaining - e * w);
    }
    current.exponents[var] = 0;
  };
  if (ring.variable_count() == 0) {
    if (d == 0) result.push_back(current);
    return result;
  }
  walk(walk, 0, d);
  return result;
}

namespace {

std::size_t basis_index(const std::vector<Monomial>& basis,
                        const Monomial& m) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == m) return i;
  }
  throw std::logic_error("monomial missing from the degree basis");
}

std::vector<mpz_class> coordinates(const Polynomial& f,
                                   const std::vector<Monomial>& basis) {
  std::vector<mpz_class> coords(basis.size());
  for (const Polynomial::Term& t : f.terms()) {
    coords[basis_index(basis, t.mono)] = t.coeff;
  }
  return coords;
}

} // namespace

DegreePiece degree_piece(const GradedIdeal& ideal, long d) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  const PolyRing& ring = *ideal.ring();

  DegreePiece piece;
  piece.degree = d;
  piece.basis = monomials_of_degree(ring, d);

  std::vector<std::vector<mpz_class>> rows;
  for (const Polynomial& g : ideal.generators()) {
    long gd = *g.homogeneous_degree();
    if (gd > d) continue;
    for (const Monomial& m : monomials_of_degree(ring, d - gd)) {
      Polynomial product =
          Polynomial::monomial(ideal.ring(), m, 1) * g;
      rows.push_back(coordinates(product, piece.basis));
    }
  }

  piece.lattice = IntMatrix(rows.size(), piece.basis.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < piece.basis.size(); ++j) {
      piece.lattice.at(i, j) = rows[i][j];
    }
  }
  return piece;
}

bool contains(const GradedIdeal& ideal, const Polynomial& f) {
  if (!same_ring(f.ring(), ideal.ring())) {
    throw std::invalid_argument("polynomial lives in the wrong ring");
  }
  if (f.is_zero()) return true;
  auto d = f.homogeneous_degree();
  if (!d) {
    throw std::invalid_argument("membership needs a homogeneous polynomial");
  }

  DegreePiece piece = degree_piece(ideal, *d);
  return lattice_contains(piece.lattice, coordinates(f, piece.basis));
}

std::vector<bool> equal_up_to(const GradedIdeal& a, const GradedIdeal& b,
                              long max_degree) {
  if (!same_ring(a.ring(), b.ring())) {
    throw std::invalid_argument("ideals live over different rings");
  }
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be non-negative");
  }

  std::vector<bool> result;
  result.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (long d = 0; d <= max_degree; ++d) {
    DegreePiece pa = degree_piece(a, d);
    DegreePiece pb = degree_piece(b, d);
    result.push_back(lattice_equal(pa.lattice, pb.lattice));
  }
  return result;
}

InvariantFactors invariant_factors(const GradedIdeal& ideal, long d) {
  DegreePiece piece = degree_piece(ideal, d);
  SmithDecomposition smith = snf(piece.lattice);

  InvariantFactors factors;
  factors.free_rank = static_cast<long>(piece.basis.size()) -
                      static_cast<long>(smith.diag.size());
  for (const mpz_class& f : smith.diag) {
    if (f > 1) factors.torsion.push_back(f);
  }
  return factors;
}

} // namespace chowkit
