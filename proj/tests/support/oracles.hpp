#pragma once

#include "chowkit/equivariant.hpp"
#include "chowkit/graded_ideal.hpp"
#include "chowkit/lattice.hpp"
#include "chowkit/poly.hpp"

#include <random>
#include <vector>

// Independent re-implementations used to cross-check the library.  Each
// one deliberately takes a different code path from the function it tests.
namespace oracle {

// Membership by exhaustive search over integer combinations of the rows
// with coefficients in [-bound, bound].  Plain long arithmetic: entries and
// bounds must stay small.  Returns true only when a combination is found,
// so it underapproximates membership unless bound is large enough for the
// instance size.
bool brute_force_contains(const std::vector<std::vector<long>>& rows,
                          const std::vector<long>& v, long bound);

// Invariant factors from gcds of k x k minors: with d_k = gcd of all
// k-minors (d_0 = 1), the k-th factor is d_k / d_(k-1), stopping at the
// first k with d_k = 0.
std::vector<mpz_class> minors_gcd_invariants(const chowkit::IntMatrix& a);

// Weight table recomputed by acting on a generic binary form: the
// character of each coefficient is accumulated from the prefactor and the
// per-variable scale factors, term by term, instead of using the closed
// row formulas; the character of s is halved from the one of a_N, which
// f(0,1) = s^2 forces.
chowkit::WeightMatrix expanded_action_weights(long g);

// Rewrites a generating set by ideal-preserving moves: swaps, sign flips,
// adding c * m * gens[j] to gens[i] with deg-matching monomial m, and
// appending redundant monomial multiples.  The returned set generates the
// same homogeneous ideal.
std::vector<chowkit::Polynomial> recombine_generators(
    const std::vector<chowkit::Polynomial>& gens, std::mt19937_64& rng,
    int ops);

// Random polynomial with small exponents and coefficients; may be zero.
chowkit::Polynomial random_polynomial(const chowkit::RingPtr& ring,
                                      std::mt19937_64& rng,
                                      unsigned max_exponent = 3,
                                      long max_coeff = 9, int max_terms = 5);

// Random homogeneous polynomial of the given weighted degree (zero when
// the degree has no monomials).
chowkit::Polynomial random_homogeneous(const chowkit::RingPtr& ring,
                                       long degree, std::mt19937_64& rng,
                                       long max_coeff = 9);

} // namespace oracle
