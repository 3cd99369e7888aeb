#pragma once

#include "chowkit/equivariant.hpp"
#include "chowkit/graded_ideal.hpp"
#include "chowkit/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chowkit {

// Input presentation of the Chow ring of the genus-g hyperelliptic locus:
// an ambient polynomial ring and the relation ideal J, with coefficients
// computed exactly from g.
//
// even g:  ambient Z[c1,c2] (degrees 1,2),
//          J = (2(2g+1)c1, g(g-1)c1^2 - 4g(g+1)c2)
// odd  g:  ambient Z[t,c2,c3] (degrees 1,2,3),
//          J = (4(2g+1)t, 8t^2 - 2(g^2-1)c2, 2c3)
//
// For odd g the variable c1 of the underlying ring Z[t,c1,c2,c3]/(c1, 2c3)
// is eliminated up front and the relation 2c3 is carried inside J;
// ambient_note records this.
struct HgPresentation {
  Parity parity;
  long g = 0;
  RingPtr ambient;
  GradedIdeal J;
  std::string ambient_note;
};

HgPresentation hg_presentation(long g);

RingPtr even_source_ring();      // Z[c1,c2], degrees 1,2
RingPtr odd_source_ring();       // Z[t,c2,c3], degrees 1,2,3
RingPtr odd_full_source_ring();  // Z[t,c1,c2,c3], degrees 1,1,2,3
RingPtr even_target_ring();      // Z[T0,T1]
RingPtr odd_target_ring();       // Z[t,r]

// Restriction to the diagonal torus: c1 -> T0+T1, c2 -> T0*T1.
// Input must be homogeneous in Z[c1,c2].
Polynomial pullback_even(const Polynomial& f);

// Restriction along the adjoint eigenvalue splitting:
// t -> t, c1 -> 0, c2 -> -r^2, c3 -> 0.  Input must be homogeneous in
// Z[t,c2,c3] or Z[t,c1,c2,c3].
Polynomial pullback_odd(const Polynomial& f);

// Ideal generated by the nonzero pullbacks of J's generators, inside
// Z[T0,T1] (even g) or Z[t,r] (odd g).
GradedIdeal image_ideal(long g);

// The target presentation with coefficients computed from g:
//
// even g >= 2:  Z[T0,T1] / (2(2g+1)(T0+T1),
//                           g(g-1)(T0^2+T1^2) - 2g(g+3)T0T1)
// odd  g >= 3:  Z[t,r] / (4(2g+1)t, 8t^2 + 2g(g+1)r^2)
Presentation stated_presentation(long g);

struct DegreeComparison {
  long degree = 0;
  bool equal = false;
  InvariantFactors image_factors;
  InvariantFactors stated_factors;
};

// Degree-by-degree comparison of the ideal generated by the pulled-back
// relations against the stated target ideal.  per_degree covers 0..max_degree;
// first_discrepancy is the smallest unequal degree, if any.  The comparison
// is computed, never assumed, and identical inputs produce identical
// reports.
struct VerificationReport {
  long g = 0;
  Parity parity = Parity::even;
  std::vector<std::string> image_generators;
  std::vector<std::string> stated_generators;
  long max_degree = 0;
  std::vector<DegreeComparison> per_degree;
  std::optional<long> first_discrepancy;
  std::string char_hypothesis;
};

VerificationReport verify(long g, long max_degree);

// Strong form of the even-genus comparison: for every even g <= g_max the
// pulled-back generators equal the stated generators term for term.
bool even_identity_check(long g_max);

} // namespace chowkit
