#include "chowkit/hyperelliptic.hpp"

#include <stdexcept>

namespace chowkit {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

void require_genus(long g) { require(g >= 2, "genus must be at least 2"); }

const RingPtr& cached(RingPtr& slot, std::vector<PolyRing::Variable> vars) {
  if (!slot) slot = make_ring(std::move(vars));
  return slot;
}

} // namespace

RingPtr even_source_ring() {
  static RingPtr ring;
  return cached(ring, {{"c1", 1}, {"c2", 2}});
}

RingPtr odd_source_ring() {
  static RingPtr ring;
  return cached(ring, {{"t", 1}, {"c2", 2}, {"c3", 3}});
}

RingPtr odd_full_source_ring() {
  static RingPtr ring;
  return cached(ring, {{"t", 1}, {"c1", 1}, {"c2", 2}, {"c3", 3}});
}

RingPtr even_target_ring() {
  static RingPtr ring;
  return cached(ring, {{"T0", 1}, {"T1", 1}});
}

RingPtr odd_target_ring() {
  static RingPtr ring;
  return cached(ring, {{"t", 1}, {"r", 1}});
}

HgPresentation hg_presentation(long g) {
  require_genus(g);
  mpz_class gg(g);

  if (g % 2 == 0) {
    RingPtr ring = even_source_ring();
    Polynomial c1 = Polynomial::variable(ring, "c1");
    Polynomial c2 = Polynomial::variable(ring, "c2");

    std::vector<Polynomial> gens;
    gens.push_back(mpz_class(2 * (2 * g + 1)) * c1);
    gens.push_back(gg * (gg - 1) * c1 * c1 - 4 * gg * (gg + 1) * c2);
    return HgPresentation{Parity::even, g, ring,
                          GradedIdeal(ring, std::move(gens)), ""};
  }

  RingPtr ring = odd_source_ring();
  Polynomial t = Polynomial::variable(ring, "t");
  Polynomial c2 = Polynomial::variable(ring, "c2");
  Polynomial c3 = Polynomial::variable(ring, "c3");

  std::vector<Polynomial> gens;
  gens.push_back(mpz_class(4 * (2 * g + 1)) * t);
  gens.push_back(8 * t * t - 2 * (gg * gg - 1) * c2);
  gens.push_back(2 * c3);
  return HgPresentation{
      Parity::odd, g, ring, GradedIdeal(ring, std::move(gens)),
      "ambient is Z[t,c1,c2,c3]/(c1, 2*c3): c1 is eliminated up front "
      "and 2*c3 is carried inside the relation ideal"};
}

Polynomial pullback_even(const Polynomial& f) {
  require(same_ring(f.ring(), even_source_ring()),
          "pullback_even expects a polynomial in Z[c1,c2]");
  require(f.is_homogeneous(), "pullback_even expects homogeneous input");

  RingPtr target = even_target_ring();
  Polynomial t0 = Polynomial::variable(target, "T0");
  Polynomial t1 = Polynomial::variable(target, "T1");
  return substitute(f, target, {t0 + t1, t0 * t1});
}

Polynomial pullback_odd(const Polynomial& f) {
  require(f.is_homogeneous(), "pullback_odd expects homogeneous input");

  RingPtr target = odd_target_ring();
  Polynomial t = Polynomial::variable(target, "t");
  Polynomial r = Polynomial::variable(target, "r");
  Polynomial zero1 = Polynomial::zero(target);
  Polynomial mc2 = -(r * r);

  if (same_ring(f.ring(), odd_source_ring())) {
    return substitute(f, target, {t, mc2, zero1});
  }
  if (same_ring(f.ring(), odd_full_source_ring())) {
    return substitute(f, target, {t, zero1, mc2, Polynomial::zero(target)});
  }
  throw std::invalid_argument(
      "pullback_odd expects a polynomial in Z[t,c2,c3] or Z[t,c1,c2,c3]");
}

GradedIdeal image_ideal(long g) {
  require_genus(g);
  HgPresentation hg = hg_presentation(g);

  std::vector<Polynomial> images;
  for (const Polynomial& gen : hg.J.generators()) {
    Polynomial image = hg.parity == Parity::even ? pullback_even(gen)
                                                 : pullback_odd(gen);
    if (!image.is_zero()) images.push_back(std::move(image));
  }
  RingPtr target =
      hg.parity == Parity::even ? even_target_ring() : odd_target_ring();
  return GradedIdeal(target, std::move(images));
}

Presentation stated_presentation(long g) {
  require_genus(g);
  mpz_class gg(g);

  if (g % 2 == 0) {
    RingPtr ring = even_target_ring();
    Polynomial t0 = Polynomial::variable(ring, "T0");
    Polynomial t1 = Polynomial::variable(ring, "T1");

    std::vector<Polynomial> gens;
    gens.push_back(mpz_class(2 * (2 * g + 1)) * (t0 + t1));
    gens.push_back(gg * (gg - 1) * (t0 * t0 + t1 * t1) -
                   2 * gg * (gg + 3) * t0 * t1);
    return Presentation{ring, GradedIdeal(ring, std::move(gens))};
  }

  require(g >= 3, "the odd-genus statement needs g >= 3");
  RingPtr ring = odd_target_ring();
  Polynomial t = Polynomial::variable(ring, "t");
  Polynomial r = Polynomial::variable(ring, "r");

  std::vector<Polynomial> gens;
  gens.push_back(mpz_class(4 * (2 * g + 1)) * t);
  gens.push_back(8 * t * t + 2 * gg * (gg + 1) * r * r);
  return Presentation{ring, GradedIdeal(ring, std::move(gens))};
}

VerificationReport verify(long g, long max_degree) {
  require_genus(g);
  require(max_degree >= 4, "max_degree must be at least 4");

  GradedIdeal image = image_ideal(g);
  Presentation stated = stated_presentation(g);

  VerificationReport report;
  report.g = g;
  report.parity = parity_of(g);
  report.max_degree = max_degree;
  report.char_hypothesis = "char(k) > 2g";
  for (const Polynomial& gen : image.generators()) {
    report.image_generators.push_back(canonical_string(gen));
  }
  for (const Polynomial& gen : stated.relations.generators()) {
    report.stated_generators.push_back(canonical_string(gen));
  }

  for (long d = 0; d <= max_degree; ++d) {
    DegreePiece pi = degree_piece(image, d);
    DegreePiece ps = degree_piece(stated.relations, d);

    DegreeComparison comparison;
    comparison.degree = d;
    comparison.equal = lattice_equal(pi.lattice, ps.lattice);
    comparison.image_factors = invariant_factors(image, d);
    comparison.stated_factors = invariant_factors(stated.relations, d);
    if (!comparison.equal && !report.first_discrepancy) {
      report.first_discrepancy = d;
    }
    report.per_degree.push_back(std::move(comparison));
  }
  return report;
}

bool even_identity_check(long g_max) {
  require(g_max >= 2, "g_max must be at least 2");
  for (long g = 2; g <= g_max; g += 2) {
    HgPresentation hg = hg_presentation(g);
    Presentation target = stated_presentation(g);
    const auto& stated = target.relations.generators();
    const auto& source = hg.J.generators();
    if (source.size() != stated.size()) return false;
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (pullback_even(source[i]) != stated[i]) return false;
    }
  }
  return true;
}

} // namespace chowkit
