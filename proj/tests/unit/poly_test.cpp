#include "chowkit/poly.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace chowkit;

namespace {

RingPtr t_ring() { return make_ring({{"T0", 1}, {"T1", 1}}); }
RingPtr c_ring() { return make_ring({{"c1", 1}, {"c2", 2}}); }

Polynomial parse(const char* text, const RingPtr& ring) {
  return parse_polynomial(text, ring);
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("ring construction validates variables") {
  CHECK_THROWS_AS(PolyRing({{"x", 1}, {"x", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyRing({{"", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyRing({{"x", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyRing({{"x", -2}}), std::invalid_argument);

  RingPtr ring = c_ring();
  CHECK(ring->variable_count() == 2);
  CHECK(ring->variable(1).degree == 2);
  CHECK(ring->index_of("c2") == 1);
  CHECK(!ring->index_of("c3").has_value());
}

TEST_CASE("rings compare by value") {
  CHECK(same_ring(t_ring(), t_ring()));
  CHECK(!same_ring(t_ring(), c_ring()));
  CHECK(!same_ring(make_ring({{"x", 1}}), make_ring({{"x", 2}})));
}

TEST_CASE("addition") {
  RingPtr ring = t_ring();
  Polynomial t0 = Polynomial::variable(ring, "T0");
  Polynomial t1 = Polynomial::variable(ring, "T1");

  CHECK((t0 + t1) + (t0 - t1) == 2 * t0);
  CHECK(parse("T0 + T1", ring) + Polynomial::zero(ring) ==
        parse("T0 + T1", ring));
  CHECK(parse("2*T0^2 - 20*T0*T1 + 2*T1^2", ring) + parse("20*T0*T1", ring) ==
        parse("2*T0^2 + 2*T1^2", ring));

  CHECK_THROWS_AS(t0 + Polynomial::variable(c_ring(), "c1"),
                  std::invalid_argument);
}

TEST_CASE("multiplication") {
  RingPtr ring = t_ring();
  Polynomial t0 = Polynomial::variable(ring, "T0");
  Polynomial t1 = Polynomial::variable(ring, "T1");

  CHECK((t0 + t1) * (t0 + t1) == parse("T0^2 + 2*T0*T1 + T1^2", ring));
  Polynomial f = parse("3*T0^2 - T1^2", ring);
  CHECK(f * Polynomial::constant(ring, 1) == f);
  CHECK(f * Polynomial::zero(ring) == Polynomial::zero(ring));

  RingPtr hr = make_ring({{"h", 1}});
  Polynomial h = Polynomial::variable(hr, "h");
  CHECK(h * (2 * h) == parse("2*h^2", hr));

  CHECK_THROWS_AS(t0 * Polynomial::variable(c_ring(), "c1"),
                  std::invalid_argument);
}

TEST_CASE("homogeneity bookkeeping") {
  RingPtr ring = c_ring();
  Polynomial c1 = Polynomial::variable(ring, "c1");
  Polynomial c2 = Polynomial::variable(ring, "c2");

  CHECK(c1 * c1 == parse("c1^2", ring));
  CHECK((c1 * c1).homogeneous_degree() == 2);
  CHECK(c2.homogeneous_degree() == 2);
  CHECK((c1 * c1 - 4 * c2).homogeneous_degree() == 2);
  CHECK(!(c1 + c2).homogeneous_degree().has_value());
  CHECK(!(c1 + c2).is_homogeneous());

  Polynomial zero = Polynomial::zero(ring);
  CHECK(zero.is_homogeneous());
  CHECK(zero.is_homogeneous_of_degree(0));
  CHECK(zero.is_homogeneous_of_degree(5));
  CHECK(!zero.homogeneous_degree().has_value());
}

TEST_CASE("product of homogeneous inputs adds degrees") {
  RingPtr ring = c_ring();
  std::mt19937_64 rng(2026);
  for (int k = 0; k < 100; ++k) {
    long da = std::uniform_int_distribution<long>(0, 4)(rng);
    long db = std::uniform_int_distribution<long>(0, 4)(rng);
    Polynomial f = oracle::random_homogeneous(ring, da, rng);
    Polynomial g = oracle::random_homogeneous(ring, db, rng);
    Polynomial p = f * g;
    if (p.is_zero()) continue;
    CHECK(p.homogeneous_degree() == da + db);
  }
}

TEST_CASE("substitute matches hand expansion") {
  RingPtr source = c_ring();
  RingPtr target = t_ring();
  Polynomial t0 = Polynomial::variable(target, "T0");
  Polynomial t1 = Polynomial::variable(target, "T1");

  Polynomial f = parse("c1^2 - 4*c2", source);
  CHECK(substitute(f, target, {t0 + t1, t0 * t1}) ==
        parse("T0^2 - 2*T0*T1 + T1^2", target));
}

TEST_CASE("substitute identity") {
  RingPtr ring = c_ring();
  Polynomial f = parse("3*c1^3 - 2*c1*c2 + 7*c2", ring);
  CHECK(substitute(f, ring,
                   {Polynomial::variable(ring, "c1"),
                    Polynomial::variable(ring, "c2")}) == f);
}

TEST_CASE("substitute odd pullback example") {
  RingPtr source = make_ring({{"t", 1}, {"c2", 2}, {"c3", 3}});
  RingPtr target = make_ring({{"t", 1}, {"r", 1}});
  Polynomial t = Polynomial::variable(target, "t");
  Polynomial r = Polynomial::variable(target, "r");

  // 8t^2 - 2(g^2-1)c2 at g=3 under c2 -> -r^2
  Polynomial f = parse("8*t^2 - 16*c2", source);
  Polynomial image = substitute(
      f, target, {t, -(r * r), Polynomial::zero(target)});
  CHECK(image == parse("8*t^2 + 16*r^2", target));
}

TEST_CASE("substitute validates images") {
  RingPtr source = c_ring();
  RingPtr target = t_ring();
  Polynomial t0 = Polynomial::variable(target, "T0");
  Polynomial t1 = Polynomial::variable(target, "T1");
  Polynomial f = parse("c1 + c2", source);

  CHECK_THROWS_AS(substitute(f, target, {t0 + t1}), std::invalid_argument);
  CHECK_THROWS_AS(substitute(f, target,
                             {Polynomial::variable(c_ring(), "c1"), t0 * t1}),
                  std::invalid_argument);
  // image of c1 mixes degrees 1 and 2
  CHECK_THROWS_AS(substitute(f, target, {t0 + t0 * t1, t0 * t1}),
                  std::invalid_argument);
  // image of c2 has degree 1, not 2
  CHECK_THROWS_AS(substitute(f, target, {t0, t1}), std::invalid_argument);
  // zero is homogeneous of every degree, so these images are legal
  CHECK(substitute(f, target,
                   {Polynomial::zero(target), Polynomial::zero(target)}) ==
        Polynomial::zero(target));
}

TEST_CASE("substitute is a ring homomorphism") {
  RingPtr source = c_ring();
  RingPtr target = t_ring();
  Polynomial t0 = Polynomial::variable(target, "T0");
  Polynomial t1 = Polynomial::variable(target, "T1");
  std::vector<Polynomial> images = {t0 + t1, t0 * t1};

  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    Polynomial f = oracle::random_polynomial(source, rng);
    Polynomial g = oracle::random_polynomial(source, rng);
    CHECK(substitute(f + g, target, images) ==
          substitute(f, target, images) + substitute(g, target, images));
    CHECK(substitute(f * g, target, images) ==
          substitute(f, target, images) * substitute(g, target, images));
  }
}

TEST_CASE("substitute preserves the grading") {
  RingPtr source = c_ring();
  RingPtr target = t_ring();
  Polynomial t0 = Polynomial::variable(target, "T0");
  Polynomial t1 = Polynomial::variable(target, "T1");
  std::vector<Polynomial> images = {t0 + t1, t0 * t1};

  std::mt19937_64 rng(100);
  for (int k = 0; k < 100; ++k) {
    long d = std::uniform_int_distribution<long>(0, 6)(rng);
    Polynomial f = oracle::random_homogeneous(source, d, rng);
    if (f.is_zero()) continue;
    Polynomial image = substitute(f, target, images);
    if (image.is_zero()) continue;
    CHECK(image.homogeneous_degree() == d);
  }
}

TEST_CASE("canonical strings") {
  RingPtr ring = t_ring();
  CHECK(canonical_string(parse("2*T0^2 - 20*T0*T1 + 2*T1^2", ring)) ==
        "2*T0^2 - 20*T0*T1 + 2*T1^2");
  CHECK(canonical_string(parse("T1 + T0", ring)) == "T0 + T1");
  CHECK(canonical_string(parse("0", ring)) == "0");
  CHECK(parse("0", ring).is_zero());
  CHECK(canonical_string(parse("-T0 - 3*T1", ring)) == "-T0 - 3*T1");
  CHECK(canonical_string(parse("7", ring)) == "7");
  CHECK(canonical_string(parse("T0^0", ring)) == "1");
  CHECK(canonical_string(parse("T1*T0", ring)) == "T0*T1");
  CHECK(canonical_string(parse("T0*2*T0", ring)) == "2*T0^2");
  // same degree sorts descending lexicographically, lower degree last
  CHECK(canonical_string(parse("T1^2 + T0*T1 + T0^2 + T0", ring)) ==
        "T0^2 + T0*T1 + T1^2 + T0");
}

TEST_CASE("weighted degrees order the terms") {
  RingPtr ring = c_ring();
  // c2 has weighted degree 2, so it outranks c1 but not c1^2
  CHECK(canonical_string(parse("c1 + c2 + c1^2", ring)) ==
        "c1^2 + c2 + c1");
}

TEST_CASE("parse rejects malformed input") {
  RingPtr ring = t_ring();
  CHECK_THROWS_AS(parse("T2", ring), std::invalid_argument);
  CHECK_THROWS_AS(parse("", ring), std::invalid_argument);
  CHECK_THROWS_AS(parse("T0 + + T1", ring), std::invalid_argument);
  CHECK_THROWS_AS(parse("+T0", ring), std::invalid_argument);
  CHECK_THROWS_AS(parse("2*^3", ring), std::invalid_argument);
  CHECK_THROWS_AS(parse("T0^", ring), std::invalid_argument);
  CHECK_THROWS_AS(parse("T0^-1", ring), std::invalid_argument);
  CHECK_THROWS_AS(parse("T0 T1", ring), std::invalid_argument);
  CHECK_THROWS_AS(parse("3*", ring), std::invalid_argument);
}

TEST_CASE("serialization round-trips") {
  RingPtr rings[] = {t_ring(), c_ring(),
                     make_ring({{"t", 1}, {"c2", 2}, {"c3", 3}})};
  std::mt19937_64 rng(7);
  for (const RingPtr& ring : rings) {
    for (int k = 0; k < 200; ++k) {
      Polynomial f = oracle::random_polynomial(ring, rng, 4, 99, 6);
      CHECK(parse_polynomial(canonical_string(f), ring) == f);
    }
  }
}

TEST_CASE("coefficients stay exact far beyond 64 bits") {
  RingPtr ring = t_ring();
  Polynomial f = parse("100000000000*T0 + 1*T1", ring);
  Polynomial p = f.pow(6);
  // leading coefficient is 10^66
  mpz_class expected("1000000000000000000000000000000000000000000000000"
                     "000000000000000000");
  Monomial lead{{6, 0}};
  CHECK(p.coefficient(lead) == expected);
  CHECK(parse_polynomial(canonical_string(p), ring) == p);
}

} // TEST_SUITE
