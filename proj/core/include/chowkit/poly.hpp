#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chowkit {

// A polynomial ring Z[x_1, ..., x_n] in which every variable carries a
// positive integer degree.  Rings compare by value: same variable names in
// the same order with the same degrees.
class PolyRing {
public:
  struct Variable {
    std::string name;
    long degree = 1;
  };

  explicit PolyRing(std::vector<Variable> variables);

  std::size_t variable_count() const { return variables_.size(); }
  const Variable& variable(std::size_t i) const { return variables_.at(i); }
  const std::vector<Variable>& variables() const { return variables_; }

  // Index of the variable with the given name, if present.
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const PolyRing& other) const;
  bool operator!=(const PolyRing& other) const { return !(*this == other); }

private:
  std::vector<Variable> variables_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<PolyRing::Variable> variables);

// True when the two handles denote the same ring, by identity or by value.
bool same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector, one entry per ring variable.
struct Monomial {
  std::vector<unsigned> exponents;

  bool operator==(const Monomial& other) const = default;
};

long weighted_degree(const Monomial& m, const PolyRing& ring);

// Graded lexicographic order: compare weighted degrees first, then exponent
// vectors lexicographically (earlier variables dominate).
bool graded_lex_less(const Monomial& a, const Monomial& b,
                     const PolyRing& ring);

// An element of a PolyRing with integer coefficients.  Terms are kept
// sorted in descending graded-lex order and never have zero coefficients,
// so equal polynomials have identical term vectors.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    mpz_class coeff;

    bool operator==(const Term& other) const = default;
  };

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, mpz_class value);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial variable(const RingPtr& ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial m, mpz_class coeff);

  // Normalizes: merges duplicate monomials, drops zero coefficients, sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  // Degree of a nonzero homogeneous polynomial; nullopt for zero or for a
  // mix of degrees.  Zero is homogeneous of every degree, so the predicate
  // overloads below accept it.
  std::optional<long> homogeneous_degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous_of_degree(long d) const;

  mpz_class coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const mpz_class& scalar);

  Polynomial pow(unsigned exponent) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(const mpz_class& scalar, Polynomial p);
Polynomial operator*(Polynomial p, const mpz_class& scalar);
Polynomial operator*(long scalar, const Polynomial& p);
Polynomial operator*(const Polynomial& p, long scalar);

// Graded ring homomorphism determined by variable images.  images[i] is the
// image of the i-th variable of f's ring and must be homogeneous over the
// target ring of the same weighted degree as that variable.  Throws
// std::invalid_argument when the image list is incomplete, lives in the
// wrong ring, or breaks the grading.
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images);

// Parses the canonical polynomial syntax: integer coefficients, '*' for
// products, '^' for powers, terms joined with '+' or '-'.  Accepts any
// term order and repeated monomials; the result is normalized.  Throws
// std::invalid_argument on unknown variables or malformed input.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Canonical rendering: terms in descending graded-lex order, " + " and
// " - " separators, unit coefficients omitted, "0" for zero.  Parsing the
// result reproduces the polynomial bit-exactly.
std::string canonical_string(const Polynomial& f);

} // namespace chowkit
