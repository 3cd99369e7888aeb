#include "chowkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chowkit {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

} // namespace

PolyRing::PolyRing(std::vector<Variable> variables)
    : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    require(!variables_[i].name.empty(), "ring variable needs a name");
    require(variables_[i].degree >= 1,
            "ring variable " + variables_[i].name +
                " needs a positive degree");
    for (std::size_t j = 0; j < i; ++j) {
      require(variables_[j].name != variables_[i].name,
              "duplicate ring variable " + variables_[i].name);
    }
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

bool PolyRing::operator==(const PolyRing& other) const {
  if (variables_.size() != other.variables_.size()) return false;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name != other.variables_[i].name ||
        variables_[i].degree != other.variables_[i].degree) {
      return false;
    }
  }
  return true;
}

RingPtr make_ring(std::vector<PolyRing::Variable> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

long weighted_degree(const Monomial& m, const PolyRing& ring) {
  long degree = 0;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    degree += static_cast<long>(m.exponents[i]) * ring.variable(i).degree;
  }
  return degree;
}

bool graded_lex_less(const Monomial& a, const Monomial& b,
                     const PolyRing& ring) {
  long da = weighted_degree(a, ring);
  long db = weighted_degree(b, ring);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.exponents.begin(), a.exponents.end(),
                                      b.exponents.begin(), b.exponents.end());
}

namespace {

void check_monomial(const Monomial& m, const PolyRing& ring) {
  require(m.exponents.size() == ring.variable_count(),
          "monomial exponent count does not match the ring");
}

} // namespace

Polynomial Polynomial::zero(RingPtr ring) {
  require(ring != nullptr, "polynomial needs a ring");
  return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, mpz_class value) {
  require(ring != nullptr, "polynomial needs a ring");
  if (value == 0) return Polynomial(std::move(ring), {});
  Monomial one{std::vector<unsigned>(ring->variable_count(), 0)};
  std::vector<Term> terms;
  terms.push_back(Term{std::move(one), std::move(value)});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  require(ring != nullptr, "polynomial needs a ring");
  require(index < ring->variable_count(), "variable index out of range");
  Monomial m{std::vector<unsigned>(ring->variable_count(), 0)};
  m.exponents[index] = 1;
  std::vector<Term> terms;
  terms.push_back(Term{std::move(m), mpz_class(1)});
  return Polynomial(ring, std::move(terms));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::string_view name) {
  require(ring != nullptr, "polynomial needs a ring");
  auto index = ring->index_of(name);
  require(index.has_value(),
          "ring has no variable named " + std::string(name));
  return variable(ring, *index);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, mpz_class coeff) {
  require(ring != nullptr, "polynomial needs a ring");
  check_monomial(m, *ring);
  if (coeff == 0) return Polynomial(std::move(ring), {});
  std::vector<Term> terms;
  terms.push_back(Term{std::move(m), std::move(coeff)});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  require(ring != nullptr, "polynomial needs a ring");
  for (const Term& t : terms) check_monomial(t.mono, *ring);

  auto descending = [&ring](const Term& a, const Term& b) {
    return graded_lex_less(b.mono, a.mono, *ring);
  };
  std::stable_sort(terms.begin(), terms.end(), descending);

  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return Polynomial(std::move(ring), std::move(merged));
}

std::optional<long> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  long degree = weighted_degree(terms_.front().mono, *ring_);
  for (const Term& t : terms_) {
    if (weighted_degree(t.mono, *ring_) != degree) return std::nullopt;
  }
  return degree;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || homogeneous_degree().has_value();
}

bool Polynomial::is_homogeneous_of_degree(long d) const {
  if (terms_.empty()) return true;
  auto degree = homogeneous_degree();
  return degree.has_value() && *degree == d;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  check_monomial(m, *ring_);
  for (const Term& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> terms = terms_;
  for (Term& t : terms) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(terms));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require(same_ring(ring_, other.ring_),
          "cannot add polynomials over different rings");

  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[j];
    if (a.mono == b.mono) {
      mpz_class sum = a.coeff + b.coeff;
      if (sum != 0) merged.push_back(Term{a.mono, std::move(sum)});
      ++i;
      ++j;
    } else if (graded_lex_less(b.mono, a.mono, *ring_)) {
      merged.push_back(a);
      ++i;
    } else {
      merged.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) merged.push_back(other.terms_[j]);

  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  return *this += -other;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  require(same_ring(ring_, other.ring_),
          "cannot multiply polynomials over different rings");

  auto ascending = [this](const Monomial& a, const Monomial& b) {
    return graded_lex_less(a, b, *ring_);
  };
  std::map<Monomial, mpz_class, decltype(ascending)> products(ascending);
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      Monomial m{a.mono.exponents};
      for (std::size_t k = 0; k < m.exponents.size(); ++k) {
        m.exponents[k] += b.mono.exponents[k];
      }
      products[std::move(m)] += a.coeff * b.coeff;
    }
  }

  std::vector<Term> terms;
  terms.reserve(products.size());
  for (auto it = products.rbegin(); it != products.rend(); ++it) {
    if (it->second != 0) terms.push_back(Term{it->first, it->second});
  }
  terms_ = std::move(terms);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= scalar;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  for (unsigned k = 0; k < exponent; ++k) result *= *this;
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
  lhs += rhs;
  return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial result = lhs;
  result *= rhs;
  return result;
}

Polynomial operator*(const mpz_class& scalar, Polynomial p) {
  p *= scalar;
  return p;
}

Polynomial operator*(Polynomial p, const mpz_class& scalar) {
  p *= scalar;
  return p;
}

Polynomial operator*(long scalar, const Polynomial& p) {
  return mpz_class(scalar) * p;
}

Polynomial operator*(const Polynomial& p, long scalar) {
  return mpz_class(scalar) * p;
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images) {
  require(target != nullptr, "substitute needs a target ring");
  const PolyRing& source = *f.ring();
  require(images.size() == source.variable_count(),
          "substitute needs one image per source variable");
  for (std::size_t i = 0; i < images.size(); ++i) {
    require(same_ring(images[i].ring(), target),
            "image of " + source.variable(i).name +
                " lives in the wrong ring");
    require(images[i].is_homogeneous_of_degree(source.variable(i).degree),
            "image of " + source.variable(i).name +
                " is not homogeneous of degree " +
                std::to_string(source.variable(i).degree));
  }

  // Power cache per variable; exponents in this code base stay small.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial result = Polynomial::zero(target);
  for (const Polynomial::Term& t : f.terms()) {
    Polynomial value = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.exponents.size(); ++i) {
      if (t.mono.exponents[i] > 0) value *= power(i, t.mono.exponents[i]);
    }
    result += value;
  }
  return result;
}

namespace {

// Tokenizer for the canonical syntax.  Identifiers may contain any
// non-reserved printable characters so that variable names such as "T0"
// or multi-byte UTF-8 names work unchanged.
struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  static bool reserved(char c) {
    return c == '+' || c == '-' || c == '*' || c == '^' ||
           std::isspace(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  std::optional<mpz_class> integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) return std::nullopt;
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  std::optional<std::string> identifier() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && !reserved(text[pos])) ++pos;
    if (pos == start) return std::nullopt;
    // Digits may appear inside a name ("T0") but not start one.
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return std::string(text.substr(start, pos - start));
  }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  require(ring != nullptr, "parse_polynomial needs a ring");
  Lexer lex{text};
  std::vector<Polynomial::Term> terms;

  bool first = true;
  while (true) {
    if (lex.at_end()) {
      require(!first, "empty polynomial text");
      break;
    }

    int sign = 1;
    if (lex.consume('-')) {
      sign = -1;
    } else if (lex.consume('+')) {
      require(!first, "polynomial text starts with '+'");
    } else {
      require(first, "expected '+' or '-' between terms near position " +
                         std::to_string(lex.pos));
    }
    first = false;

    mpz_class coeff = sign;
    Monomial mono{std::vector<unsigned>(ring->variable_count(), 0)};

    // term := factor ('*' factor)*, so a factor is mandatory here, both
    // after the sign and after every '*'.
    while (true) {
      if (auto value = lex.integer()) {
        coeff *= *value;
      } else if (auto name = lex.identifier()) {
        auto index = ring->index_of(*name);
        require(index.has_value(), "unknown variable " + *name);
        unsigned long exponent = 1;
        if (lex.consume('^')) {
          auto e = lex.integer();
          require(e.has_value(), "expected an exponent after '^'");
          require(e->fits_ulong_p() != 0 && e->get_ui() <= 1u << 20,
                  "exponent too large");
          exponent = e->get_ui();
        }
        require(mono.exponents[*index] <=
                    std::numeric_limits<unsigned>::max() - exponent,
                "exponent too large");
        mono.exponents[*index] += static_cast<unsigned>(exponent);
      } else {
        require(false, "expected a coefficient or variable near position " +
                           std::to_string(lex.pos));
      }
      if (!lex.consume('*')) break;
    }

    terms.push_back(Polynomial::Term{std::move(mono), std::move(coeff)});
  }

  return Polynomial::from_terms(ring, std::move(terms));
}

std::string canonical_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolyRing& ring = *f.ring();

  std::ostringstream out;
  bool first = true;
  for (const Polynomial::Term& t : f.terms()) {
    mpz_class magnitude = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }

    bool constant_term = true;
    for (unsigned e : t.mono.exponents) {
      if (e > 0) constant_term = false;
    }

    bool need_star = false;
    if (magnitude != 1 || constant_term) {
      out << magnitude.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.mono.exponents.size(); ++i) {
      unsigned e = t.mono.exponents[i];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << ring.variable(i).name;
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

} // namespace chowkit
