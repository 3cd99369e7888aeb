#include "chowkit/equivariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowkit {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::vector<std::string> default_names(std::size_t rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t i = 1; i <= rank; ++i) {
    names.push_back("T" + std::to_string(i));
  }
  return names;
}

// Linear form with the given coefficients over the leading variables.
Polynomial linear_form(const RingPtr& ring, const std::vector<long>& coeffs) {
  Polynomial form = Polynomial::zero(ring);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    form += mpz_class(coeffs[j]) * Polynomial::variable(ring, j);
  }
  return form;
}

} // namespace

WeightMatrix::WeightMatrix(std::size_t torus_rank, std::vector<WeightRow> rows)
    : torus_rank_(torus_rank), rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    require(!rows_[i].label.empty(), "weight row needs a label");
    require(rows_[i].weights.size() == torus_rank_,
            "weight row " + rows_[i].label + " has the wrong length");
    for (std::size_t j = 0; j < i; ++j) {
      require(rows_[j].label != rows_[i].label,
              "duplicate weight row label " + rows_[i].label);
    }
  }
}

const WeightRow& WeightMatrix::row(std::string_view label) const {
  for (const WeightRow& r : rows_) {
    if (r.label == label) return r;
  }
  throw std::invalid_argument("no weight row labeled " + std::string(label));
}

RingPtr torus_ring(std::size_t rank, std::vector<std::string> names) {
  if (names.empty()) names = default_names(rank);
  require(names.size() == rank, "need one variable name per torus factor");
  std::vector<PolyRing::Variable> variables;
  variables.reserve(rank);
  for (std::string& n : names) {
    variables.push_back(PolyRing::Variable{std::move(n), 1});
  }
  return make_ring(std::move(variables));
}

Presentation chow_bt(std::size_t rank, std::vector<std::string> names) {
  require(rank >= 1, "chow_bt needs a torus of positive rank");
  RingPtr ring = torus_ring(rank, std::move(names));
  return Presentation{ring, GradedIdeal(ring, {})};
}

Polynomial chern_form(const WeightRow& row, const RingPtr& ring) {
  require(ring != nullptr, "chern_form needs a ring");
  require(row.weights.size() == ring->variable_count(),
          "weight row length does not match the ring");
  for (std::size_t j = 0; j < ring->variable_count(); ++j) {
    require(ring->variable(j).degree == 1,
            "chern_form needs a ring with degree-1 variables");
  }
  return linear_form(ring, row.weights);
}

Presentation punctured_rep_presentation(const WeightMatrix& w,
                                        std::vector<std::string> names) {
  require(!w.rows().empty(),
          "punctured representation needs at least one coordinate");
  RingPtr ring = torus_ring(w.torus_rank(), std::move(names));

  Polynomial relation = Polynomial::constant(ring, 1);
  for (const WeightRow& row : w.rows()) {
    relation *= linear_form(ring, row.weights);
  }
  return Presentation{ring, GradedIdeal(ring, {std::move(relation)})};
}

Presentation weighted_proj_presentation(const WeightMatrix& w,
                                        const std::vector<long>& gm_weights,
                                        std::vector<std::string> names) {
  require(!w.rows().empty(),
          "projectivization needs at least one coordinate");
  require(gm_weights.size() == w.rows().size(),
          "need one Gm weight per coordinate");
  for (long gw : gm_weights) {
    require(gw >= 1, "Gm weights must be positive");
  }

  if (names.empty()) names = default_names(w.torus_rank());
  require(names.size() == w.torus_rank(),
          "need one variable name per torus factor");
  names.push_back("h");
  RingPtr ring = torus_ring(w.torus_rank() + 1, std::move(names));

  Polynomial relation = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < w.rows().size(); ++i) {
    std::vector<long> coeffs = w.rows()[i].weights;
    coeffs.push_back(gm_weights[i]);
    relation *= linear_form(ring, coeffs);
  }
  return Presentation{ring, GradedIdeal(ring, {std::move(relation)})};
}

Polynomial specialize_h_zero(const Polynomial& f) {
  const PolyRing& source = *f.ring();
  require(source.variable_count() >= 1 &&
              source.variable(source.variable_count() - 1).name == "h",
          "specialize_h_zero needs a ring whose last variable is h");

  std::vector<PolyRing::Variable> variables(
      source.variables().begin(), source.variables().end() - 1);
  RingPtr target = make_ring(std::move(variables));

  std::vector<Polynomial::Term> terms;
  for (const Polynomial::Term& t : f.terms()) {
    if (t.mono.exponents.back() != 0) continue;
    Monomial m{std::vector<unsigned>(t.mono.exponents.begin(),
                                     t.mono.exponents.end() - 1)};
    terms.push_back(Polynomial::Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Parity parity_of(long g) {
  return g % 2 == 0 ? Parity::even : Parity::odd;
}

std::string to_string(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

WeightMatrix action_weights(long g) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
  long n = 2 * g + 2;

  std::vector<WeightRow> rows;
  rows.reserve(static_cast<std::size_t>(n) + 2);
  if (g % 2 == 0) {
    for (long i = 0; i <= n; ++i) {
      rows.push_back(WeightRow{"a" + std::to_string(i), {i - g - 2, g - i}});
    }
    rows.push_back(WeightRow{"s", {g / 2, -(g + 2) / 2}});
  } else {
    for (long i = 0; i <= n; ++i) {
      rows.push_back(WeightRow{"a" + std::to_string(i), {-2, i - g - 1}});
    }
    rows.push_back(WeightRow{"s", {-1, (g + 1) / 2}});
  }
  return WeightMatrix(2, std::move(rows));
}

WeightMatrix action_weights_xi_chart(long g) {
  WeightMatrix full = action_weights(g);
  std::string dropped = "a" + std::to_string(2 * g + 2);

  std::vector<WeightRow> rows;
  rows.reserve(full.rows().size() - 1);
  for (const WeightRow& r : full.rows()) {
    if (r.label != dropped) rows.push_back(r);
  }
  return WeightMatrix(full.torus_rank(), std::move(rows));
}

bool weight_table_consistent(const WeightMatrix& w) {
  // Locate s and the highest-index a row.
  const WeightRow* s = nullptr;
  const WeightRow* last = nullptr;
  long last_index = -1;
  for (const WeightRow& r : w.rows()) {
    if (r.label == "s") {
      s = &r;
    } else if (r.label.size() > 1 && r.label[0] == 'a' &&
               std::all_of(r.label.begin() + 1, r.label.end(), [](char c) {
                 return c >= '0' && c <= '9';
               })) {
      long index = std::stol(r.label.substr(1));
      if (index > last_index) {
        last_index = index;
        last = &r;
      }
    }
  }
  if (!s || !last) return false;

  for (std::size_t j = 0; j < w.torus_rank(); ++j) {
    if (2 * s->weights[j] != last->weights[j]) return false;
  }
  return true;
}

} // namespace chowkit
