#include "chowkit/render.hpp"

#include "chowkit/version.hpp"

#include <json.hpp>

#include <sstream>

namespace chowkit::render {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* subscript_digit(char c) {
  static const char* digits[] = {"₀", "₁", "₂", "₃",
                                 "₄", "₅", "₆", "₇",
                                 "₈", "₉"};
  return digits[c - '0'];
}

// Unicode original of a serialized variable name: trailing digits become
// subscripts, t and r stand for tau and rho in the odd-genus rings.
std::string unicode_original(const std::string& name) {
  if (name == "t") return "τ";
  if (name == "r") return "ρ";
  std::size_t head = name.size();
  while (head > 0 && name[head - 1] >= '0' && name[head - 1] <= '9') --head;
  if (head == name.size() || head == 0) return name;
  std::string result = name.substr(0, head);
  for (std::size_t i = head; i < name.size(); ++i) {
    result += subscript_digit(name[i]);
  }
  return result;
}

ordered_json alias_block(const PolyRing& ring) {
  ordered_json aliases = ordered_json::object();
  for (const auto& v : ring.variables()) {
    std::string original = unicode_original(v.name);
    if (original != v.name) aliases[v.name] = original;
  }
  return aliases;
}

ordered_json ring_block(const PolyRing& ring) {
  ordered_json variables = ordered_json::array();
  for (const auto& v : ring.variables()) {
    variables.push_back({{"name", v.name}, {"degree", v.degree}});
  }
  return ordered_json{{"variables", std::move(variables)}};
}

ordered_json factors_block(const InvariantFactors& f) {
  ordered_json torsion = ordered_json::array();
  for (const mpz_class& t : f.torsion) torsion.push_back(t.get_str());
  return ordered_json{{"rank", f.free_rank}, {"torsion", std::move(torsion)}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string ring_text(const PolyRing& ring) {
  std::string out = "Z[";
  for (std::size_t i = 0; i < ring.variable_count(); ++i) {
    if (i > 0) out += ", ";
    out += ring.variable(i).name;
  }
  out += "]";
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out;
}

std::vector<std::string> generator_strings(const GradedIdeal& ideal) {
  std::vector<std::string> out;
  out.reserve(ideal.generators().size());
  for (const Polynomial& g : ideal.generators()) {
    out.push_back(canonical_string(g));
  }
  return out;
}

} // namespace

std::string factors_text(const InvariantFactors& f) {
  std::vector<std::string> parts;
  if (f.free_rank == 1) {
    parts.push_back("Z");
  } else if (f.free_rank > 1) {
    parts.push_back("Z^" + std::to_string(f.free_rank));
  }
  for (const mpz_class& t : f.torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";

  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string verify_report_json(const VerificationReport& report) {
  ordered_json j;
  j["tool_version"] = version_string;
  j["g"] = report.g;
  j["parity"] = to_string(report.parity);
  j["char_hypothesis"] = report.char_hypothesis;
  j["max_degree"] = report.max_degree;
  j["generators"] = {{"image", report.image_generators},
                     {"stated", report.stated_generators}};

  ordered_json per_degree = ordered_json::array();
  for (const DegreeComparison& c : report.per_degree) {
    per_degree.push_back({{"d", c.degree},
                          {"equal", c.equal},
                          {"image_factors", factors_block(c.image_factors)},
                          {"stated_factors", factors_block(c.stated_factors)}});
  }
  j["per_degree"] = std::move(per_degree);

  if (report.first_discrepancy) {
    j["first_discrepancy"] = *report.first_discrepancy;
  } else {
    j["first_discrepancy"] = nullptr;
  }

  RingPtr ring = report.parity == Parity::even ? even_target_ring()
                                               : odd_target_ring();
  j["variable_aliases"] = alias_block(*ring);
  return dump(j);
}

std::string verify_report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "genus " << report.g << " (" << to_string(report.parity)
      << "), compared through degree " << report.max_degree << "\n";
  out << "characteristic hypothesis: " << report.char_hypothesis << "\n";
  out << "image ideal:  (" << join(report.image_generators) << ")\n";
  out << "stated ideal: (" << join(report.stated_generators) << ")\n\n";
  out << "degree  equal  image group / stated group\n";
  for (const DegreeComparison& c : report.per_degree) {
    out << "  " << c.degree << (c.degree < 10 ? "  " : " ") << "    "
        << (c.equal ? "yes " : "NO  ") << "  "
        << factors_text(c.image_factors) << " / "
        << factors_text(c.stated_factors) << "\n";
  }
  if (report.first_discrepancy) {
    out << "first discrepancy at degree " << *report.first_discrepancy
        << "\n";
  } else {
    out << "no discrepancy through degree " << report.max_degree << "\n";
  }
  return out.str();
}

std::string presentation_json(long g, const Presentation& p) {
  ordered_json j;
  j["tool_version"] = version_string;
  j["g"] = g;
  j["parity"] = to_string(parity_of(g));
  j["ring"] = ring_block(*p.ring);
  j["generators"] = generator_strings(p.relations);
  j["variable_aliases"] = alias_block(*p.ring);
  return dump(j);
}

std::string presentation_text(long g, const Presentation& p) {
  std::ostringstream out;
  out << "genus " << g << " (" << to_string(parity_of(g)) << ")\n";
  out << "ring: " << ring_text(*p.ring) << "\n";
  out << "relations: (" << join(generator_strings(p.relations)) << ")\n";
  return out.str();
}

std::string weights_json(long g, const WeightMatrix& w) {
  ordered_json j;
  j["g"] = g;
  j["parity"] = to_string(parity_of(g));

  ordered_json rows = ordered_json::array();
  for (const WeightRow& row : w.rows()) {
    rows.push_back({{"label", row.label}, {"weights", row.weights}});
  }
  j["rows"] = std::move(rows);
  j["consistency_check"] = weight_table_consistent(w);
  return dump(j);
}

std::string weights_text(long g, const WeightMatrix& w) {
  std::ostringstream out;
  out << "genus " << g << " (" << to_string(parity_of(g))
      << "), torus rank " << w.torus_rank() << "\n";
  for (const WeightRow& row : w.rows()) {
    out << "  " << row.label << ": (";
    for (std::size_t i = 0; i < row.weights.size(); ++i) {
      if (i > 0) out << ", ";
      out << row.weights[i];
    }
    out << ")\n";
  }
  out << "consistency 2*weight(s) == weight(a_N): "
      << (weight_table_consistent(w) ? "true" : "false") << "\n";
  return out.str();
}

std::string chow_bt_json(std::size_t rank, const Presentation& p) {
  ordered_json j;
  j["tool_version"] = version_string;
  j["rank"] = rank;
  j["ring"] = ring_block(*p.ring);
  j["relations"] = generator_strings(p.relations);
  j["variable_aliases"] = alias_block(*p.ring);
  return dump(j);
}

std::string chow_bt_text(std::size_t rank, const Presentation& p) {
  std::ostringstream out;
  out << "rank " << rank << " torus\n";
  out << "ring: " << ring_text(*p.ring) << "\n";
  out << "relations: none\n";
  return out.str();
}

std::string identity_check_json(
    long g_max, const std::vector<std::pair<long, bool>>& per_g) {
  ordered_json j;
  j["tool_version"] = version_string;
  j["g_max"] = g_max;

  bool all = true;
  ordered_json entries = ordered_json::array();
  for (const auto& [g, equal] : per_g) {
    entries.push_back({{"g", g}, {"equal", equal}});
    all = all && equal;
  }
  j["all_equal"] = all;
  j["per_g"] = std::move(entries);
  return dump(j);
}

std::string identity_check_text(
    long g_max, const std::vector<std::pair<long, bool>>& per_g) {
  std::ostringstream out;
  bool all = true;
  for (const auto& [g, equal] : per_g) {
    out << "g=" << g << ": " << (equal ? "identical" : "DIFFERENT") << "\n";
    all = all && equal;
  }
  out << (all ? "identity holds" : "identity FAILS") << " for even g <= "
      << g_max << "\n";
  return out.str();
}

} // namespace chowkit::render
