#pragma once

#include "chowkit/equivariant.hpp"
#include "chowkit/hyperelliptic.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace chowkit::render {

// Serializers for the CLI surface.  Every JSON string is deterministic,
// two-space indented, and newline terminated, so byte comparison against
// golden files is meaningful.  Variable names that abbreviate a Unicode
// original (T0, t, r, ...) are listed in a variable_aliases block.

std::string verify_report_json(const VerificationReport& report);
std::string verify_report_text(const VerificationReport& report);

std::string presentation_json(long g, const Presentation& p);
std::string presentation_text(long g, const Presentation& p);

std::string weights_json(long g, const WeightMatrix& w);
std::string weights_text(long g, const WeightMatrix& w);

std::string chow_bt_json(std::size_t rank, const Presentation& p);
std::string chow_bt_text(std::size_t rank, const Presentation& p);

std::string identity_check_json(
    long g_max, const std::vector<std::pair<long, bool>>& per_g);
std::string identity_check_text(
    long g_max, const std::vector<std::pair<long, bool>>& per_g);

// "Z", "Z^2 + Z/4 + Z/28", "0", ...
std::string factors_text(const InvariantFactors& f);

} // namespace chowkit::render
