#pragma once

#include <string>

#include <json.hpp>

#include "cycinv/betti.hpp"
#include "cycinv/generators.hpp"
#include "cycinv/relations.hpp"

namespace cycinv {

std::string to_string(Convention c);
std::string to_string(GradingKind g);

/// {"convention": ..., "grading": ..., "entries": [{"i":, "j":, "rank":}, ...]}
/// with entries ordered by (i, j).
nlohmann::ordered_json to_json(const BettiTable& table);
/// Throws ValidationError on schema violations.
BettiTable betti_from_json(const nlohmann::ordered_json& j);

/// Homological rows against degree columns, blank cells for zero:
///
///        j:  0  6  7 ...
///   beta_0:  1
///   beta_1:     1  2 ...
std::string format_grid(const BettiTable& table);

nlohmann::ordered_json to_json(const GeneratorSet& gens);
std::string format_generators(const GeneratorSet& gens);

}  // namespace cycinv
