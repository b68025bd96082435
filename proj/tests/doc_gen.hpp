#pragma once
// Random well-formed scenario documents for round-trip and fuzz testing.

#include "atcalc/scenario_io.hpp"

#include <random>

namespace docgen {

/// A document that parse() accepts: names resolve, references are acyclic and
/// every field is in canonical form. Roughly half use a raw system.
atcalc::io::ScenarioDoc random_doc(std::mt19937_64& rng);

}  // namespace docgen
