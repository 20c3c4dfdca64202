#pragma once

#include <string>

#include "qaoa/ising.hpp"

namespace qaoa {

// Canonical JSON form of a model: sorted vertex array, sorted [i, j, J]
// coupling triples, offset. Round-trip exact.
std::string model_to_json(const IsingModel& model);
IsingModel model_from_json(const std::string& text);

}  // namespace qaoa
