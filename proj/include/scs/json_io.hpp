#pragma once

#include <string>

#include "json.hpp"
#include "scs/generators.hpp"
#include "scs/geometry.hpp"

namespace scs {

// Round to 12 significant digits for stable, readable output.
double round_sig(double value);

// Instance document fields: "epsilon", "circles" [{id,x,y}], optional
// "edges" [[i,j]], optional "directions" {id: +-1}, optional "starts"
// {id: radians}. Missing fields are defaulted during construction.
Instance parse_instance(const nlohmann::json& document);
Instance parse_instance_text(const std::string& text);

// Full echo of a validated instance (edges, directions and starts included).
nlohmann::json instance_to_document(const Instance& instance);

// Document for a freshly generated layout (directions/starts left to
// defaulting so the document stays minimal).
nlohmann::json generated_to_document(const GeneratedInstance& generated);

}  // namespace scs
