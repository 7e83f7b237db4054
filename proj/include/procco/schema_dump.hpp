#pragma once

#include <string>

namespace procco {

// Deterministic listings of the built-in schema (terms, attributes,
// relationships, partitions, axioms) for `procco schema`.
std::string render_schema_text();
std::string render_schema_canonical();

}  // namespace procco
