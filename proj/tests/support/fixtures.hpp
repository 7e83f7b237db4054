#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "procco/parser.hpp"

namespace procco::testing {

inline std::string data_path(const std::string& relative) {
  return std::string(PROCCO_TEST_DATA_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& relative) {
  std::ifstream in(data_path(relative), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data: " + relative);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parses a fixture that is expected to be well-formed.
inline InstanceGraph load_fixture(const std::string& relative) {
  auto result = parse({read_file(relative), relative});
  if (!result.graph) {
    std::string msg = "fixture does not parse: " + relative;
    for (const auto& d : result.diagnostics) msg += "\n" + render(d, relative);
    throw std::runtime_error(msg);
  }
  return std::move(*result.graph);
}

}  // namespace procco::testing
