#pragma once

#include <string>

#include "planmodulo/util/strings.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& rel) {
  return std::string(PLANMODULO_FIXTURES_DIR) + "/" + rel;
}

inline std::string fixture(const std::string& rel) {
  return planmodulo::read_file(fixture_path(rel));
}

inline std::string golden(const std::string& rel) {
  return planmodulo::read_file(std::string(PLANMODULO_GOLDEN_DIR) + "/" + rel);
}

}  // namespace testutil
