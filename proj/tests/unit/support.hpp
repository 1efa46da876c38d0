#pragma once

#include <string>

#include "bicrys/spec.hpp"

#ifndef BICRYS_SPEC_DIR
#error "BICRYS_SPEC_DIR must point at the specs directory"
#endif

inline bicrys::IdealSpec load_spec(const std::string& name) {
  return bicrys::load_ideal_spec(std::string(BICRYS_SPEC_DIR) + "/" + name + ".json");
}
