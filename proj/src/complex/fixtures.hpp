#pragma once

#include <string>
#include <vector>

#include "complex/triangulation.hpp"

namespace hexcol {

struct FixtureInfo {
  std::string name;
  std::string description;
  int dim = 4;
  bool available = true;
};

std::vector<FixtureInfo> fixture_list();

// Bundled or product-generated triangulation. S2xS2tw is read from
// $HEXCOL_FIXTURE_DIR/s2xs2tw.tri when present and is otherwise unavailable.
Triangulation fixture(const std::string& name);

namespace detail {
extern const char* const kFixtureCp2;
extern const char* const kFixtureRp4;
extern const char* const kFixtureRp2;
extern const char* const kFixtureT2;
}  // namespace detail

}  // namespace hexcol
