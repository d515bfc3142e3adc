#include "complex/fixtures.hpp"

#include <cstdlib>
#include <filesystem>

#include "common/errors.hpp"
#include "complex/io.hpp"

namespace hexcol {

std::vector<FixtureInfo> fixture_list() {
  return {
      {"S4", "boundary of the 5-simplex", 4, true},
      {"CP2", "9-vertex complex projective plane", 4, true},
      {"RP4", "31-vertex real projective 4-space", 4, true},
      {"S2xS2", "S2 x S2, staircase product", 4, true},
      {"S2xS2tw", "twisted S2 x S2 (needs $HEXCOL_FIXTURE_DIR/s2xs2tw.tri)", 4, false},
      {"S2xT2", "S2 x T2, staircase product", 4, true},
      {"RP2xS2", "RP2 x S2, staircase product", 4, true},
      {"RP2xT2", "RP2 x T2, staircase product", 4, true},
      {"RP2xRP2", "RP2 x RP2, staircase product", 4, true},
      {"T4", "T2 x T2, staircase product", 4, true},
      {"S1", "boundary of the triangle", 1, true},
      {"S2", "boundary of the tetrahedron", 2, true},
      {"S3", "boundary of the 4-simplex", 3, true},
      {"T2", "7-vertex torus", 2, true},
      {"RP2", "6-vertex real projective plane", 2, true},
  };
}

Triangulation fixture(const std::string& name) {
  if (name == "S1") return Triangulation::simplex_boundary(1);
  if (name == "S2") return Triangulation::simplex_boundary(2);
  if (name == "S3") return Triangulation::simplex_boundary(3);
  if (name == "S4") return Triangulation::simplex_boundary(4);
  if (name == "T2") return parse_text(detail::kFixtureT2);
  if (name == "RP2") return parse_text(detail::kFixtureRp2);
  if (name == "CP2") return parse_text(detail::kFixtureCp2);
  if (name == "RP4") return parse_text(detail::kFixtureRp4);
  if (name == "S2xS2") return staircase_product(fixture("S2"), fixture("S2"));
  if (name == "S2xT2") return staircase_product(fixture("S2"), fixture("T2"));
  if (name == "RP2xS2") return staircase_product(fixture("RP2"), fixture("S2"));
  if (name == "RP2xT2") return staircase_product(fixture("RP2"), fixture("T2"));
  if (name == "RP2xRP2") return staircase_product(fixture("RP2"), fixture("RP2"));
  if (name == "T4") return staircase_product(fixture("T2"), fixture("T2"));
  if (name == "S2xS2tw") {
    if (const char* dir = std::getenv("HEXCOL_FIXTURE_DIR")) {
      const auto path = std::filesystem::path(dir) / "s2xs2tw.tri";
      if (std::filesystem::exists(path)) return load_triangulation(path.string());
    }
    throw DomainError("fixture S2xS2tw is unavailable: no triangulation data supplied");
  }
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace hexcol
