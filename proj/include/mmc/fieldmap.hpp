#pragma once

#include <string>

#include "mmc/scenario.hpp"

namespace mmc {

// Which field combination a map evaluates.
enum class FieldmapWhich { StripResponse, Applied, Total };

FieldmapWhich fieldmap_which_from_string(const std::string& s);
const char* fieldmap_which_label(FieldmapWhich w);

// Rectangular evaluation window. Points are placed at the ny x nz nodes of
// the inclusive grid; a single-node axis collapses onto its lower bound.
struct FieldmapGrid {
  double y0 = 0.0;
  double y1 = 0.0;
  int ny = 1;
  double z0 = 0.0;
  double z1 = 0.0;
  int nz = 1;

  void check() const;
};

// CSV table (header always present) of A_x, B_y, B_z over the grid. Points
// where the requested combination is undefined (inside the strip
// cross-section for response/total maps, exactly on a source wire) keep
// their coordinates, carry "nan" in the value columns and masked=1. The
// output bytes are independent of the thread count.
std::string render_fieldmap(const ResolvedScenario& rs, FieldmapWhich which,
                            const FieldmapGrid& g, int threads);

} // namespace mmc
