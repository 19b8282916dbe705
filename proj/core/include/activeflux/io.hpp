// File outputs: full-state CSV with exact round-trip (%.17g), radial scatter
// CSV for radially symmetric cases, binary 8-bit PGM (P5) heatmaps, and the
// newline-delimited run log.
#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "activeflux/grid.hpp"

namespace activeflux {

// One dof per line, "kind,i,j,v0,v1,v2,v3" under a header row; averages in
// conserved variables, point values in primitive ones.  Grid metadata rides
// in '#' comment lines so the reader can rebuild the state bit-exactly.
void write_state_csv(const GridState& g, const std::string& path);
GridState read_state_csv(const std::string& path);

// Cell-average scatter against radius from (cx, cy): r, rho, p, |v|.
void write_radial_csv(const GridState& g, double cx, double cy, double gamma,
                      const std::string& path);

// Grayscale heatmap of one value per cell, nx x ny pixels, linearly mapped
// from [min, max] to [0, 255]; row 0 of the image is the top cell row.
void write_pgm(const std::vector<double>& cell_values, int nx, int ny,
               const std::string& path);
void write_density_pgm(const GridState& g, const std::string& path);
void write_speed_pgm(const GridState& g, double gamma,
                     const std::string& path);

class RunLog {
  public:
    // An empty path produces a silent log.
    explicit RunLog(const std::string& path);
    void line(const std::string& text);

  private:
    std::ofstream out_;
    bool enabled_ = false;
};

} // namespace activeflux
