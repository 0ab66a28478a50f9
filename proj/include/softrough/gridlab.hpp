#pragma once

#include <string>
#include <variant>
#include <vector>

#include "softrough/approx.hpp"

namespace softrough {

struct RectShape {
    int x0, y0, x1, y1; // inclusive pixel bounds
};

struct DiskShape {
    int cx, cy, r; // closed ball in squared Euclidean distance
};

struct Region {
    std::string name;
    std::variant<RectShape, DiskShape> shape;
};

/// A pixel grid with square granules of side `block` (which must divide both
/// dimensions) and named colored regions.
struct GridScene {
    int width = 0;
    int height = 0;
    int block = 1;
    std::vector<Region> regions;
};

/// Universe of w*h pixels with row-major labels "px_<y>_<x>". w*h <= 2^20.
UniversePtr grid_universe(int w, int h);

/// The granulation into (w/g)*(h/g) square blocks of g*g pixels.
Partition grid_partition(int w, int h, int g);

/// One attribute per region, valued by the rasterized shape.
SoftSet scene_to_softset(const GridScene& scene);

/// Per-attribute soft rough data of a scene next to the classical rough data
/// of the merged region (all regions treated as one undivided whole).
struct OverlapReport {
    GridScene scene;
    std::vector<std::string> names;
    std::vector<ElementSet> lower;     // per attribute
    std::vector<ElementSet> upper;     // per attribute
    std::vector<ElementSet> bound;     // per attribute, upper \ lower
    ElementSet union_region;           // union of all region pixel sets
    ElementSet union_lower;
    ElementSet union_upper;
    ElementSet union_boundary;
    ElementSet overlap_cells;          // union over a != b of upper(a) & upper(b)
    bool soft_detects_overlap = false; // overlap_cells nonempty
    bool boundary_mismatch = false;    // some attribute's boundary differs from
                                       // the merged region's classical boundary
};

OverlapReport overlap_report(const GridScene& scene);

/// Writes `<prefix>_<attr>_{lower,upper,boundary}.pgm` per attribute,
/// `<prefix>_union_{lower,upper,boundary}.pgm`, `<prefix>_composite.ppm`
/// and `<prefix>_report.txt`; returns the paths written. PGM pixels:
/// background 0, boundary 128, lower 255 (upper masks show both levels).
/// Composite: region i gets hue i*360/k at full saturation, overlap cells
/// white. Output bytes are deterministic for a fixed report.
std::vector<std::string> render_masks(const OverlapReport& report, const std::string& out_prefix);

} // namespace softrough
