#pragma once

#include <utility>

#include "softrough/gridlab.hpp"
#include "softrough/partition.hpp"
#include "softrough/soft_set.hpp"

namespace softrough {

/// JSON {"universe":["a",...], "blocks":[["a","b"],...]} or
/// {"universe":[...], "pairs":[["a","b"],...]}.
std::pair<UniversePtr, Partition> parse_space_file(const std::string& path);

/// JSON {"attributes":[{"name":"a1","value":["a","b"]}, ...]} over a known
/// universe.
SoftSet parse_softset_file(const std::string& path, const UniversePtr& u);

/// JSON {"width":64,"height":64,"block":8,
///       "regions":[{"name":"r","rect":[x0,y0,x1,y1]},
///                  {"name":"g","disk":[cx,cy,r]}]}.
GridScene parse_scene_file(const std::string& path);

} // namespace softrough
