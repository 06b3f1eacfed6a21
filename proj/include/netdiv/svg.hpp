#pragma once

#include <string>
#include <vector>

#include "netdiv/cluster.hpp"

namespace netdiv {

// Standalone correlation heatmap: rows/cols in leaf order, cells on a fixed
// diverging scale (blue -1, white 0, red +1), missing cells gray.
void write_heatmap_svg(const std::vector<std::vector<double>>& corr,
                       const std::vector<std::string>& names,
                       const std::vector<std::uint32_t>& leaf_order,
                       const std::string& path);

}  // namespace netdiv
