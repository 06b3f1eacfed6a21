#include "netdiv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "netdiv/error.hpp"

namespace netdiv {

namespace {

std::string cell_color(double r) {
    if (std::isnan(r)) return "#b0b0b0";
    r = std::clamp(r, -1.0, 1.0);
    // blue (59,76,192) .. white .. red (180,4,38)
    int cr, cg, cb;
    if (r < 0) {
        double t = -r;
        cr = static_cast<int>(std::lround(255 + t * (59 - 255)));
        cg = static_cast<int>(std::lround(255 + t * (76 - 255)));
        cb = static_cast<int>(std::lround(255 + t * (192 - 255)));
    } else {
        double t = r;
        cr = static_cast<int>(std::lround(255 + t * (180 - 255)));
        cg = static_cast<int>(std::lround(255 + t * (4 - 255)));
        cb = static_cast<int>(std::lround(255 + t * (38 - 255)));
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", cr, cg, cb);
    return buf;
}

}  // namespace

void write_heatmap_svg(const std::vector<std::vector<double>>& corr,
                       const std::vector<std::string>& names,
                       const std::vector<std::uint32_t>& leaf_order,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write svg: " + path);
    const std::size_t n = corr.size();
    const int cell = 12, margin = 120;
    const int size = margin + cell * static_cast<int>(n) + 4;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
        << "\" height=\"" << size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t row = 0; row < n; ++row) {
        std::uint32_t i = leaf_order[row];
        for (std::size_t col = 0; col < n; ++col) {
            std::uint32_t j = leaf_order[col];
            out << "<rect x=\"" << margin + cell * static_cast<int>(col) << "\" y=\""
                << margin + cell * static_cast<int>(row) << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << cell_color(corr[i][j])
                << "\"/>\n";
        }
        if (i < names.size()) {
            out << "<text x=\"" << margin - 4 << "\" y=\""
                << margin + cell * static_cast<int>(row) + cell - 3
                << "\" font-size=\"9\" text-anchor=\"end\" font-family=\"sans-serif\">"
                << names[i] << "</text>\n";
            out << "<text x=\"" << margin + cell * static_cast<int>(row) + cell / 2
                << "\" y=\"" << margin - 4
                << "\" font-size=\"9\" text-anchor=\"start\" font-family=\"sans-serif\" "
                   "transform=\"rotate(-60 "
                << margin + cell * static_cast<int>(row) + cell / 2 << ' ' << margin - 4
                << ")\">" << names[i] << "</text>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace netdiv
