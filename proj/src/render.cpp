#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tilekit/errors.hpp"
#include "tilekit/torus.hpp"

namespace tilekit {

namespace {

const char* kPalette[6] = {"#4daf4a", "#377eb8", "#e41a1c", "#984ea3", "#ff7f00", "#a65628"};
constexpr double kSide = 512.0;

void emit_rect(std::string& out, double x0, double y0, double w, double h, const char* fill,
               double opacity) {
    char buf[200];
    // svg y axis points down, the torus picture keeps y up
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.4f\" y=\"%.4f\" width=\"%.4f\" height=\"%.4f\" fill=\"%s\""
                  " fill-opacity=\"%.2f\"/>\n",
                  x0 * kSide, (1.0 - y0 - h) * kSide, w * kSide, h * kSide, fill, opacity);
    out += buf;
}

// Draws a rectangle with its origin wrapped into [0,1)^2, splitting it at the
// seams so every piece stays inside the unit square.
void emit_wrapped(std::string& out, double x0, double y0, double w, double h, const char* fill,
                  double opacity) {
    x0 -= std::floor(x0);
    y0 -= std::floor(y0);
    std::vector<std::pair<double, double>> xs, ys;
    if (x0 + w <= 1.0) {
        xs.emplace_back(x0, w);
    } else {
        xs.emplace_back(x0, 1.0 - x0);
        xs.emplace_back(0.0, x0 + w - 1.0);
    }
    if (y0 + h <= 1.0) {
        ys.emplace_back(y0, h);
    } else {
        ys.emplace_back(y0, 1.0 - y0);
        ys.emplace_back(0.0, y0 + h - 1.0);
    }
    for (const auto& px : xs)
        for (const auto& py : ys)
            if (px.second > 1e-12 && py.second > 1e-12)
                emit_rect(out, px.first, py.first, px.second, py.second, fill, opacity);
}

} // namespace

std::string render_svg(const CellSet& set, const std::vector<RenderShift>& shifts) {
    if (set.dim() != 2) throw Unsupported("rendering needs a two-dimensional set");
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\""
           " viewBox=\"0 0 512 512\">\n";
    out += "<rect width=\"512\" height=\"512\" fill=\"#ffffff\"/>\n";

    double q = double(set.resolution());
    double cell = 1.0 / q;
    for (const auto& s : shifts) {
        const char* fill = kPalette[std::size_t(s.class_index) % 6];
        for (std::int64_t flat : set.flat_cells()) {
            auto c = set.coords_of(flat);
            emit_wrapped(out, double(c[0]) / q + s.x, double(c[1]) / q + s.y, cell, cell, fill,
                         0.85);
        }
    }
    for (const auto& s : shifts) {
        double half = 0.008;
        emit_wrapped(out, s.x - std::floor(s.x) - half, s.y - std::floor(s.y) - half, 2 * half,
                     2 * half, "#000000", 1.0);
    }
    out += "</svg>\n";
    return out;
}

} // namespace tilekit
