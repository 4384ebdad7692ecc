#include "elnitsky/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "elnitsky/forced.hpp"

namespace elnitsky::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Vec {
    double x = 0;
    double y = 0;

    friend Vec operator+(const Vec& a, const Vec& b) { return {a.x + b.x, a.y + b.y}; }
};

// Directions in render space, SVG y pointing down. The equilateral fan puts
// d_1..d_n at unit length, symmetric about straight down; the integer option
// reuses the exact embedding coordinates.
std::vector<Vec> render_directions(int n, bool equilateral) {
    std::vector<Vec> dirs(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        if (equilateral) {
            const double angle = -kPi / 2 + (i - (n + 1) / 2.0) * kPi / (n + 1);
            dirs[static_cast<std::size_t>(i)] = {std::cos(angle), -std::sin(angle)};
        } else {
            dirs[static_cast<std::size_t>(i)] = {static_cast<double>(2 * i - n - 1), 2.0};
        }
    }
    return dirs;
}

struct TileQuad {
    std::array<Vec, 4> corners;
    bool shaded = false;
};

struct Layout {
    std::vector<TileQuad> quads;
    Vec top;
    Vec bottom;
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

Layout layout_tiling(const Tiling& t, const RenderOptions& options,
                     const std::set<ValuePair>& shaded_labels) {
    const int n = t.owner.size();
    const std::vector<Vec> dirs = render_directions(n, options.equilateral);

    Layout layout;
    walk_strands(n, t.cls.canonical, [&](std::size_t step, int row, const std::vector<int>& u) {
        Vec corner;
        for (int i = 0; i < row - 1; ++i)
            corner = corner + dirs[static_cast<std::size_t>(u[static_cast<std::size_t>(i)])];
        const Vec a = dirs[static_cast<std::size_t>(u[static_cast<std::size_t>(row - 1)])];
        const Vec b = dirs[static_cast<std::size_t>(u[static_cast<std::size_t>(row)])];
        TileQuad quad;
        quad.corners = {corner, corner + a, corner + a + b, corner + b};
        quad.shaded = shaded_labels.count(t.tiles[step].label) > 0;
        layout.quads.push_back(quad);
    });

    Vec bottom;
    for (int i = 1; i <= n; ++i) bottom = bottom + dirs[static_cast<std::size_t>(i)];
    layout.top = {0, 0};
    layout.bottom = bottom;

    bool first = true;
    auto grow = [&](const Vec& p) {
        if (first) {
            layout.min_x = layout.max_x = p.x;
            layout.min_y = layout.max_y = p.y;
            first = false;
        } else {
            layout.min_x = std::min(layout.min_x, p.x);
            layout.max_x = std::max(layout.max_x, p.x);
            layout.min_y = std::min(layout.min_y, p.y);
            layout.max_y = std::max(layout.max_y, p.y);
        }
    };
    grow(layout.top);
    grow(layout.bottom);
    for (const TileQuad& q : layout.quads)
        for (const Vec& p : q.corners) grow(p);
    return layout;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::set<ValuePair> forced_labels(const Permutation& w) {
    std::set<ValuePair> labels;
    const ForcedReport report = forced_tiles(w);
    for (const auto& per_type : report.forced)
        labels.insert(per_type.begin(), per_type.end());
    return labels;
}

} // namespace

std::string render_tilings(const std::vector<Tiling>& ts, const RenderOptions& options) {
    const double s = options.scale;
    std::set<ValuePair> shaded;
    if (options.shade_forced && !ts.empty()) shaded = forced_labels(ts.front().owner);

    std::vector<Layout> layouts;
    layouts.reserve(ts.size());
    for (const Tiling& t : ts) layouts.push_back(layout_tiling(t, options, shaded));

    const double gap = 0.75;
    double cursor = 0;
    double min_y = 0, max_y = 0;
    std::vector<double> offsets(layouts.size(), 0);
    for (std::size_t i = 0; i < layouts.size(); ++i) {
        offsets[i] = cursor - layouts[i].min_x;
        cursor += (layouts[i].max_x - layouts[i].min_x) + gap;
        min_y = std::min(min_y, layouts[i].min_y);
        max_y = std::max(max_y, layouts[i].max_y);
    }
    const double total_width = layouts.empty() ? 0 : cursor - gap;

    const double margin = 0.5;
    const double vb_x = -margin * s;
    const double vb_y = (min_y - margin) * s;
    const double vb_w = (total_width + 2 * margin) * s;
    const double vb_h = (max_y - min_y + 2 * margin) * s;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(vb_w) + "\" height=\"" +
           num(vb_h) + "\" viewBox=\"" + num(vb_x) + " " + num(vb_y) + " " + num(vb_w) + " " +
           num(vb_h) + "\">\n";
    svg += "<g stroke=\"black\" stroke-width=\"" + num(s * 0.035) +
           "\" stroke-linejoin=\"round\">\n";
    for (std::size_t i = 0; i < layouts.size(); ++i) {
        for (const TileQuad& q : layouts[i].quads) {
            svg += "<polygon points=\"";
            for (std::size_t c = 0; c < 4; ++c) {
                if (c) svg += " ";
                svg += num((q.corners[c].x + offsets[i]) * s) + "," + num(q.corners[c].y * s);
            }
            svg += "\" fill=\"";
            svg += q.shaded ? "black\" fill-opacity=\"0.2\"" : "none\"";
            svg += "/>\n";
        }
    }
    svg += "</g>\n";
    for (std::size_t i = 0; i < layouts.size(); ++i) {
        for (const Vec* dot : {&layouts[i].top, &layouts[i].bottom})
            svg += "<circle cx=\"" + num((dot->x + offsets[i]) * s) + "\" cy=\"" +
                   num(dot->y * s) + "\" r=\"" + num(s * 0.08) + "\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_tiling(const Tiling& t, const RenderOptions& options) {
    return render_tilings(std::vector<Tiling>{t}, options);
}

} // namespace elnitsky::cli
