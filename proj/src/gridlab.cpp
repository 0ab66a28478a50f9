#include "softrough/gridlab.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace softrough {

UniversePtr grid_universe(int w, int h) {
    if (w < 1 || h < 1 || static_cast<long long>(w) * h > (1ll << 20))
        fail(Errc::SizeOutOfRange, "grid must have between 1 and 2^20 pixels");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            labels.push_back("px_" + std::to_string(y) + "_" + std::to_string(x));
    return build_universe(std::move(labels));
}

namespace {

Partition grid_partition_over(const UniversePtr& u, int w, int h, int g) {
    if (g < 1 || w % g != 0 || h % g != 0)
        fail(Errc::IndivisibleGranule, "granule side must divide both grid dimensions");
    const int bw = w / g, bh = h / g;
    std::vector<ElementSet> blocks;
    blocks.reserve(static_cast<std::size_t>(bw) * bh);
    for (int by = 0; by < bh; ++by) {
        for (int bx = 0; bx < bw; ++bx) {
            ElementSet b(u->size());
            for (int dy = 0; dy < g; ++dy)
                for (int dx = 0; dx < g; ++dx)
                    b.set(static_cast<std::size_t>(by * g + dy) * w + (bx * g + dx));
            blocks.push_back(std::move(b));
        }
    }
    return Partition(u, std::move(blocks));
}

ElementSet rasterize(const UniversePtr& u, int w, int h, const Region& region) {
    ElementSet px(u->size());
    if (const auto* rect = std::get_if<RectShape>(&region.shape)) {
        for (int y = std::max(0, rect->y0); y <= std::min(h - 1, rect->y1); ++y)
            for (int x = std::max(0, rect->x0); x <= std::min(w - 1, rect->x1); ++x)
                px.set(static_cast<std::size_t>(y) * w + x);
    } else {
        const auto& disk = std::get<DiskShape>(region.shape);
        const long long r2 = static_cast<long long>(disk.r) * disk.r;
        for (int y = std::max(0, disk.cy - disk.r); y <= std::min(h - 1, disk.cy + disk.r); ++y) {
            for (int x = std::max(0, disk.cx - disk.r); x <= std::min(w - 1, disk.cx + disk.r);
                 ++x) {
                long long dx = x - disk.cx, dy = y - disk.cy;
                if (dx * dx + dy * dy <= r2) px.set(static_cast<std::size_t>(y) * w + x);
            }
        }
    }
    if (px.none())
        fail(Errc::EmptyRegion, "region '" + region.name + "' covers no grid pixel");
    return px;
}

SoftSet scene_to_softset_over(const UniversePtr& u, const GridScene& scene) {
    std::vector<Attribute> attrs;
    attrs.reserve(scene.regions.size());
    for (const auto& region : scene.regions)
        attrs.push_back({region.name, rasterize(u, scene.width, scene.height, region)});
    return SoftSet(u, std::move(attrs));
}

} // namespace

Partition grid_partition(int w, int h, int g) {
    return grid_partition_over(grid_universe(w, h), w, h, g);
}

SoftSet scene_to_softset(const GridScene& scene) {
    return scene_to_softset_over(grid_universe(scene.width, scene.height), scene);
}

OverlapReport overlap_report(const GridScene& scene) {
    auto u = grid_universe(scene.width, scene.height);
    Partition p = grid_partition_over(u, scene.width, scene.height, scene.block);
    SoftSet s = scene_to_softset_over(u, scene);

    OverlapReport r;
    r.scene = scene;
    r.union_region = ElementSet(u->size());
    r.overlap_cells = ElementSet(u->size());
    for (const auto& a : s.attributes()) {
        r.names.push_back(a.name);
        r.lower.push_back(classical_lower(p, a.value));
        r.upper.push_back(classical_upper(p, a.value));
        r.bound.push_back(r.upper.back().minus(r.lower.back()));
        r.union_region = r.union_region | a.value;
    }
    for (std::size_t i = 0; i < r.upper.size(); ++i)
        for (std::size_t j = i + 1; j < r.upper.size(); ++j)
            r.overlap_cells = r.overlap_cells | (r.upper[i] & r.upper[j]);

    // the merged region as an undivided whole, classically approximated
    r.union_lower = classical_lower(p, r.union_region);
    r.union_upper = classical_upper(p, r.union_region);
    r.union_boundary = r.union_upper.minus(r.union_lower);

    r.soft_detects_overlap = r.overlap_cells.any();
    r.boundary_mismatch = false;
    for (const auto& bd : r.bound)
        if (bd != r.union_boundary) r.boundary_mismatch = true;
    return r;
}

namespace {

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoFailure, "cannot open '" + path + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(Errc::IoFailure, "short write to '" + path + "'");
}

std::string pgm_bytes(int w, int h, const std::vector<unsigned char>& gray) {
    std::string out = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    out.append(reinterpret_cast<const char*>(gray.data()), gray.size());
    return out;
}

std::vector<unsigned char> mask_pixels(int w, int h, const ElementSet& level255,
                                       const ElementSet& level128) {
    std::vector<unsigned char> gray(static_cast<std::size_t>(w) * h, 0);
    for (auto i : level128.indices()) gray[i] = 128;
    for (auto i : level255.indices()) gray[i] = 255;
    return gray;
}

struct Rgb {
    unsigned char r, g, b;
};

Rgb hue_color(double hue_degrees) {
    // full saturation and value
    double h = hue_degrees / 60.0;
    int sector = static_cast<int>(h) % 6;
    double f = h - std::floor(h);
    auto byte = [](double x) { return static_cast<unsigned char>(std::lround(255.0 * x)); };
    switch (sector) {
        case 0: return {255, byte(f), 0};
        case 1: return {byte(1 - f), 255, 0};
        case 2: return {0, 255, byte(f)};
        case 3: return {0, byte(1 - f), 255};
        case 4: return {byte(f), 0, 255};
        default: return {255, 0, byte(1 - f)};
    }
}

} // namespace

std::vector<std::string> render_masks(const OverlapReport& report, const std::string& out_prefix) {
    const int w = report.scene.width, h = report.scene.height;
    const std::size_t k = report.names.size();
    std::vector<std::string> written;

    auto emit_pgm = [&](const std::string& name, const ElementSet& level255,
                        const ElementSet& level128) {
        std::string path = out_prefix + "_" + name + ".pgm";
        write_file(path, pgm_bytes(w, h, mask_pixels(w, h, level255, level128)));
        written.push_back(path);
    };

    const ElementSet none(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < k; ++i) {
        emit_pgm(report.names[i] + "_lower", report.lower[i], none);
        emit_pgm(report.names[i] + "_upper", report.lower[i], report.bound[i]);
        emit_pgm(report.names[i] + "_boundary", none, report.bound[i]);
    }
    emit_pgm("union_lower", report.union_lower, none);
    emit_pgm("union_upper", report.union_lower, report.union_boundary);
    emit_pgm("union_boundary", none, report.union_boundary);

    // composite: region i colored hue i*360/k, overlap cells white, boundary
    // cells at half value
    {
        std::vector<Rgb> pix(static_cast<std::size_t>(w) * h, Rgb{0, 0, 0});
        for (std::size_t i = 0; i < k; ++i) {
            Rgb color = hue_color(360.0 * static_cast<double>(i) / static_cast<double>(k));
            Rgb dim{static_cast<unsigned char>(color.r / 2), static_cast<unsigned char>(color.g / 2),
                    static_cast<unsigned char>(color.b / 2)};
            for (auto px : report.bound[i].indices()) pix[px] = dim;
            for (auto px : report.lower[i].indices()) pix[px] = color;
        }
        for (auto px : report.overlap_cells.indices()) pix[px] = {255, 255, 255};

        std::string header = "P6\n# palette: region i gets hue i*360/" + std::to_string(k) +
                             " at full saturation (lower full, boundary half value); overlap "
                             "cells white\n" +
                             std::to_string(w) + " " + std::to_string(h) + "\n255\n";
        std::string bytes = header;
        bytes.reserve(header.size() + pix.size() * 3);
        for (const auto& c : pix) {
            bytes.push_back(static_cast<char>(c.r));
            bytes.push_back(static_cast<char>(c.g));
            bytes.push_back(static_cast<char>(c.b));
        }
        std::string path = out_prefix + "_composite.ppm";
        write_file(path, bytes);
        written.push_back(path);
    }

    {
        std::string text;
        text += "soft_detects_overlap=" + std::string(report.soft_detects_overlap ? "true" : "false") + "\n";
        text += "boundary_mismatch=" + std::string(report.boundary_mismatch ? "true" : "false") + "\n";
        text += "overlap_cells=" + std::to_string(report.overlap_cells.count()) + "\n";
        for (std::size_t i = 0; i < k; ++i) {
            text += report.names[i] + ": lower=" + std::to_string(report.lower[i].count()) +
                    " upper=" + std::to_string(report.upper[i].count()) +
                    " boundary=" + std::to_string(report.bound[i].count()) + "\n";
        }
        text += "union: region=" + std::to_string(report.union_region.count()) +
                " lower=" + std::to_string(report.union_lower.count()) +
                " upper=" + std::to_string(report.union_upper.count()) +
                " boundary=" + std::to_string(report.union_boundary.count()) + "\n";
        std::string path = out_prefix + "_report.txt";
        write_file(path, text);
        written.push_back(path);
    }

    return written;
}

} // namespace softrough
