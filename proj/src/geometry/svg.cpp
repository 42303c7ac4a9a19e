#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "ss/error.hpp"
#include "ss/geometry/geometry.hpp"

namespace ss {

namespace {

std::string fmt(double v) {
    if (!std::isfinite(v)) throw InputError("cannot render a non-finite coordinate");
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    return s == "-0.000" ? "0.000" : s;
}

std::string hsl_hex(double hue, double sat, double light) {
    double c = (1.0 - std::fabs(2.0 * light - 1.0)) * sat;
    double hp = hue / 60.0;
    double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0.0, g = 0.0, b = 0.0;
    switch (static_cast<int>(hp) % 6) {
        case 0: r = c, g = x; break;
        case 1: r = x, g = c; break;
        case 2: g = c, b = x; break;
        case 3: g = x, b = c; break;
        case 4: r = x, b = c; break;
        default: r = c, b = x; break;
    }
    double m = light - c / 2.0;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                  static_cast<int>(std::lround((r + m) * 255.0)),
                  static_cast<int>(std::lround((g + m) * 255.0)),
                  static_cast<int>(std::lround((b + m) * 255.0)));
    return std::string(buf);
}

std::vector<std::string> palette(int n) {
    std::vector<std::string> out;
    std::set<std::string> used;
    for (int i = 0; i < n; ++i) {
        double hue = std::fmod(static_cast<double>(i) * 137.508, 360.0);
        double sat = 0.65;
        double light = 0.42;
        std::string hex = hsl_hex(hue, sat, light);
        int attempts = 0;
        while (used.count(hex)) {
            light = 0.25 + std::fmod(light - 0.25 + 0.013, 0.55);
            hue = std::fmod(hue + 0.37, 360.0);
            hex = hsl_hex(hue, sat, light);
            require(++attempts < 10000, "could not find a fresh color");
        }
        used.insert(hex);
        out.push_back(hex);
    }
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string render_points(const std::vector<double>& xs, const std::vector<double>& ys,
                          const std::vector<int>& tags,
                          const std::vector<std::string>& letters, const RenderConfig& cfg) {
    size_t n = tags.size();
    int a = static_cast<int>(letters.size());
    for (int tag : tags)
        if (tag < 0 || tag >= a) throw InputError("point letter lies outside the alphabet");

    double lox = 0.0, hix = 1.0, loy = 0.0, hiy = 1.0;
    if (n > 0) {
        lox = hix = xs[0];
        loy = hiy = ys[0];
        for (size_t k = 1; k < n; ++k) {
            lox = std::min(lox, xs[k]);
            hix = std::max(hix, xs[k]);
            loy = std::min(loy, ys[k]);
            hiy = std::max(hiy, ys[k]);
        }
    }
    if (!(hix - lox > 0.0)) hix = lox + 1.0;
    if (!(hiy - loy > 0.0)) hiy = loy + 1.0;

    double size = static_cast<double>(cfg.size);
    double pad = 0.06 * size;
    double scale = std::min((size - 2.0 * pad) / (hix - lox), (size - 2.0 * pad) / (hiy - loy));

    std::vector<std::string> colors = palette(a);
    std::vector<std::vector<size_t>> by_letter(a);
    for (size_t k = 0; k < n; ++k) by_letter[tags[k]].push_back(k);

    std::string svg;
    svg.reserve(64 * n + 4096);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(cfg.size) + "\" height=\"" + std::to_string(cfg.size) +
           "\" viewBox=\"0 0 " + std::to_string(cfg.size) + " " + std::to_string(cfg.size) +
           "\">\n";
    svg += "<rect width=\"" + std::to_string(cfg.size) + "\" height=\"" +
           std::to_string(cfg.size) + "\" fill=\"#ffffff\"/>\n";
    std::string radius = fmt(cfg.radius);
    for (int letter = 0; letter < a; ++letter) {
        svg += "<g fill=\"" + colors[letter] + "\">\n";
        for (size_t k : by_letter[letter]) {
            double sx = pad + (xs[k] - lox) * scale;
            double sy = size - pad - (ys[k] - loy) * scale;
            svg += "<circle cx=\"" + fmt(sx) + "\" cy=\"" + fmt(sy) + "\" r=\"" + radius +
                   "\"/>\n";
        }
        svg += "</g>\n";
    }
    for (int letter = 0; letter < a; ++letter) {
        double ly = 16.0 + 16.0 * letter;
        svg += "<circle cx=\"12\" cy=\"" + fmt(ly - 4.0) + "\" r=\"5\" fill=\"" +
               colors[letter] + "\"/>";
        svg += "<text x=\"22\" y=\"" + fmt(ly) +
               "\" font-family=\"monospace\" font-size=\"12\" fill=\"#333333\">" +
               xml_escape(letters[letter]) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace

std::string render_svg(const PointCloud& cloud, const std::vector<std::string>& letters,
                       const RenderConfig& cfg) {
    size_t n = static_cast<size_t>(cloud.size());
    std::vector<double> xs(n, 0.0), ys(n, 0.0);
    for (size_t k = 0; k < n; ++k) {
        const double* p = cloud.point(static_cast<int>(k));
        double x = cloud.dim >= 1 ? p[0] : 0.0;
        double y;
        if (cloud.dim >= 2)
            y = p[1];
        else
            y = n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 0.0;
        if (cfg.torus_mod) {
            x -= std::floor(x);
            if (cloud.dim >= 2) y -= std::floor(y);
        }
        xs[k] = x;
        ys[k] = y;
    }
    return render_points(xs, ys, cloud.tags, letters, cfg);
}

std::string render_svg_pairs(const PsiGraph& g, const std::vector<std::string>& letters,
                             const RenderConfig& cfg) {
    size_t n = static_cast<size_t>(g.size());
    if (g.dim_v < 1 || g.dim_vp < 1) throw InputError("paired render needs both projections");
    std::vector<double> xs(n, 0.0), ys(n, 0.0);
    for (size_t k = 0; k < n; ++k) {
        double x = g.v_coords[k * g.dim_v];
        double y = g.vp_coords[k * g.dim_vp];
        if (cfg.torus_mod) {
            x -= std::floor(x);
            y -= std::floor(y);
        }
        xs[k] = x;
        ys[k] = y;
    }
    return render_points(xs, ys, g.tags, letters, cfg);
}

std::string cloud_csv(const PointCloud& cloud, const std::vector<std::string>& letters) {
    std::string out;
    out.reserve(32 * static_cast<size_t>(cloud.size()) + 64);
    for (int i = 0; i < cloud.dim; ++i) out += "x" + std::to_string(i) + ",";
    out += "letter\n";
    char buf[64];
    for (int k = 0; k < cloud.size(); ++k) {
        const double* p = cloud.point(k);
        for (int i = 0; i < cloud.dim; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,", p[i]);
            out += buf;
        }
        int tag = cloud.tags[k];
        if (tag < 0 || tag >= static_cast<int>(letters.size()))
            throw InputError("point letter lies outside the alphabet");
        out += letters[tag];
        out += "\n";
    }
    return out;
}

}  // namespace ss
