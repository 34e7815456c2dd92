#include "cfdyn/render.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cfdyn/diamond.hpp"
#include "cfdyn/natext.hpp"

namespace cfdyn {

namespace {

constexpr double kHalfSpan = 3.5; // each panel shows [-3.5, 3.5]^2
constexpr double kScale = 100.0;  // px per unit
constexpr int kRes = 280;         // scanline samples per axis (0.025 units)

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

/// Maps one panel's math frame to SVG pixels (y flipped).
struct Panel {
    double ox = 0, oy = 0; // pixel offset of the panel's top-left corner

    double px(double x) const { return ox + (x + kHalfSpan) * kScale; }
    double py(double y) const { return oy + (kHalfSpan - y) * kScale; }
    static double size() { return 2 * kHalfSpan * kScale; }
};

/// One path per region: horizontal run-length rectangles over a fixed
/// scan grid. Deterministic because the grid and the scan order are fixed.
std::string fill_path(const std::function<bool(double, double)>& inside, const Panel& p) {
    const double step = 2 * kHalfSpan / kRes;
    std::string d;
    for (int j = 0; j < kRes; ++j) {
        double y = -kHalfSpan + (j + 0.5) * step; // row center, math frame
        double ylo = -kHalfSpan + j * step;
        double yhi = ylo + step;
        int run_start = -1;
        for (int i = 0; i <= kRes; ++i) {
            bool in = i < kRes && inside(-kHalfSpan + (i + 0.5) * step, y);
            if (in && run_start < 0) run_start = i;
            if (!in && run_start >= 0) {
                double x0 = -kHalfSpan + run_start * step;
                double x1 = -kHalfSpan + i * step;
                d += "M" + fmt(p.px(x0)) + " " + fmt(p.py(yhi)) + "H" + fmt(p.px(x1)) + "V" +
                     fmt(p.py(ylo)) + "H" + fmt(p.px(x0)) + "Z";
                run_start = -1;
            }
        }
    }
    return d;
}

std::string path_elem(const std::string& d, const std::string& fill, const char* extra = "") {
    if (d.empty()) return {};
    return "<path d=\"" + d + "\" fill=\"" + fill + "\"" + extra + "/>\n";
}

std::string svg_open(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" +
           fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n" +
           "<rect width=\"" + fmt(w) + "\" height=\"" + fmt(h) + "\" fill=\"#ffffff\"/>\n";
}

const char* kCellFill[5] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1"};

std::string region_fill(const Region& r, const Panel& p, const std::string& fill,
                        const char* extra = "") {
    return path_elem(fill_path([&](double x, double y) { return r.contains({x, y}, 0.0); }, p),
                     fill, extra);
}

std::string axes(const Panel& p) {
    std::string s;
    s += "<line x1=\"" + fmt(p.px(-kHalfSpan)) + "\" y1=\"" + fmt(p.py(0.0)) + "\" x2=\"" +
         fmt(p.px(kHalfSpan)) + "\" y2=\"" + fmt(p.py(0.0)) +
         "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"" + fmt(p.px(0.0)) + "\" y1=\"" + fmt(p.py(-kHalfSpan)) + "\" x2=\"" +
         fmt(p.px(0.0)) + "\" y2=\"" + fmt(p.py(kHalfSpan)) +
         "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    return s;
}

std::string render_regions() {
    Panel p;
    std::string s = svg_open(Panel::size(), Panel::size());
    static const Branch branches[] = {Branch::S, Branch::Tinv, Branch::Uinv, Branch::T,
                                      Branch::U};
    for (int i = 0; i < 5; ++i) {
        Branch b = branches[i];
        auto inside = [b](double x, double y) {
            try {
                return branch_of(FloatComplex{x, y}) == b;
            } catch (const Error&) {
                return false;
            }
        };
        std::string d = fill_path(inside, p);
        s += "<g class=\"branch\" id=\"" + std::string(branch_name(b)) + "\">" +
             path_elem(d, kCellFill[i], " fill-opacity=\"0.85\"") + "</g>\n";
    }
    s += axes(p);
    s += "</svg>\n";
    return s;
}

std::string render_partition() {
    Panel p;
    const auto& ds = DiamondSets::instance();
    std::string s = svg_open(Panel::size(), Panel::size());
    // gray wedge underlay, then the 40 cells xi(W_k) in canonical order
    s += "<g class=\"wedge\">" +
         region_fill(ds.wedge(), p, "#dddddd") + "</g>\n";
    for (const auto& xi : DihedralElement::all()) {
        for (int k = 1; k <= 5; ++k) {
            Region cell = ds.W(k).dihedral_image(xi);
            s += "<g class=\"cell\" id=\"" + xi.name() + "-W" + std::to_string(k) + "\">" +
                 region_fill(cell, p, kCellFill[k - 1], " fill-opacity=\"0.75\"") + "</g>\n";
        }
    }
    s += axes(p);
    s += "</svg>\n";
    return s;
}

std::string render_dne() {
    // five rows (k = 1..5), two columns: Z_k on the left, W_k on the right
    const auto& ds = DiamondSets::instance();
    const auto& ns = NatExtSets::instance();
    double w = 2 * Panel::size(), h = 5 * Panel::size();
    std::string s = svg_open(w, h);
    for (int k = 1; k <= 5; ++k) {
        Panel pz{0, (k - 1) * Panel::size()};
        Panel pw{Panel::size(), (k - 1) * Panel::size()};
        s += "<g class=\"panel\" id=\"Z" + std::to_string(k) + "\">" +
             region_fill(ns.Z(k), pz, kCellFill[k - 1], " fill-opacity=\"0.8\"") + axes(pz) +
             "</g>\n";
        s += "<g class=\"panel\" id=\"W" + std::to_string(k) + "\">" +
             region_fill(ds.W(k), pw, kCellFill[k - 1], " fill-opacity=\"0.8\"") + axes(pw) +
             "</g>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string render_z1hat() {
    Panel p;
    std::string s = svg_open(Panel::size(), Panel::size());
    auto pieces = hatZ_pieces(1);
    static const char* fills[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759"};
    for (std::size_t i = 0; i < pieces.size(); ++i)
        s += "<g class=\"piece\" id=\"piece" + std::to_string(i) + "\">" +
             region_fill(pieces[i], p, fills[i % 4], " fill-opacity=\"0.6\"") + "</g>\n";
    s += axes(p);
    s += "</svg>\n";
    return s;
}

std::string render_psi() {
    // five panels: light trapping part A_k over the dark bijectivity part Z_k
    const auto& ns = NatExtSets::instance();
    double w = 5 * Panel::size(), h = Panel::size();
    std::string s = svg_open(w, h);
    for (int k = 1; k <= 5; ++k) {
        Panel p{(k - 1) * Panel::size(), 0};
        s += "<g class=\"panel\" id=\"psi" + std::to_string(k) + "\">";
        s += region_fill(ns.A(k), p, "#c6dbef"); // light: Psi z-part
        s += region_fill(ns.Z(k), p, "#2b5d8c"); // dark: D z-part
        s += axes(p);
        s += "</g>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace

std::optional<Figure> figure_from_name(const std::string& name) {
    if (name == "regions") return Figure::Regions;
    if (name == "partition") return Figure::Partition;
    if (name == "dne") return Figure::Dne;
    if (name == "z1hat") return Figure::Z1hat;
    if (name == "psi") return Figure::Psi;
    return std::nullopt;
}

std::string render_figure(Figure fig) {
    switch (fig) {
        case Figure::Regions: return render_regions();
        case Figure::Partition: return render_partition();
        case Figure::Dne: return render_dne();
        case Figure::Z1hat: return render_z1hat();
        case Figure::Psi: return render_psi();
    }
    throw Error("unknown figure");
}

} // namespace cfdyn
