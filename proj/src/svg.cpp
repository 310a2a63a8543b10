#include "tropbt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tropbt {

namespace {

struct Frame {
    double xmin, xmax, ymin, ymax;
    double scale, width, height, margin;

    double px(const Pt& p) const { return (p.x.get_d() - xmin) * scale + margin; }
    double py(const Pt& p) const { return height - margin - (p.y.get_d() - ymin) * scale; }
};

/// Clip a ray p + t*d to the frame box, returning the exit point.
Pt clip_ray(const Frame& f, const Pt& p, const IVec& d) {
    double best = 1e18;
    double px = p.x.get_d(), py = p.y.get_d();
    if (d.x > 0) best = std::min(best, (f.xmax - px) / d.x);
    if (d.x < 0) best = std::min(best, (f.xmin - px) / d.x);
    if (d.y > 0) best = std::min(best, (f.ymax - py) / d.y);
    if (d.y < 0) best = std::min(best, (f.ymin - py) / d.y);
    if (best < 0) best = 0;
    Rat t(best <= 0 ? 0.0 : best);
    return p + t * d;
}

void arrow_head(std::ostringstream& os, const Frame& f, const Pt& tip, const IVec& d,
                const std::string& color) {
    double dx = d.x, dy = -d.y; // svg y is flipped
    double len = std::sqrt(dx * dx + dy * dy);
    dx /= len;
    dy /= len;
    double x = f.px(tip), y = f.py(tip);
    double s = 6.0;
    os << "<path d=\"M " << x << " " << y << " L " << x - s * dx + s * 0.5 * dy << " "
       << y - s * dy - s * 0.5 * dx << " L " << x - s * dx - s * 0.5 * dy << " "
       << y - s * dy + s * 0.5 * dx << " Z\" fill=\"" << color << "\"/>\n";
}

} // namespace

std::string render_svg(const TropicalCurve& curve, const std::vector<ClassResult>& classes) {
    Frame f{};
    Rat xmin, xmax, ymin, ymax;
    curve.bbox(xmin, xmax, ymin, ymax);
    f.xmin = xmin.get_d();
    f.xmax = xmax.get_d();
    f.ymin = ymin.get_d();
    f.ymax = ymax.get_d();
    for (const auto& cr : classes) {
        for (const auto& c : cr.refined.cells) {
            for (const Pt* p : {&c.p0, &c.p1, &c.sample}) {
                f.xmin = std::min(f.xmin, p->x.get_d());
                f.xmax = std::max(f.xmax, p->x.get_d());
                f.ymin = std::min(f.ymin, p->y.get_d());
                f.ymax = std::max(f.ymax, p->y.get_d());
            }
        }
    }
    double span = std::max(f.xmax - f.xmin, f.ymax - f.ymin);
    if (span <= 0) span = 1;
    f.xmin -= span * 0.08;
    f.xmax += span * 0.08;
    f.ymin -= span * 0.08;
    f.ymax += span * 0.08;
    f.margin = 20;
    f.scale = 760.0 / std::max(f.xmax - f.xmin, f.ymax - f.ymin);
    f.width = (f.xmax - f.xmin) * f.scale + 2 * f.margin;
    f.height = (f.ymax - f.ymin) * f.scale + 2 * f.margin;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width
       << "\" height=\"" << f.height << "\" viewBox=\"0 0 " << f.width << " " << f.height
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // 2-cells first (gray shading), then the curve, then 1- and 0-cells.
    for (const auto& cr : classes) {
        for (const auto& c : cr.refined.cells) {
            if (c.dim != 2) continue;
            std::vector<Pt> poly = c.hull;
            if (!c.recession.empty() && !poly.empty()) {
                // Clip the unbounded cell: push the extreme hull points out
                // along each recession direction.
                std::vector<Pt> extra;
                for (const auto& d : c.recession)
                    for (const auto& p : poly) extra.push_back(clip_ray(f, p, d));
                poly.insert(poly.end(), extra.begin(), extra.end());
                // re-hull in double precision order around the centroid
                double cx = 0, cy = 0;
                for (auto& p : poly) cx += p.x.get_d(), cy += p.y.get_d();
                cx /= poly.size();
                cy /= poly.size();
                std::sort(poly.begin(), poly.end(), [&](const Pt& a, const Pt& b) {
                    return std::atan2(a.y.get_d() - cy, a.x.get_d() - cx) <
                           std::atan2(b.y.get_d() - cy, b.x.get_d() - cx);
                });
            }
            if (poly.size() < 3) continue;
            os << "<polygon points=\"";
            for (const auto& p : poly) os << f.px(p) << "," << f.py(p) << " ";
            os << "\" fill=\"#bbbbbb\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
            if (!c.recession.empty()) {
                Pt tip = clip_ray(f, c.sample, c.recession[0]);
                arrow_head(os, f, tip, c.recession[0], "#888888");
            }
        }
    }

    for (const auto& e : curve.edges) {
        const Pt& a = curve.vertices[e.v0].pos;
        const Pt& b = curve.vertices[e.v1].pos;
        os << "<line x1=\"" << f.px(a) << "\" y1=\"" << f.py(a) << "\" x2=\"" << f.px(b)
           << "\" y2=\"" << f.py(b) << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& r : curve.rays) {
        const Pt& a = curve.vertices[r.v0].pos;
        Pt b = clip_ray(f, a, r.dir);
        os << "<line x1=\"" << f.px(a) << "\" y1=\"" << f.py(a) << "\" x2=\"" << f.px(b)
           << "\" y2=\"" << f.py(b) << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& cr : classes) {
        for (const auto& c : cr.refined.cells) {
            if (c.dim != 1) continue;
            std::string color = c.on_curve ? "#cc2222" : "#000000";
            Pt a = c.p0;
            Pt b = c.bounded ? c.p1 : clip_ray(f, c.p0, c.dir);
            os << "<line x1=\"" << f.px(a) << "\" y1=\"" << f.py(a) << "\" x2=\"" << f.px(b)
               << "\" y2=\"" << f.py(b) << "\" stroke=\"" << color
               << "\" stroke-width=\"3\"/>\n";
            if (!c.bounded) arrow_head(os, f, b, c.dir, color);
        }
    }

    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const auto& cr = classes[ci];
        for (std::size_t k = 0; k < cr.refined.cells.size(); ++k) {
            const auto& c = cr.refined.cells[k];
            if (c.dim != 0) continue;
            std::string color = c.on_curve ? "#cc2222" : "#000000";
            std::string fill = c.curve_vertex ? "white" : color;
            os << "<circle cx=\"" << f.px(c.p0) << "\" cy=\"" << f.py(c.p0)
               << "\" r=\"4\" fill=\"" << fill << "\" stroke=\"" << color
               << "\" stroke-width=\"1.5\"/>\n";
            long w = k < cr.weights.size() ? cr.weights[k] : 0;
            if (w > 0) {
                os << "<text x=\"" << f.px(c.p0) + 6 << "\" y=\"" << f.py(c.p0) - 6
                   << "\" font-size=\"12\">" << w << "</text>\n";
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace tropbt
