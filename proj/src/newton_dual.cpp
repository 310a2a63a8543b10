#include "tropbt/newton_dual.hpp"

#include "tropbt/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropbt {

std::vector<std::array<LPt, 3>> DualSubdivision::triangles() const {
    std::vector<std::array<LPt, 3>> out;
    for (const auto& c : cells) {
        if (c.points.size() == 3) {
            std::array<LPt, 3> t = {c.points[0], c.points[1], c.points[2]};
            std::sort(t.begin(), t.end());
            out.push_back(t);
        }
    }
    return out;
}

bool DualSubdivision::has_triangle(std::array<LPt, 3> t) const {
    std::sort(t.begin(), t.end());
    for (auto tri : triangles())
        if (tri == t) return true;
    return false;
}

int DualSubdivision::cell_with_edge(LPt a, LPt b, int except) const {
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
        if (c == except) continue;
        const auto& pts = cells[c].points;
        bool ha = std::find(pts.begin(), pts.end(), a) != pts.end();
        bool hb = std::find(pts.begin(), pts.end(), b) != pts.end();
        if (ha && hb) return c;
    }
    return -1;
}

namespace {

long cross(LPt o, LPt a, LPt b) {
    return static_cast<long>(a.i - o.i) * (b.j - o.j) - static_cast<long>(a.j - o.j) * (b.i - o.i);
}

/// Counterclockwise hull of a small lattice point set (collinear interior
/// boundary points removed).
std::vector<LPt> hull_ccw(std::vector<LPt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    int n = static_cast<int>(pts.size());
    if (n < 3) return pts;
    std::vector<LPt> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

struct PlaneKey {
    Rat alpha, beta, gamma; // z = alpha + beta*i + gamma*j
    bool operator<(const PlaneKey& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        if (beta != o.beta) return beta < o.beta;
        return gamma < o.gamma;
    }
};

bool on_simplex_boundary(LPt a, LPt b) {
    if (a.i == 0 && b.i == 0) return true;
    if (a.j == 0 && b.j == 0) return true;
    if (a.i + a.j == 4 && b.i + b.j == 4) return true;
    return false;
}

} // namespace

DualSubdivision regular_subdivision(const QuarticSpec& spec) {
    const auto& pts = QuarticSpec::support();
    std::set<PlaneKey> planes;

    // Every lower facet is spanned by some non-collinear triple; test each
    // candidate plane against all 15 lifted points.
    for (int a = 0; a < 15; ++a) {
        for (int b = a + 1; b < 15; ++b) {
            for (int c = b + 1; c < 15; ++c) {
                long area2 = cross(pts[a], pts[b], pts[c]);
                if (area2 == 0) continue;
                // Solve z = alpha + beta*i + gamma*j through the three lifts.
                Rat va = spec.val(pts[a]), vb = spec.val(pts[b]), vc = spec.val(pts[c]);
                Rat d(area2);
                Rat beta = ((vb - va) * (pts[c].j - pts[a].j) - (vc - va) * (pts[b].j - pts[a].j)) / d;
                Rat gamma = ((vc - va) * (pts[b].i - pts[a].i) - (vb - va) * (pts[c].i - pts[a].i)) / d;
                Rat alpha = va - beta * pts[a].i - gamma * pts[a].j;
                bool lower = true;
                for (int k = 0; k < 15 && lower; ++k)
                    if (spec.val(pts[k]) < alpha + beta * pts[k].i + gamma * pts[k].j) lower = false;
                if (lower) planes.insert(PlaneKey{alpha, beta, gamma});
            }
        }
    }

    DualSubdivision sub;
    for (const auto& pl : planes) {
        DualSubdivision::Cell cell;
        for (int k = 0; k < 15; ++k)
            if (spec.val(pts[k]) == pl.alpha + pl.beta * pts[k].i + pl.gamma * pts[k].j)
                cell.points.push_back(pts[k]);
        auto h = hull_ccw(cell.points);
        if (h.size() < 3) continue; // ridge or vertex, not a facet
        // Hull vertices first (ccw), remaining lattice points after.
        std::vector<LPt> ordered = h;
        for (const auto& p : cell.points)
            if (std::find(h.begin(), h.end(), p) == h.end()) ordered.push_back(p);
        cell.points = ordered;
        cell.hull_size = static_cast<int>(h.size());
        sub.cells.push_back(cell);
    }

    // Edges between consecutive lattice points along each cell boundary.
    std::map<std::pair<LPt, LPt>, std::vector<int>> edge_cells;
    for (int ci = 0; ci < static_cast<int>(sub.cells.size()); ++ci) {
        const auto& c = sub.cells[ci];
        for (int e = 0; e < c.hull_size; ++e) {
            LPt a = c.points[e], b = c.points[(e + 1) % c.hull_size];
            // Split at lattice points of the cell lying on segment [a, b].
            std::vector<LPt> on_seg = {a, b};
            for (const auto& p : c.points) {
                if (p == a || p == b) continue;
                if (cross(a, b, p) == 0 && std::min(a.i, b.i) <= p.i && p.i <= std::max(a.i, b.i) &&
                    std::min(a.j, b.j) <= p.j && p.j <= std::max(a.j, b.j))
                    on_seg.push_back(p);
            }
            std::sort(on_seg.begin(), on_seg.end());
            for (std::size_t k = 0; k + 1 < on_seg.size(); ++k) {
                auto key = std::make_pair(on_seg[k], on_seg[k + 1]);
                edge_cells[key].push_back(ci);
            }
        }
    }
    for (const auto& [key, cells] : edge_cells) {
        if (cells.size() == 2) {
            sub.interior_edges.push_back({key.first, key.second, cells[0], cells[1]});
        } else if (cells.size() == 1 && on_simplex_boundary(key.first, key.second)) {
            sub.boundary_edges.push_back(key);
        } else {
            fail(errc::internal, "subdivision edge " + to_string(key.first) + "-" +
                                     to_string(key.second) + " with unexpected incidence");
        }
    }
    return sub;
}

bool is_smooth(const DualSubdivision& sub) {
    if (sub.cells.size() != 16) return false;
    for (const auto& c : sub.cells) {
        if (c.points.size() != 3 || c.hull_size != 3) return false;
        if (std::abs(cross(c.points[0], c.points[1], c.points[2])) != 1) return false;
    }
    return true;
}

namespace {

Pt triangle_dual_vertex(const QuarticSpec& spec, const std::array<LPt, 3>& t) {
    // Intersection of the tie lines of the three forms -val + i*X + j*Y.
    long a11 = t[0].i - t[1].i, a12 = t[0].j - t[1].j;
    long a21 = t[0].i - t[2].i, a22 = t[0].j - t[2].j;
    Rat b1 = spec.val(t[0]) - spec.val(t[1]);
    Rat b2 = spec.val(t[0]) - spec.val(t[2]);
    long d = a11 * a22 - a12 * a21;
    if (d == 0) fail(errc::internal, "degenerate dual triangle");
    Rat dr(d);
    return Pt{(b1 * a22 - b2 * a12) / dr, (b2 * a11 - b1 * a21) / dr};
}

} // namespace

TropicalCurve dual_curve(const QuarticSpec& spec, const DualSubdivision& sub) {
    if (!is_smooth(sub)) fail(errc::not_smooth, "dual curve requires a unimodular subdivision");
    TropicalCurve curve;

    for (const auto& c : sub.cells) {
        TropicalCurve::Vertex v;
        v.dual = {c.points[0], c.points[1], c.points[2]};
        std::sort(v.dual.begin(), v.dual.end());
        v.pos = triangle_dual_vertex(spec, v.dual);
        curve.vertices.push_back(v);
    }

    auto attach_edge = [&](int vi, int ei) {
        auto& v = curve.vertices[vi];
        if (v.degree_bounded >= 3) fail(errc::internal, "vertex valence exceeds 3");
        v.edges[v.degree_bounded++] = ei;
    };
    auto attach_ray = [&](int vi, int ri) {
        auto& v = curve.vertices[vi];
        if (v.degree_rays >= 2) fail(errc::internal, "vertex with more than two rays");
        v.rays[v.degree_rays++] = ri;
    };

    for (const auto& ie : sub.interior_edges) {
        TropicalCurve::Edge e;
        e.v0 = ie.cell_left;
        e.v1 = ie.cell_right;
        e.dual_a = ie.a;
        e.dual_b = ie.b;
        Pt w = curve.vertices[e.v1].pos - curve.vertices[e.v0].pos;
        if (w == Pt{}) fail(errc::non_generic_curve, "coincident dual vertices");
        IVec d = rot90(IVec{ie.b.i - ie.a.i, ie.b.j - ie.a.j});
        // Orient d from v0 to v1.
        Rat along = dot(w, d);
        if (along < 0) {
            d = -d;
            along = -along;
        }
        if (w.x * d.y != w.y * d.x)
            fail(errc::internal, "edge direction does not match dual edge");
        e.dir = d;
        e.length = (d.x != 0) ? w.x / d.x : w.y / d.y;
        int ei = static_cast<int>(curve.edges.size());
        curve.edges.push_back(e);
        attach_edge(e.v0, ei);
        attach_edge(e.v1, ei);
    }

    for (const auto& [a, b] : sub.boundary_edges) {
        TropicalCurve::Ray r;
        if (a.j == 0 && b.j == 0) r.dir = {0, -1};
        else if (a.i == 0 && b.i == 0) r.dir = {-1, 0};
        else r.dir = {1, 1};
        r.dual_a = a;
        r.dual_b = b;
        int ci = sub.cell_with_edge(a, b);
        if (ci < 0) fail(errc::internal, "boundary edge without incident cell");
        r.v0 = ci;
        int ri = static_cast<int>(curve.rays.size());
        curve.rays.push_back(r);
        attach_ray(ci, ri);
    }

    // Generic position checks: distinct vertices, and no vertex in the
    // relative interior of a non-incident edge or ray.
    for (std::size_t i = 0; i < curve.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < curve.vertices.size(); ++j)
            if (curve.vertices[i].pos == curve.vertices[j].pos)
                fail(errc::non_generic_curve, "two curve vertices coincide at " +
                                                  to_string(curve.vertices[i].pos));
    for (std::size_t vi = 0; vi < curve.vertices.size(); ++vi) {
        const Pt& p = curve.vertices[vi].pos;
        for (std::size_t ei = 0; ei < curve.edges.size(); ++ei) {
            const auto& e = curve.edges[ei];
            if (e.v0 == static_cast<int>(vi) || e.v1 == static_cast<int>(vi)) continue;
            Span1 s{curve.vertices[e.v0].pos, e.dir, e.length, false};
            if (s.contains(p)) fail(errc::non_generic_curve, "curve vertex on a non-incident edge");
        }
        for (const auto& r : curve.rays) {
            if (r.v0 == static_cast<int>(vi)) continue;
            Span1 s{curve.vertices[r.v0].pos, r.dir, 0, true};
            if (s.contains(p)) fail(errc::non_generic_curve, "curve vertex on a non-incident ray");
        }
    }
    return curve;
}

int TropicalCurve::vertex_at(const Pt& p) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].pos == p) return static_cast<int>(i);
    return -1;
}

bool TropicalCurve::on_curve(const Pt& p) const {
    for (const auto& e : edges) {
        Span1 s{vertices[e.v0].pos, e.dir, e.length, false};
        if (s.contains(p)) return true;
    }
    for (const auto& r : rays) {
        Span1 s{vertices[r.v0].pos, r.dir, 0, true};
        if (s.contains(p)) return true;
    }
    return false;
}

void TropicalCurve::bbox(Rat& xmin, Rat& xmax, Rat& ymin, Rat& ymax) const {
    xmin = xmax = vertices[0].pos.x;
    ymin = ymax = vertices[0].pos.y;
    for (const auto& v : vertices) {
        xmin = std::min(xmin, v.pos.x);
        xmax = std::max(xmax, v.pos.x);
        ymin = std::min(ymin, v.pos.y);
        ymax = std::max(ymax, v.pos.y);
    }
}

MetricGraph skeleton(const TropicalCurve& curve) {
    int n = static_cast<int>(curve.vertices.size());
    int m = static_cast<int>(curve.edges.size());

    // Iteratively strip leaves of the bounded-edge graph.
    std::vector<bool> vertex_alive(n, true), edge_alive(m, true);
    std::vector<int> retract(n);
    for (int i = 0; i < n; ++i) retract[i] = i;
    std::vector<int> degree(n, 0);
    for (const auto& e : curve.edges) {
        ++degree[e.v0];
        ++degree[e.v1];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!vertex_alive[v] || degree[v] != 1) continue;
            for (int ei = 0; ei < m; ++ei) {
                const auto& e = curve.edges[ei];
                if (!edge_alive[ei]) continue;
                if (e.v0 == v || e.v1 == v) {
                    int w = (e.v0 == v) ? e.v1 : e.v0;
                    edge_alive[ei] = false;
                    vertex_alive[v] = false;
                    retract[v] = w;
                    --degree[v];
                    --degree[w];
                    changed = true;
                    break;
                }
            }
        }
    }
    auto chase = [&](int v) {
        while (!vertex_alive[v]) v = retract[v];
        return v;
    };

    MetricGraph g;
    std::vector<int> node_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (vertex_alive[v] && degree[v] >= 3) {
            node_of[v] = static_cast<int>(g.nodes.size());
            g.nodes.push_back({curve.vertices[v].pos, v});
        }
    }
    if (g.nodes.empty()) fail(errc::internal, "skeleton without branch nodes");

    g.vertex_image.resize(n);
    g.edge_image.resize(m);
    for (int ei = 0; ei < m; ++ei) g.edge_image[ei].edge = -1;

    // Walk chains of core edges between branch nodes, suppressing the
    // degree-2 vertices in between.
    std::vector<bool> edge_used(m, false);
    auto core_edges_at = [&](int v) {
        std::vector<int> out;
        for (int ei = 0; ei < m; ++ei)
            if (edge_alive[ei] && (curve.edges[ei].v0 == v || curve.edges[ei].v1 == v))
                out.push_back(ei);
        return out;
    };
    for (int start = 0; start < n; ++start) {
        if (node_of[start] < 0) continue;
        for (int e0 : core_edges_at(start)) {
            if (edge_used[e0]) continue;
            MetricGraph::Edge se;
            se.n0 = node_of[start];
            se.length = 0;
            int v = start, ei = e0;
            while (true) {
                const auto& e = curve.edges[ei];
                bool fwd = (e.v0 == v);
                edge_used[ei] = true;
                g.edge_image[ei].edge = static_cast<int>(g.edges.size());
                g.edge_image[ei].offset0 = fwd ? se.length : se.length + e.length;
                g.edge_image[ei].forward = fwd;
                se.chain.push_back({ei, fwd});
                se.length += e.length;
                int w = fwd ? e.v1 : e.v0;
                if (node_of[w] >= 0) {
                    se.n1 = node_of[w];
                    break;
                }
                // Suppressed degree-2 vertex: record its position on this edge.
                g.vertex_image[w] = {-1, static_cast<int>(g.edges.size()), se.length};
                int next = -1;
                for (int e2 : core_edges_at(w))
                    if (e2 != ei) next = e2;
                if (next < 0) fail(errc::internal, "broken chain in skeleton walk");
                v = w;
                ei = next;
            }
            g.edges.push_back(se);
        }
    }

    for (int v = 0; v < n; ++v) {
        if (node_of[v] >= 0) {
            g.vertex_image[v] = {node_of[v], -1, Rat(0)};
        } else if (!vertex_alive[v]) {
            int w = chase(v);
            if (node_of[w] >= 0) g.vertex_image[v] = {node_of[w], -1, Rat(0)};
            else g.vertex_image[v] = g.vertex_image[w];
        }
        // degree-2 survivors were filled during the chain walk
    }
    for (int ei = 0; ei < m; ++ei) {
        if (g.edge_image[ei].edge >= 0) continue;
        int w = chase(curve.edges[ei].v0);
        if (node_of[w] >= 0) {
            g.edge_image[ei].node = node_of[w];
        } else {
            // Contracted onto a suppressed vertex: keep its edge location.
            g.edge_image[ei].edge = g.vertex_image[w].edge;
            g.edge_image[ei].offset0 = g.vertex_image[w].offset;
            g.edge_image[ei].forward = true;
            auto img = g.vertex_image[w];
            g.edge_image[ei].edge = img.edge;
            g.edge_image[ei].offset0 = img.offset;
            g.edge_image[ei].node = -1;
        }
    }

    if (g.first_betti() != 3) fail(errc::internal, "skeleton Betti number is not 3");

    // Type triple (loops, bi-edges, bridges).
    std::map<std::pair<int, int>, int> parallel;
    for (const auto& e : g.edges) {
        if (e.n0 == e.n1) ++g.loops;
        else ++parallel[{std::min(e.n0, e.n1), std::max(e.n0, e.n1)}];
    }
    for (const auto& [k, cnt] : parallel)
        if (cnt >= 2) ++g.biedges;
    // Bridges: edge whose removal disconnects the graph.
    int nn = static_cast<int>(g.nodes.size());
    for (std::size_t skip = 0; skip < g.edges.size(); ++skip) {
        if (g.edges[skip].n0 == g.edges[skip].n1) continue;
        std::vector<int> comp(nn, -1);
        std::vector<int> stack = {0};
        comp[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                if (e == skip) continue;
                int a = g.edges[e].n0, b = g.edges[e].n1;
                int w = -1;
                if (a == v) w = b;
                else if (b == v) w = a;
                if (w >= 0 && comp[w] < 0) {
                    comp[w] = 0;
                    stack.push_back(w);
                }
            }
        }
        bool connected = true;
        for (int v = 0; v < nn; ++v)
            if (comp[v] < 0) connected = false;
        if (!connected) ++g.bridges;
    }

    // Cycles dual to the interior lattice points.
    for (LPt p : {LPt{1, 1}, LPt{1, 2}, LPt{2, 1}}) {
        std::set<int> skel_edges;
        Rat len(0);
        for (std::size_t ei = 0; ei < curve.edges.size(); ++ei) {
            const auto& e = curve.edges[ei];
            if (e.dual_a == p || e.dual_b == p) {
                len += e.length;
                if (g.edge_image[ei].edge < 0)
                    fail(errc::internal, "dual cycle passes through a contracted edge");
                skel_edges.insert(g.edge_image[ei].edge);
            }
        }
        g.loop_lengths[p] = len;
        g.loops_dual[p] = std::vector<int>(skel_edges.begin(), skel_edges.end());
    }
    return g;
}

} // namespace tropbt
