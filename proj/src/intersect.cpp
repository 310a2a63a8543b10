#include "tropbt/intersect.hpp"

#include "tropbt/errors.hpp"

#include <algorithm>
#include <map>

namespace tropbt {

const char* end_name(End e) {
    switch (e) {
        case End::horizontal: return "horizontal";
        case End::vertical: return "vertical";
        case End::diagonal: return "diagonal";
        default: return "none";
    }
}

const char* tan_type_name(TanType t) {
    switch (t) {
        case TanType::t1: return "1";
        case TanType::t2: return "2";
        case TanType::t3a: return "3a";
        case TanType::t3b: return "3b";
        case TanType::t3c: return "3c";
        case TanType::t4: return "4";
        case TanType::t5a: return "5a";
        case TanType::t5b: return "5b";
        case TanType::t6a: return "6a";
        case TanType::t6b: return "6b";
    }
    return "?";
}

namespace {

constexpr End k_ends[3] = {End::horizontal, End::vertical, End::diagonal};

struct CurveSpan {
    Span1 span;
    int edge = -1;
    int ray = -1;
};

std::vector<CurveSpan> curve_spans(const TropicalCurve& curve) {
    std::vector<CurveSpan> out;
    out.reserve(curve.edges.size() + curve.rays.size());
    for (std::size_t i = 0; i < curve.edges.size(); ++i) {
        const auto& e = curve.edges[i];
        out.push_back({{curve.vertices[e.v0].pos, e.dir, e.length, false}, static_cast<int>(i), -1});
    }
    for (std::size_t i = 0; i < curve.rays.size(); ++i) {
        const auto& r = curve.rays[i];
        out.push_back({{curve.vertices[r.v0].pos, r.dir, Rat(0), true}, -1, static_cast<int>(i)});
    }
    return out;
}

/// Generic perturbation direction: not parallel to any edge, ray or line end.
Pt pick_perturbation(const TropicalCurve& curve, bool alternate) {
    const std::pair<long, long> primary[] = {{7, 5}, {11, 6}, {13, 9}};
    const std::pair<long, long> secondary[] = {{5, -7}, {9, -11}, {17, -5}};
    for (auto [qden, pnum] : alternate ? secondary : primary) {
        IVec w{qden, pnum};
        bool ok = true;
        for (const auto& e : curve.edges)
            if (det(w, e.dir) == 0) ok = false;
        for (const auto& r : curve.rays)
            if (det(w, r.dir) == 0) ok = false;
        for (End end : k_ends)
            if (det(w, end_dir(end)) == 0) ok = false;
        if (ok) return Pt{Rat(w.x), Rat(w.y)};
    }
    fail(errc::internal, "no generic perturbation direction available");
}

Rat det_pi(const Pt& a, const IVec& b) { return a.x * b.y - a.y * b.x; }
Rat det_ip(const IVec& a, const Pt& b) { return Rat(a.x) * b.y - Rat(a.y) * b.x; }

struct PtLess {
    bool operator()(const Pt& a, const Pt& b) const { return lex_less(a, b); }
};

/// Raw piece of the set-theoretic intersection on one line end:
/// parameter interval [t0, t1] (t1 ignored when unbounded).
struct Piece {
    int end_idx;
    Rat t0, t1;
    bool unbounded = false;
    int curve_edge = -1, curve_ray = -1;
    bool is_segment = false;
};

} // namespace

static IntersectionReport stable_intersection_impl(const TropicalCurve& curve,
                                                   const TropicalLine& line, bool alternate) {
    auto spans = curve_spans(curve);
    Pt w = pick_perturbation(curve, alternate);
    const Pt& v = line.vertex;

    // Stable part: proper intersections of the curve with the line moved by
    // eps*w, multiplicities |det|, limits taken coordinatewise.
    std::map<Pt, long, PtLess> stable;
    for (const auto& cs : spans) {
        const IVec d1 = cs.span.dir;
        for (End end : k_ends) {
            const IVec d2 = end_dir(end);
            long D = det(d1, d2);
            if (D == 0) continue;
            Pt rhs_a = v - cs.span.p0;
            Rat Dr(D);
            Eps s{det_pi(rhs_a, d2) / Dr, det_pi(w, d2) / Dr};
            Eps t{-det_ip(d1, rhs_a) / Dr, -det_ip(d1, w) / Dr};
            if (s.cmp(Eps(Rat(0))) < 0) continue;
            if (!cs.span.unbounded && s.cmp(Eps(cs.span.len)) > 0) continue;
            if (t.cmp(Eps(Rat(0))) < 0) continue;
            Pt limit = cs.span.p0 + s.a * d1;
            stable[limit] += std::labs(D);
        }
    }

    // Set-theoretic part at eps = 0: points and overlap intervals per end.
    std::vector<Piece> pieces;
    for (const auto& cs : spans) {
        const IVec d1 = cs.span.dir;
        for (int k = 0; k < 3; ++k) {
            const IVec d2 = end_dir(k_ends[k]);
            long D = det(d1, d2);
            Pt rhs = v - cs.span.p0;
            if (D != 0) {
                Rat Dr(D);
                Rat s = det_pi(rhs, d2) / Dr;
                Rat t = -det_ip(d1, rhs) / Dr;
                if (s < 0 || (!cs.span.unbounded && s > cs.span.len) || t < 0) continue;
                pieces.push_back({k, t, t, false, cs.edge, cs.ray, false});
            } else {
                if (det_pi(rhs, d1) != 0) continue; // parallel, not collinear
                // Same primitive direction or opposite.
                bool same = (d1 == d2);
                // Parameter of curve span start along the end: p0 = v + tau*d2.
                Rat tau = (d2.x != 0) ? (cs.span.p0.x - v.x) / d2.x : (cs.span.p0.y - v.y) / d2.y;
                if (cs.span.unbounded) {
                    if (same) {
                        Rat lo = std::max(tau, Rat(0));
                        pieces.push_back({k, lo, lo, true, cs.edge, cs.ray, true});
                    } else {
                        // Curve ray opposite to end direction: overlap [0, tau].
                        if (tau < 0) continue;
                        pieces.push_back({k, Rat(0), tau, false, cs.edge, cs.ray, tau > 0});
                    }
                } else {
                    Rat te0 = tau, te1 = tau + (same ? cs.span.len : -cs.span.len);
                    if (te0 > te1) std::swap(te0, te1);
                    Rat lo = std::max(te0, Rat(0));
                    Rat hi = te1;
                    if (hi < lo) continue;
                    pieces.push_back({k, lo, hi, false, cs.edge, cs.ray, hi > lo});
                }
            }
        }
    }

    // Merge pieces into connected components: union intervals per end, then
    // join ends sharing t = 0 (the line vertex).
    struct Interval {
        Rat lo, hi;
        bool unbounded;
        std::vector<int> piece_ids;
    };
    std::vector<std::vector<Interval>> merged(3);
    for (int k = 0; k < 3; ++k) {
        std::vector<int> ids;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (pieces[i].end_idx == k) ids.push_back(static_cast<int>(i));
        std::sort(ids.begin(), ids.end(), [&](int a, int b) { return pieces[a].t0 < pieces[b].t0; });
        for (int id : ids) {
            const auto& p = pieces[id];
            auto& vec = merged[k];
            if (!vec.empty()) {
                auto& last = vec.back();
                bool touches = last.unbounded || p.t0 <= last.hi;
                if (touches) {
                    last.unbounded = last.unbounded || p.unbounded;
                    if (!last.unbounded) last.hi = std::max(last.hi, p.t1);
                    last.piece_ids.push_back(id);
                    continue;
                }
            }
            vec.push_back({p.t0, p.unbounded ? p.t0 : p.t1, p.unbounded, {id}});
        }
    }

    // Component ids: intervals containing t=0 on any end merge together.
    IntersectionReport report;
    std::vector<std::vector<int>> comp_of(3);
    int vertex_comp = -1;
    for (int k = 0; k < 3; ++k) comp_of[k].assign(merged[k].size(), -1);
    for (int k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < merged[k].size(); ++i) {
            if (merged[k][i].lo == 0) {
                if (vertex_comp < 0) {
                    vertex_comp = static_cast<int>(report.components.size());
                    report.components.emplace_back();
                    report.components.back().contains_line_vertex = true;
                }
                comp_of[k][i] = vertex_comp;
            }
        }
    }
    for (int k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < merged[k].size(); ++i) {
            if (comp_of[k][i] < 0) {
                comp_of[k][i] = static_cast<int>(report.components.size());
                report.components.emplace_back();
            }
        }
    }

    // Attach overlap structure.
    for (int k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < merged[k].size(); ++i) {
            auto& comp = report.components[comp_of[k][i]];
            for (int id : merged[k][i].piece_ids) {
                const auto& p = pieces[id];
                if (!p.is_segment) continue;
                IntersectionReport::Overlap ov;
                ov.end = k_ends[k];
                ov.curve_edge = p.curve_edge;
                ov.curve_ray = p.curve_ray;
                ov.t_lo = p.t0;
                ov.t_hi = p.t1;
                ov.unbounded = p.unbounded;
                ov.a = v + p.t0 * end_dir(k_ends[k]);
                if (!p.unbounded) ov.b = v + p.t1 * end_dir(k_ends[k]);
                comp.overlaps.push_back(ov);
            }
        }
    }

    // Assign stable points to components.
    for (const auto& [p, m] : stable) {
        int comp = -1;
        if (p == v && vertex_comp >= 0) comp = vertex_comp;
        if (comp < 0) {
            for (int k = 0; k < 3 && comp < 0; ++k) {
                const IVec d2 = end_dir(k_ends[k]);
                Pt r = p - v;
                if (r.x * d2.y != r.y * d2.x) continue;
                Rat t = (d2.x != 0) ? r.x / d2.x : r.y / d2.y;
                if (t < 0) continue;
                for (std::size_t i = 0; i < merged[k].size(); ++i) {
                    const auto& iv = merged[k][i];
                    if (t >= iv.lo && (iv.unbounded || t <= iv.hi)) {
                        comp = comp_of[k][i];
                        break;
                    }
                }
            }
        }
        if (comp < 0)
            fail(errc::internal, "stable intersection point " + to_string(p) +
                                     " outside the set-theoretic intersection");
        auto& c = report.components[comp];
        c.stable_points.push_back(p);
        c.stable_mults.push_back(m);
        c.mult += m;
        report.total += m;
    }

    // Components that carry no stable mass cannot occur.
    for (const auto& c : report.components)
        if (c.mult == 0) fail(errc::internal, "intersection component with zero stable mass");
    if (report.total != 4)
        fail(errc::internal, "stable intersection total " + std::to_string(report.total) +
                                 ", expected 4");
    return report;
}

IntersectionReport stable_intersection(const TropicalCurve& curve, const TropicalLine& line) {
    return stable_intersection_impl(curve, line, false);
}

IntersectionReport stable_intersection_alt(const TropicalCurve& curve, const TropicalLine& line) {
    return stable_intersection_impl(curve, line, true);
}

bool is_bitangent(const IntersectionReport& report) {
    if (report.components.size() == 1) return report.components[0].mult == 4;
    if (report.components.size() == 2)
        return report.components[0].mult == 2 && report.components[1].mult == 2;
    return false;
}

bool is_bitangent(const TropicalCurve& curve, const TropicalLine& line) {
    return is_bitangent(stable_intersection(curve, line));
}

namespace {

End end_of_point(const TropicalLine& line, const Pt& p) {
    Pt r = p - line.vertex;
    if (r == Pt{}) return End::none;
    for (End end : k_ends) {
        IVec d = end_dir(end);
        if (r.x * d.y == r.y * d.x) {
            Rat t = (d.x != 0) ? r.x / d.x : r.y / d.y;
            if (t > 0) return end;
        }
    }
    return End::none;
}

/// Edge of the vertex star with |det(dir, end_dir)| == 2, the carrier of a
/// type (2) tangency.
int type2_carrier(const TropicalCurve& curve, int vertex, End end) {
    int found = -1;
    const auto& v = curve.vertices[vertex];
    for (int k = 0; k < v.degree_bounded; ++k) {
        const auto& e = curve.edges[v.edges[k]];
        if (std::labs(det(e.dir, end_dir(end))) == 2) {
            if (found >= 0) fail(errc::unclassifiable_tangency, "ambiguous type (2) carrier");
            found = v.edges[k];
        }
    }
    // Rays can carry the tangency as well when the vertex is incident to ends.
    for (int k = 0; k < v.degree_rays; ++k) {
        const auto& r = curve.rays[v.rays[k]];
        if (std::labs(det(r.dir, end_dir(end))) == 2)
            fail(errc::unclassifiable_tangency, "type (2) tangency carried by an unbounded end");
    }
    if (found < 0) fail(errc::unclassifiable_tangency, "type (2) tangency without det-2 edge");
    return found;
}

int edge_through(const TropicalCurve& curve, const Pt& p) {
    for (std::size_t i = 0; i < curve.edges.size(); ++i) {
        const auto& e = curve.edges[i];
        Span1 s{curve.vertices[e.v0].pos, e.dir, e.length, false};
        if (s.contains(p)) return static_cast<int>(i);
    }
    return -1;
}

std::vector<TangencyDatum> component_tangencies(const TropicalCurve& curve,
                                                const TropicalLine& line,
                                                const IntersectionReport::Component& comp) {
    std::vector<TangencyDatum> out;
    const Pt& v = line.vertex;

    std::vector<const IntersectionReport::Overlap*> ray_ovs, seg_ovs;
    for (const auto& ov : comp.overlaps) {
        if (ov.unbounded) ray_ovs.push_back(&ov);
        else seg_ovs.push_back(&ov);
    }

    if (!ray_ovs.empty()) {
        // Overlap along shared unbounded ends: tangency at the adjacent
        // vertex, which must be the line vertex for a bitangent.
        for (const auto* ov : ray_ovs)
            if (!(ov->a == v))
                fail(errc::unclassifiable_tangency,
                     "unbounded overlap not anchored at the line vertex");
        TangencyDatum d;
        d.location = v;
        d.mult = static_cast<int>(comp.mult);
        d.curve_vertex = curve.vertex_at(v);
        if (d.curve_vertex < 0)
            fail(errc::unclassifiable_tangency, "shared end without curve vertex");
        if (ray_ovs.size() == 1 && seg_ovs.empty()) {
            d.type = comp.mult == 4 ? TanType::t6b : TanType::t6a;
            d.curve_ray = ray_ovs[0]->curve_ray;
        } else if (ray_ovs.size() == 2 && seg_ovs.size() == 1 && comp.mult == 2) {
            d.type = TanType::t3b;
            d.sub = TangencyDatum::Sub::shared_rays;
            d.curve_edge = seg_ovs[0]->curve_edge;
        } else {
            fail(errc::unclassifiable_tangency, "unexpected shared-end configuration");
        }
        out.push_back(d);
        return out;
    }

    if (!seg_ovs.empty()) {
        if (seg_ovs.size() == 1) {
            const auto& ov = *seg_ovs[0];
            if (ov.curve_edge < 0)
                fail(errc::unclassifiable_tangency, "bounded overlap on an unbounded end of the curve");
            const auto& e = curve.edges[ov.curve_edge];
            Pt mid{(ov.a.x + ov.b.x) / 2, (ov.a.y + ov.b.y) / 2};
            bool vertex_on_overlap = (ov.t_lo == 0);
            if (comp.mult == 2) {
                TangencyDatum d;
                d.location = mid;
                d.end = ov.end;
                d.curve_edge = ov.curve_edge;
                if (vertex_on_overlap) {
                    if (curve.vertex_at(v) >= 0)
                        fail(errc::unclassifiable_tangency,
                             "multiplicity-2 vertex overlap without shared ends");
                    d.type = TanType::t3a;
                } else {
                    d.type = TanType::t3c;
                }
                out.push_back(d);
            } else {
                // Whole edge, line vertex at one of its endpoints; the
                // tangencies sit at the midpoint and at the vertex.
                int cv = curve.vertex_at(v);
                if (!vertex_on_overlap || cv < 0)
                    fail(errc::unclassifiable_tangency, "multiplicity-4 overlap not anchored at a vertex");
                if (!(curve.vertices[e.v0].pos == v || curve.vertices[e.v1].pos == v))
                    fail(errc::unclassifiable_tangency, "multiplicity-4 overlap vertex off the edge");
                TangencyDatum m1;
                m1.location = mid;
                m1.type = TanType::t3b;
                m1.sub = TangencyDatum::Sub::mid_edge;
                m1.end = ov.end;
                m1.curve_edge = ov.curve_edge;
                TangencyDatum m2;
                m2.location = v;
                m2.type = TanType::t3b;
                m2.sub = TangencyDatum::Sub::at_vertex;
                m2.curve_vertex = cv;
                m2.curve_edge = ov.curve_edge;
                out.push_back(m1);
                out.push_back(m2);
            }
            return out;
        }
        if (seg_ovs.size() == 3 && comp.mult == 4) {
            // Vertex star equal to the line: tangency positions from the
            // chip-firing rule on the sorted adjacent edge lengths.
            int cv = curve.vertex_at(v);
            if (cv < 0) fail(errc::unclassifiable_tangency, "tripod overlap without curve vertex");
            struct Arm {
                Rat len;
                const IntersectionReport::Overlap* ov;
            };
            std::vector<Arm> arms;
            for (const auto* ov : seg_ovs) {
                if (!(ov->a == v) || ov->curve_edge < 0)
                    fail(errc::unclassifiable_tangency, "tripod arm not anchored at the vertex");
                arms.push_back({ov->t_hi - ov->t_lo, ov});
            }
            std::sort(arms.begin(), arms.end(), [](const Arm& x, const Arm& y) { return x.len < y.len; });
            if (arms[0].len == arms[1].len)
                fail(errc::non_generic_curve,
                     "equal minimal edge lengths at a vertex whose star is a tropical line");
            for (int k : {1, 2}) {
                TangencyDatum d;
                Rat dist = (arms[k].len - arms[0].len) / 2;
                d.location = v + dist * end_dir(arms[k].ov->end);
                d.type = TanType::t3b;
                d.sub = TangencyDatum::Sub::tripod;
                d.end = arms[k].ov->end;
                d.curve_edge = arms[k].ov->curve_edge;
                out.push_back(d);
            }
            return out;
        }
        fail(errc::unclassifiable_tangency, "unexpected overlap configuration");
    }

    // Proper (transverse) component: a single point.
    if (comp.stable_points.size() != 1)
        fail(errc::unclassifiable_tangency, "transverse component with several stable points");
    Pt p = comp.stable_points[0];
    TangencyDatum d;
    d.location = p;
    d.mult = static_cast<int>(comp.mult);
    int cv = curve.vertex_at(p);
    if (p == v) {
        if (cv >= 0) {
            d.type = comp.mult == 4 ? TanType::t5b : TanType::t5a;
            d.curve_vertex = cv;
        } else {
            d.type = TanType::t4;
            d.curve_edge = edge_through(curve, p);
            if (d.curve_edge < 0)
                fail(errc::unclassifiable_tangency, "line vertex tangency off every bounded edge");
        }
    } else {
        d.end = end_of_point(line, p);
        if (d.end == End::none)
            fail(errc::internal, "tangency point not on the line");
        if (cv >= 0) {
            if (comp.mult == 4)
                fail(errc::unclassifiable_tangency, "multiplicity-4 tangency of type (2)");
            d.type = TanType::t2;
            d.curve_vertex = cv;
            d.curve_edge = type2_carrier(curve, cv, d.end);
        } else {
            d.type = TanType::t1;
            d.curve_edge = edge_through(curve, p);
            if (d.curve_edge < 0) {
                // Transverse crossing on an unbounded end of the curve is a
                // plain intersection, never a tangency.
                fail(errc::unclassifiable_tangency, "tangency point on an unbounded end");
            }
        }
    }
    out.push_back(d);
    return out;
}

} // namespace

std::vector<TangencyDatum> tangency_points(const TropicalCurve& curve, const TropicalLine& line) {
    IntersectionReport report = stable_intersection(curve, line);
    if (!is_bitangent(report)) fail(errc::not_bitangent, "line is not bitangent");
    std::vector<TangencyDatum> out;
    for (const auto& comp : report.components) {
        auto part = component_tangencies(curve, line, comp);
        out.insert(out.end(), part.begin(), part.end());
    }
    long total = 0;
    for (const auto& d : out) total += d.mult;
    if (total != 4) fail(errc::internal, "tangency multiplicities do not sum to 4");
    return out;
}

TangencyDatum tangency_type(const TropicalCurve& curve, const TropicalLine& line, const Pt& location) {
    for (const auto& d : tangency_points(curve, line))
        if (d.location == location) return d;
    fail(errc::unclassifiable_tangency, "location " + to_string(location) + " is not a tangency");
}

int carrier46(const TropicalCurve& curve, const TangencyDatum& d, End partner_end) {
    if (partner_end == End::none) return -1;
    if (d.type == TanType::t4) return d.curve_edge;
    if (d.type != TanType::t6a && d.type != TanType::t6b) return -1;
    if (d.curve_vertex < 0) return -1;
    const auto& v = curve.vertices[d.curve_vertex];
    int best = -1;
    long best_det = -1;
    for (int k = 0; k < v.degree_bounded; ++k) {
        long dv = std::labs(det(curve.edges[v.edges[k]].dir, end_dir(partner_end)));
        if (dv > best_det) {
            best_det = dv;
            best = v.edges[k];
        }
    }
    return best;
}

long det46(const TropicalCurve& curve, const TangencyDatum& d, End partner_end) {
    int e = carrier46(curve, d, partner_end);
    if (e < 0) return 0;
    return std::labs(det(curve.edges[e].dir, end_dir(partner_end)));
}

} // namespace tropbt
