#include "tropbt/theta.hpp"

#include "tropbt/errors.hpp"
#include "tropbt/lifting.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace tropbt {

long Divisor::degree() const {
    long d = 0;
    for (const auto& c : chips) d += c.mult;
    return d;
}

void Divisor::add_node(int node, long mult) { chips.push_back({node, -1, Rat(0), mult}); }

void Divisor::add_edge_point(const MetricGraph& g, int edge, const Rat& offset, long mult) {
    const auto& e = g.edges[edge];
    if (offset == 0) chips.push_back({e.n0, -1, Rat(0), mult});
    else if (offset == e.length) chips.push_back({e.n1, -1, Rat(0), mult});
    else chips.push_back({-1, edge, offset, mult});
}

void Divisor::normalize() {
    std::vector<Chip> out;
    for (const auto& c : chips) {
        bool merged = false;
        for (auto& o : out) {
            if (o.node == c.node && o.edge == c.edge && (c.node >= 0 || o.offset == c.offset)) {
                o.mult += c.mult;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(c);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Chip& c) { return c.mult == 0; }),
              out.end());
    std::sort(out.begin(), out.end(), [](const Chip& a, const Chip& b) {
        if (a.node != b.node) return a.node < b.node;
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.offset < b.offset;
    });
    chips = std::move(out);
}

bool Divisor::same_chips(const Divisor& other) const {
    Divisor a = *this, b = other;
    a.normalize();
    b.normalize();
    if (a.chips.size() != b.chips.size()) return false;
    for (std::size_t i = 0; i < a.chips.size(); ++i) {
        const auto& x = a.chips[i];
        const auto& y = b.chips[i];
        if (x.node != y.node || x.edge != y.edge || x.mult != y.mult) return false;
        if (x.node < 0 && x.offset != y.offset) return false;
    }
    return true;
}

std::vector<CycleClass> cycle_classes(const MetricGraph& g) {
    int n = static_cast<int>(g.nodes.size());
    int m = static_cast<int>(g.edges.size());
    // Spanning tree by BFS; non-tree edges give fundamental cycles.
    std::vector<int> parent_edge(n, -1), parent(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<bool> in_tree(m, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = 0; e < m; ++e) {
            const auto& ed = g.edges[e];
            if (ed.n0 == ed.n1) continue;
            int w = -1;
            if (ed.n0 == v) w = ed.n1;
            else if (ed.n1 == v) w = ed.n0;
            if (w < 0 || seen[w]) continue;
            seen[w] = true;
            parent[w] = v;
            parent_edge[w] = e;
            in_tree[e] = true;
            q.push(w);
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) fail(errc::internal, "metric graph is disconnected");

    std::vector<std::vector<int>> basis; // Z/2 indicator vectors over edges
    for (int e = 0; e < m; ++e) {
        if (in_tree[e]) continue;
        std::vector<int> cyc(m, 0);
        cyc[e] = 1;
        if (g.edges[e].n0 != g.edges[e].n1) {
            // Walk both endpoints to the root, xor the tree paths.
            for (int v : {g.edges[e].n0, g.edges[e].n1}) {
                int x = v;
                while (parent[x] >= 0) {
                    cyc[parent_edge[x]] ^= 1;
                    x = parent[x];
                }
            }
        }
        basis.push_back(cyc);
    }

    int b = static_cast<int>(basis.size());
    std::vector<CycleClass> out;
    for (int mask = 1; mask < (1 << b); ++mask) {
        std::vector<int> acc(m, 0);
        for (int k = 0; k < b; ++k)
            if (mask & (1 << k))
                for (int e = 0; e < m; ++e) acc[e] ^= basis[k][e];
        CycleClass cc;
        for (int e = 0; e < m; ++e)
            if (acc[e]) cc.edges.push_back(e);
        out.push_back(cc);
    }
    return out;
}

namespace {

/// Multi-source shortest path distances from the support of gamma.
std::vector<Rat> distances_from(const MetricGraph& g, const std::set<int>& sources) {
    int n = static_cast<int>(g.nodes.size());
    std::vector<Rat> dist(n, Rat(-1));
    std::vector<bool> done(n, false);
    for (int s : sources) dist[s] = 0;
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && dist[v] >= 0 && (best < 0 || dist[v] < dist[best])) best = v;
        if (best < 0) break;
        done[best] = true;
        for (const auto& e : g.edges) {
            if (e.n0 == e.n1) continue;
            int u = -1;
            if (e.n0 == best) u = e.n1;
            else if (e.n1 == best) u = e.n0;
            if (u < 0) continue;
            Rat nd = dist[best] + e.length;
            if (dist[u] < 0 || nd < dist[u]) dist[u] = nd;
        }
    }
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) fail(errc::internal, "fire front never reaches a node");
    return dist;
}

} // namespace

Divisor zharkov_theta(const MetricGraph& g, const CycleClass& gamma) {
    if (gamma.edges.empty()) fail(errc::internal, "zharkov_theta needs a nonzero cycle class");
    std::set<int> gamma_edges(gamma.edges.begin(), gamma.edges.end());
    std::set<int> sources;
    for (int e : gamma.edges) {
        sources.insert(g.edges[e].n0);
        sources.insert(g.edges[e].n1);
    }
    auto dist = distances_from(g, sources);

    Divisor out;
    // Interior collisions on every edge outside gamma.
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (gamma_edges.count(static_cast<int>(e))) continue;
        const auto& ed = g.edges[e];
        Rat x = (ed.length + dist[ed.n1] - dist[ed.n0]) / 2;
        if (x > 0 && x < ed.length) out.add_edge_point(g, static_cast<int>(e), x, 1);
    }
    // Vertex collisions: several fronts arriving simultaneously.
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
        if (sources.count(v)) continue;
        int fronts = 0;
        for (const auto& ed : g.edges) {
            if (ed.n0 == ed.n1) continue;
            if (ed.n0 == v && dist[ed.n1] + ed.length == dist[v]) ++fronts;
            if (ed.n1 == v && dist[ed.n0] + ed.length == dist[v]) ++fronts;
        }
        if (fronts >= 2) out.add_node(v, fronts - 1);
    }
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// Reduced divisors via Dhar burning on the chip-subdivided graph.
// ---------------------------------------------------------------------------

namespace {

struct SubGraph {
    // Subdivision vertices: original nodes first, then chip/base positions.
    struct SV {
        int node = -1;   // original node id, or
        int edge = -1;   // position on this skeleton edge
        Rat offset;
    };
    std::vector<SV> verts;
    struct SE {
        int a, b;        // subdivision vertex ids
        Rat len;
        int edge;        // original edge
        Rat off_a;       // offset of endpoint a on the original edge
        bool a_is_low;   // orientation: a at smaller offset
    };
    std::vector<SE> edges;
    std::vector<long> chips; // per subdivision vertex

    int vertex_at(int node) const {
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (verts[i].node == node) return static_cast<int>(i);
        return -1;
    }
};

SubGraph subdivide(const MetricGraph& g, const Divisor& d, int base_node) {
    SubGraph sg;
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) sg.verts.push_back({v, -1, Rat(0)});
    std::map<std::pair<int, std::string>, int> edge_points; // (edge, offset str) -> vid
    auto point_on_edge = [&](int edge, const Rat& off) {
        auto key = std::make_pair(edge, to_string(off));
        auto it = edge_points.find(key);
        if (it != edge_points.end()) return it->second;
        int id = static_cast<int>(sg.verts.size());
        sg.verts.push_back({-1, edge, off});
        edge_points.emplace(key, id);
        return id;
    };
    for (const auto& c : d.chips)
        if (c.node < 0) point_on_edge(c.edge, c.offset);
    (void)base_node; // base is always a node

    // Split every original edge at its marked interior points.
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        std::vector<std::pair<Rat, int>> cuts;
        for (std::size_t v = g.nodes.size(); v < sg.verts.size(); ++v)
            if (sg.verts[v].edge == e) cuts.push_back({sg.verts[v].offset, static_cast<int>(v)});
        std::sort(cuts.begin(), cuts.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        int prev = g.edges[e].n0;
        Rat prev_off(0);
        for (const auto& [off, vid] : cuts) {
            sg.edges.push_back({prev, vid, off - prev_off, e, prev_off, true});
            prev = vid;
            prev_off = off;
        }
        sg.edges.push_back({prev, g.edges[e].n1, g.edges[e].length - prev_off, e, prev_off, true});
    }

    sg.chips.assign(sg.verts.size(), 0);
    for (const auto& c : d.chips) {
        int vid = c.node >= 0 ? c.node : point_on_edge(c.edge, c.offset);
        sg.chips[vid] += c.mult;
    }
    return sg;
}

/// Dhar burning: returns the transmitting flags.
std::vector<bool> dhar_burn(const SubGraph& sg, int base_vid) {
    std::vector<bool> lit(sg.verts.size(), false);
    lit[base_vid] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < sg.verts.size(); ++v) {
            if (lit[v]) continue;
            long germs = 0;
            for (const auto& e : sg.edges) {
                if (e.a == static_cast<int>(v) && lit[e.b]) ++germs;
                if (e.b == static_cast<int>(v) && lit[e.a]) ++germs;
            }
            if (germs > sg.chips[v]) {
                lit[v] = true;
                changed = true;
            }
        }
    }
    return lit;
}

} // namespace

Divisor q_reduced(const MetricGraph& g, const Divisor& d_in, int base_node) {
    if (base_node < 0) {
        base_node = 0;
        for (int v = 1; v < static_cast<int>(g.nodes.size()); ++v)
            if (lex_less(g.nodes[v].pos, g.nodes[base_node].pos)) base_node = v;
    }
    Divisor d = d_in;
    d.normalize();
    for (const auto& c : d.chips)
        if (c.mult < 0) fail(errc::internal, "q_reduced expects an effective divisor");

    for (int iter = 0; iter < 100000; ++iter) {
        SubGraph sg = subdivide(g, d, base_node);
        auto lit = dhar_burn(sg, base_node);
        bool all = true;
        for (bool b : lit) all = all && b;
        if (all) return d;

        // Fire the unburnt set: every chip on its boundary slides along each
        // outgoing germ by the least germ length.
        Rat delta(-1);
        struct Move {
            int vid;
            int edge;   // original edge
            Rat from;   // offset on the original edge
            Rat dir;    // +1/-1 in offset coordinates
            Rat limit;  // germ length
        };
        std::vector<Move> moves;
        for (const auto& e : sg.edges) {
            int from = -1, to = -1;
            if (!lit[e.a] && lit[e.b]) from = e.a, to = e.b;
            if (!lit[e.b] && lit[e.a]) from = e.b, to = e.a;
            if (from < 0) continue;
            (void)to;
            Rat from_off = (from == e.a) ? e.off_a : e.off_a + e.len;
            Rat dir = (from == e.a) ? Rat(1) : Rat(-1);
            moves.push_back({from, e.edge, from_off, dir, e.len});
            if (delta < 0 || e.len < delta) delta = e.len;
        }
        if (moves.empty()) fail(errc::internal, "reduction stalled without outgoing germs");

        Divisor next = d;
        for (const auto& m : moves) {
            // Remove one chip at the boundary point, add it delta along.
            const auto& sv = sg.verts[m.vid];
            bool removed = false;
            for (auto& c : next.chips) {
                if (sv.node >= 0 ? (c.node == sv.node)
                                 : (c.edge == sv.edge && c.node < 0 && c.offset == sv.offset)) {
                    if (c.mult <= 0) break;
                    c.mult -= 1;
                    removed = true;
                    break;
                }
            }
            if (!removed) fail(errc::internal, "boundary vertex without a chip to fire");
            next.add_edge_point(g, m.edge, m.from + m.dir * delta, 1);
        }
        next.normalize();
        d = std::move(next);
    }
    fail(errc::internal, "reduced-divisor computation exceeded the iteration cap");
}

bool linearly_equivalent(const MetricGraph& g, const Divisor& d1, const Divisor& d2) {
    if (d1.degree() != d2.degree())
        fail(errc::degree_mismatch, "divisors of different degree are never equivalent");
    Divisor r1 = q_reduced(g, d1);
    Divisor r2 = q_reduced(g, d2);
    return r1.same_chips(r2);
}

bool linearly_equivalent_abel_jacobi(const MetricGraph& g, const Divisor& d1, const Divisor& d2) {
    if (d1.degree() != d2.degree())
        fail(errc::degree_mismatch, "divisors of different degree are never equivalent");
    // Signed difference divisor on the chip-subdivided graph.
    Divisor diff = d1;
    for (auto c : d2.chips) {
        c.mult = -c.mult;
        diff.chips.push_back(c);
    }
    diff.normalize();
    if (diff.chips.empty()) return true;

    SubGraph sg = subdivide(g, diff, 0);
    std::vector<long> charge(sg.verts.size(), 0);
    for (const auto& c : diff.chips) {
        int vid = c.node >= 0 ? c.node : -1;
        if (vid < 0) {
            for (std::size_t v = g.nodes.size(); v < sg.verts.size(); ++v)
                if (sg.verts[v].edge == c.edge && sg.verts[v].offset == c.offset)
                    vid = static_cast<int>(v);
        }
        charge[vid] += c.mult;
    }

    int n = static_cast<int>(sg.verts.size());
    int m = static_cast<int>(sg.edges.size());

    // 1-chain with boundary = charge: route everything to vertex 0 through a
    // spanning tree.
    std::vector<int> parent(n, -1), parent_edge(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<bool> in_tree(m, false);
    std::vector<int> order;
    seen[0] = true;
    order.push_back(0);
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (int e = 0; e < m; ++e) {
            int w = -1;
            if (sg.edges[e].a == v) w = sg.edges[e].b;
            else if (sg.edges[e].b == v) w = sg.edges[e].a;
            if (w < 0 || seen[w]) continue;
            seen[w] = true;
            parent[w] = v;
            parent_edge[w] = e;
            in_tree[e] = true;
            order.push_back(w);
        }
    }
    std::vector<Rat> chain(m, Rat(0));
    // Push charges down the tree from the leaves; chain[e] counts flow from
    // child to parent with sign +1 when directed a->b.
    std::vector<long> acc(charge.begin(), charge.end());
    for (int h = n - 1; h >= 1; --h) {
        int v = order[h];
        int e = parent_edge[v];
        long flow = acc[v]; // send everything to the parent
        if (sg.edges[e].a == v) chain[e] += flow;
        else chain[e] -= flow;
        acc[parent[v]] += flow;
        acc[v] = 0;
    }
    if (acc[0] != 0) return false; // nonzero total degree difference

    // Cycle basis and Gram system.
    std::vector<std::vector<long>> basis;
    for (int e = 0; e < m; ++e) {
        if (in_tree[e]) continue;
        std::vector<long> cyc(m, 0);
        cyc[e] = 1;
        int a = sg.edges[e].a, b = sg.edges[e].b;
        // path b -> a through the tree, oriented
        std::vector<int> pa, pb;
        for (int x = a; x >= 0; x = parent[x]) pa.push_back(x);
        for (int x = b; x >= 0; x = parent[x]) pb.push_back(x);
        std::set<int> on_pa(pa.begin(), pa.end());
        int meet = -1;
        for (int x : pb)
            if (on_pa.count(x)) {
                meet = x;
                break;
            }
        for (int x = b; x != meet; x = parent[x]) {
            int pe = parent_edge[x];
            if (sg.edges[pe].a == x) cyc[pe] += 1;
            else cyc[pe] -= 1;
        }
        for (int x = a; x != meet; x = parent[x]) {
            int pe = parent_edge[x];
            if (sg.edges[pe].a == x) cyc[pe] -= 1;
            else cyc[pe] += 1;
        }
        basis.push_back(cyc);
    }
    int bn = static_cast<int>(basis.size());
    if (bn == 0) return true; // tree: all degree-0 divisors are principal

    std::vector<std::vector<Rat>> A(bn, std::vector<Rat>(bn + 1, Rat(0)));
    for (int i = 0; i < bn; ++i) {
        for (int j = 0; j < bn; ++j) {
            Rat s(0);
            for (int e = 0; e < m; ++e) s += sg.edges[e].len * basis[i][e] * basis[j][e];
            A[i][j] = s;
        }
        Rat r(0);
        for (int e = 0; e < m; ++e) r += sg.edges[e].len * basis[i][e] * chain[e];
        A[i][bn] = r;
    }
    // Gaussian elimination (the Gram matrix is positive definite).
    for (int col = 0; col < bn; ++col) {
        int piv = -1;
        for (int r = col; r < bn; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) fail(errc::internal, "singular Gram matrix");
        std::swap(A[col], A[piv]);
        for (int r = 0; r < bn; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col] / A[col][col];
            for (int cidx = col; cidx <= bn; ++cidx) A[r][cidx] -= f * A[col][cidx];
        }
    }
    for (int i = 0; i < bn; ++i) {
        Rat alpha = A[i][bn] / A[i][i];
        if (alpha.get_den() != 1) return false;
    }
    return true;
}

Divisor::Chip retract_point(const TropicalCurve& curve, const MetricGraph& g, const Pt& p) {
    auto from_vertex = [&](int v) {
        const auto& img = g.vertex_image[v];
        Divisor::Chip c;
        if (img.node >= 0) c.node = img.node;
        else {
            c.edge = img.edge;
            c.offset = img.offset;
            if (c.offset == 0) {
                c.node = g.edges[c.edge].n0;
                c.edge = -1;
            } else if (c.offset == g.edges[c.edge].length) {
                c.node = g.edges[c.edge].n1;
                c.edge = -1;
            }
        }
        return c;
    };
    int v = curve.vertex_at(p);
    if (v >= 0) return from_vertex(v);
    for (std::size_t e = 0; e < curve.edges.size(); ++e) {
        const auto& ed = curve.edges[e];
        Span1 s{curve.vertices[ed.v0].pos, ed.dir, ed.length, false};
        if (!s.contains(p)) continue;
        Pt r = p - s.p0;
        Rat t = (ed.dir.x != 0) ? r.x / ed.dir.x : r.y / ed.dir.y;
        const auto& img = g.edge_image[e];
        if (img.edge < 0) {
            Divisor::Chip c;
            c.node = img.node;
            if (c.node < 0) fail(errc::internal, "contracted edge without node image");
            return c;
        }
        Rat off = img.forward ? Rat(img.offset0 + t) : Rat(img.offset0 - t);
        Divisor::Chip c;
        if (off == 0) c.node = g.edges[img.edge].n0;
        else if (off == g.edges[img.edge].length) c.node = g.edges[img.edge].n1;
        else {
            c.edge = img.edge;
            c.offset = off;
        }
        return c;
    }
    for (const auto& ray : curve.rays) {
        Span1 s{curve.vertices[ray.v0].pos, ray.dir, Rat(0), true};
        if (s.contains(p)) return from_vertex(ray.v0);
    }
    fail(errc::internal, "retract_point: point not on the curve");
}

ThetaBijection class_theta_bijection(const std::vector<BitangentClass>& classes,
                                     const TropicalCurve& curve, const MetricGraph& g) {
    auto gammas = cycle_classes(g);
    ThetaBijection out;
    for (const auto& gamma : gammas) out.thetas.push_back(zharkov_theta(g, gamma));
    for (const auto& th : out.thetas)
        if (th.degree() != g.first_betti() - 1)
            fail(errc::internal, "theta characteristic of wrong degree");

    for (const auto& cls : classes) {
        // Any member with positive lifting weight carries the divisor class.
        const ClassCell* member = nullptr;
        auto weights = complex_mults(cls, curve);
        for (std::size_t i = 0; i < cls.cells.size(); ++i)
            if (weights[i] > 0) {
                member = &cls.cells[i];
                break;
            }
        if (!member) fail(errc::bijection_failure, "class without weight-positive member");
        Divisor d;
        for (const auto& td : member->tangencies) {
            auto chip = retract_point(curve, g, td.location);
            chip.mult = td.mult / 2;
            d.chips.push_back(chip);
        }
        d.normalize();
        int match = -1;
        for (std::size_t k = 0; k < out.thetas.size(); ++k) {
            if (linearly_equivalent(g, d, out.thetas[k])) {
                if (match >= 0)
                    fail(errc::bijection_failure, "tangency divisor matches two theta classes");
                match = static_cast<int>(k);
            }
        }
        if (match < 0) fail(errc::bijection_failure, "tangency divisor matches no theta class");
        out.gamma_of_class.push_back(match);
    }
    std::set<int> used(out.gamma_of_class.begin(), out.gamma_of_class.end());
    if (used.size() != classes.size())
        fail(errc::bijection_failure, "two classes map to the same theta characteristic");
    return out;
}

} // namespace tropbt
