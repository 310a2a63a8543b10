#include "tropbt/classes.hpp"
#include "tropbt/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropbt {

namespace {

struct PtLess {
    bool operator()(const Pt& a, const Pt& b) const { return lex_less(a, b); }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool compatible(const std::string& cell, const std::string& face) {
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (cell[i] != '0' && cell[i] != face[i]) return false;
    return true;
}

std::vector<IVec> recession_extremes(const std::vector<Line>& lines, const std::string& signs) {
    std::vector<IVec> normals;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (signs[i] == '0') continue;
        int s = signs[i] == '+' ? 1 : -1;
        normals.push_back({s * lines[i].a, s * lines[i].b});
    }
    std::set<IVec> out;
    for (const auto& m : normals) {
        for (IVec cand : {rot90(m), -rot90(m)}) {
            cand = primitive(cand);
            bool ok = true;
            for (const auto& mm : normals)
                if (mm.x * cand.x + mm.y * cand.y < 0) ok = false;
            if (ok) out.insert(cand);
        }
    }
    return std::vector<IVec>(out.begin(), out.end());
}

std::vector<Pt> hull_ccw_pts(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    int n = static_cast<int>(pts.size());
    if (n < 3) return pts;
    auto cross3 = [](const Pt& o, const Pt& a, const Pt& b) -> Rat {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Pt> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

} // namespace

/// Canonical per-member tangency summary; ends and the (4)/(6a) determinant
/// are part of the combinatorial type.
std::string member_summary(const TropicalCurve& curve, const std::vector<TangencyDatum>& tds) {
    std::vector<std::string> parts;
    for (const auto& d : tds) {
        std::ostringstream os;
        os << tan_type_name(d.type) << ":" << d.mult << ":" << static_cast<int>(d.sub) << ":"
           << end_name(d.end);
        if (d.type == TanType::t4 || d.type == TanType::t6a) {
            for (const auto& o : tds) {
                if (o.location == d.location) continue;
                if (o.end == End::none) continue;
                os << ":det" << det46(curve, d, o.end);
            }
        }
        if ((d.type == TanType::t6a || d.type == TanType::t6b) && d.curve_ray >= 0)
            os << ":ray" << to_string(curve.rays[d.curve_ray].dir);
        if (d.sub == TangencyDatum::Sub::shared_rays && d.curve_edge >= 0)
            os << ":arm" << to_string(undirected(curve.edges[d.curve_edge].dir));
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& p : parts) out += p + ";";
    return out;
}

int BitangentClass::dim() const {
    int d = 0;
    for (const auto& c : cells) d = std::max(d, c.dim);
    return d;
}

bool BitangentClass::bounded() const {
    for (const auto& c : cells)
        if (!c.bounded) return false;
    return true;
}

Pt BitangentClass::anchor() const {
    const Pt* best = nullptr;
    for (const auto& c : cells) {
        if (c.dim != 0) continue;
        if (!best || lex_less(c.p0, *best)) best = &c.p0;
    }
    if (!best) {
        for (const auto& c : cells)
            if (!best || lex_less(c.sample, *best)) best = &c.sample;
    }
    return *best;
}

std::vector<BitangentClass> enumerate_classes(const TropicalCurve& curve,
                                              const EnumerateOptions& opts) {
    Arrangement arr = build_arrangement(critical_lines(curve));
    const int n_lines = static_cast<int>(arr.lines.size());

    // Candidate face samples: both sides of every 1-cell, stepping half way
    // to the nearest crossing line.
    struct FaceCand {
        std::string signs;
        Pt sample;
    };
    std::vector<FaceCand> face_cands;
    {
        std::map<std::string, Pt> seen;
        for (const auto& e : arr.edge_cells) {
            IVec nrm{arr.lines[e.line].a, arr.lines[e.line].b};
            for (int side : {+1, -1}) {
                Rat best(0);
                bool found = false;
                for (int j = 0; j < n_lines; ++j) {
                    if (j == e.line) continue;
                    long denom = arr.lines[j].a * nrm.x + arr.lines[j].b * nrm.y;
                    if (denom == 0) continue;
                    Rat t = -arr.lines[j].eval(e.sample) / Rat(denom);
                    if (side > 0 ? t > 0 : t < 0) {
                        if (!found || (side > 0 ? t < best : t > best)) {
                            best = t;
                            found = true;
                        }
                    }
                }
                Rat step = found ? best / 2 : Rat(side);
                Pt s = e.sample + step * nrm;
                std::string key = arr.signs_at(s);
                if (key.find('0') != std::string::npos)
                    fail(errc::internal, "face sample landed on a line");
                seen.emplace(key, s);
            }
        }
        for (auto& [k, p] : seen) face_cands.push_back({k, p});
    }

    // Bitangency probes for every candidate cell: the data-parallel kernel.
    std::vector<Pt> probes;
    probes.reserve(arr.verts.size() + arr.edge_cells.size() + face_cands.size());
    for (const auto& v : arr.verts) probes.push_back(v);
    for (const auto& e : arr.edge_cells) probes.push_back(e.sample);
    for (const auto& f : face_cands) probes.push_back(f.sample);

    std::vector<unsigned char> hit(probes.size(), 0);
    std::string first_error;
    const int total = static_cast<int>(probes.size());
#ifdef _OPENMP
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (int i = 0; i < total; ++i) {
            try {
                hit[i] = is_bitangent(curve, TropicalLine{probes[i]}) ? 1 : 0;
            } catch (const std::exception& ex) {
#pragma omp critical
                if (first_error.empty()) first_error = ex.what();
            }
        }
    } else
#endif
    {
        for (int i = 0; i < total; ++i)
            hit[i] = is_bitangent(curve, TropicalLine{probes[i]}) ? 1 : 0;
    }
    if (!first_error.empty()) fail(errc::internal, "probe kernel failed: " + first_error);

    const int nv = static_cast<int>(arr.verts.size());
    const int ne = static_cast<int>(arr.edge_cells.size());
    auto vert_hit = [&](int i) { return hit[i] != 0; };
    auto edge_hit = [&](int i) { return hit[nv + i] != 0; };
    std::vector<int> pos_faces;
    for (std::size_t i = 0; i < face_cands.size(); ++i)
        if (hit[nv + ne + i]) pos_faces.push_back(static_cast<int>(i));

    std::vector<std::string> vert_signs(nv);
    for (int v = 0; v < nv; ++v) vert_signs[v] = arr.signs_at(arr.verts[v]);

    // Union-find over positive cells via face incidence; closure of the
    // bitangent locus is asserted, not assumed.
    const int nf = static_cast<int>(pos_faces.size());
    auto vid = [&](int v) { return v; };
    auto eid = [&](int e) { return nv + e; };
    auto fid = [&](int f) { return nv + ne + f; };
    UnionFind uf(nv + ne + nf);

    for (int e = 0; e < ne; ++e) {
        if (!edge_hit(e)) continue;
        const auto& ec = arr.edge_cells[e];
        for (int side : {0, 1}) {
            bool bounded = side == 0 ? ec.lo_bounded : ec.hi_bounded;
            int v = side == 0 ? ec.vlo : ec.vhi;
            if (!bounded) continue;
            if (!vert_hit(v))
                fail(errc::internal, "bitangent 1-cell with non-bitangent endpoint");
            uf.unite(eid(e), vid(v));
        }
    }
    for (int f = 0; f < nf; ++f) {
        const auto& fc = face_cands[pos_faces[f]];
        for (int e = 0; e < ne; ++e) {
            if (!compatible(arr.edge_cells[e].signs, fc.signs)) continue;
            if (!edge_hit(e))
                fail(errc::internal, "bitangent 2-cell with non-bitangent boundary edge");
            uf.unite(fid(f), eid(e));
        }
        for (int v = 0; v < nv; ++v) {
            if (!compatible(vert_signs[v], fc.signs)) continue;
            if (!vert_hit(v))
                fail(errc::internal, "bitangent 2-cell with non-bitangent boundary vertex");
            uf.unite(fid(f), vid(v));
        }
    }

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < nv; ++v)
        if (vert_hit(v)) groups[uf.find(vid(v))].push_back(vid(v));
    for (int e = 0; e < ne; ++e)
        if (edge_hit(e)) groups[uf.find(eid(e))].push_back(eid(e));
    for (int f = 0; f < nf; ++f) groups[uf.find(fid(f))].push_back(fid(f));

    if (groups.size() != 7)
        fail(errc::class_count_not_seven,
             "found " + std::to_string(groups.size()) + " bitangent classes, expected 7");

    std::vector<BitangentClass> classes;
    for (auto& [root, members] : groups) {
        std::vector<int> Vs, Es, Fs; // Fs indexes into pos_faces
        for (int id : members) {
            if (id < nv) Vs.push_back(id);
            else if (id < nv + ne) Es.push_back(id - nv);
            else Fs.push_back(id - nv - ne);
        }
        auto face_signs = [&](int fk) -> const std::string& {
            return face_cands[pos_faces[Fs[fk]]].signs;
        };
        auto tangencies_at = [&](const Pt& p) { return tangency_points(curve, TropicalLine{p}); };

        // Per-atom data for the class's 1-cells.
        std::vector<bool> e_spurious(Es.size(), false);
        std::vector<std::vector<int>> e_faces(Es.size());
        std::vector<bool> e_oncurve(Es.size());
        std::vector<std::vector<TangencyDatum>> e_tds(Es.size());
        for (std::size_t k = 0; k < Es.size(); ++k) {
            const auto& ec = arr.edge_cells[Es[k]];
            e_oncurve[k] = curve.on_curve(ec.sample);
            e_tds[k] = tangencies_at(ec.sample);
            for (std::size_t fk = 0; fk < Fs.size(); ++fk)
                if (compatible(ec.signs, face_signs(static_cast<int>(fk))))
                    e_faces[k].push_back(static_cast<int>(fk));
            if (e_faces[k].size() > 2) fail(errc::internal, "1-cell on more than two faces");
        }

        // Merge 2-cells across shared off-curve 1-cells (those subdivisions
        // come from critical lines that do not change the combinatorics).
        UnionFind fuf(static_cast<int>(Fs.size()));
        for (std::size_t k = 0; k < Es.size(); ++k) {
            if (e_oncurve[k] || e_faces[k].size() != 2) continue;
            fuf.unite(e_faces[k][0], e_faces[k][1]);
            e_spurious[k] = true;
        }
        std::vector<int> fgroup(Fs.size(), -1);
        std::map<int, std::vector<int>> fgroups;
        for (std::size_t fk = 0; fk < Fs.size(); ++fk)
            fgroups[fuf.find(static_cast<int>(fk))].push_back(static_cast<int>(fk));
        {
            int g = 0;
            for (auto& [r, fks] : fgroups) {
                for (int fk : fks) fgroup[fk] = g;
                ++g;
            }
        }
        auto e_face_groups = [&](std::size_t k) {
            std::set<int> out;
            for (int f : e_faces[k]) out.insert(fgroup[f]);
            return out;
        };

        // Vertex data.
        std::map<Pt, std::vector<TangencyDatum>, PtLess> v_tds;
        std::map<Pt, std::string, PtLess> v_sum;
        std::map<Pt, std::set<int>, PtLess> v_groups;
        for (int v : Vs) {
            const Pt& p = arr.verts[v];
            v_tds[p] = tangencies_at(p);
            v_sum[p] = member_summary(curve, v_tds[p]);
            for (std::size_t fk = 0; fk < Fs.size(); ++fk)
                if (compatible(vert_signs[v], face_signs(static_cast<int>(fk))))
                    v_groups[p].insert(fgroup[fk]);
        }

        // Kept 1-cells and their endpoint map.
        std::vector<int> kept_es;
        for (std::size_t k = 0; k < Es.size(); ++k)
            if (!e_spurious[k]) kept_es.push_back(static_cast<int>(k));
        std::map<Pt, std::vector<int>, PtLess> end_map;
        for (int k : kept_es) {
            const auto& ec = arr.edge_cells[Es[k]];
            if (ec.lo_bounded) end_map[ec.lo].push_back(k);
            if (ec.hi_bounded) end_map[ec.hi].push_back(k);
        }

        // Spurious vertices: straight interior points of 1-dimensional parts
        // or of 2-cell boundaries, and points buried inside merged 2-cells.
        std::map<Pt, bool, PtLess> v_spurious;
        for (int v : Vs) {
            const Pt& p = arr.verts[v];
            bool spur = false;
            auto it = end_map.find(p);
            if (it != end_map.end()) {
                if (it->second.size() == 2 && curve.vertex_at(p) < 0) {
                    std::size_t k1 = it->second[0], k2 = it->second[1];
                    const auto& e1 = arr.edge_cells[Es[k1]];
                    const auto& e2 = arr.edge_cells[Es[k2]];
                    if (e1.line == e2.line && e_oncurve[k1] == e_oncurve[k2] &&
                        e_face_groups(k1) == e_face_groups(k2) &&
                        member_summary(curve, e_tds[k1]) == member_summary(curve, e_tds[k2]) &&
                        member_summary(curve, e_tds[k1]) == v_sum[p] &&
                        e_oncurve[k1] == curve.on_curve(p))
                        spur = true;
                }
            } else if (!v_groups[p].empty()) {
                spur = true;
            }
            v_spurious[p] = spur;
        }

        struct PendingCell {
            ClassCell cell;
            std::vector<int> atoms_e;
            std::vector<int> atoms_f;
        };
        std::vector<PendingCell> pend0, pend1, pend2;

        // Intrinsic 2-cells.
        std::vector<int> group_cell; // fgroup id -> pend2 index
        group_cell.assign(fgroups.size(), -1);
        {
            int g = 0;
            for (auto& [r, fks] : fgroups) {
                PendingCell pc;
                pc.cell.dim = 2;
                std::set<IVec> rec;
                std::vector<Pt> corner_pts;
                for (int fk : fks) {
                    for (const auto& d : recession_extremes(arr.lines, face_signs(fk)))
                        rec.insert(d);
                    for (int v = 0; v < nv; ++v)
                        if (compatible(vert_signs[v], face_signs(fk)))
                            corner_pts.push_back(arr.verts[v]);
                    pc.atoms_f.push_back(fk);
                }
                pc.cell.recession.assign(rec.begin(), rec.end());
                pc.cell.bounded = pc.cell.recession.empty();
                pc.cell.hull = hull_ccw_pts(corner_pts);
                pc.cell.sample = face_cands[pos_faces[Fs[fks[0]]]].sample;
                pc.cell.tangencies = tangencies_at(pc.cell.sample);
                group_cell[g] = static_cast<int>(pend2.size());
                pend2.push_back(std::move(pc));
                ++g;
            }
        }

        // Intrinsic 1-cells: contiguous runs of kept intervals on each line,
        // merged across spurious vertices.
        {
            std::map<int, std::vector<int>> by_line;
            for (int k : kept_es) by_line[arr.edge_cells[Es[k]].line].push_back(k);
            for (auto& [line, ks] : by_line) {
                std::sort(ks.begin(), ks.end(), [&](int a, int b) {
                    return arr.edge_cells[Es[a]].interval < arr.edge_cells[Es[b]].interval;
                });
                std::vector<std::vector<int>> runs;
                for (int k : ks) {
                    bool extend = false;
                    if (!runs.empty()) {
                        int prev = runs.back().back();
                        const auto& pe = arr.edge_cells[Es[prev]];
                        const auto& ce = arr.edge_cells[Es[k]];
                        if (ce.interval == pe.interval + 1 && pe.hi_bounded &&
                            v_spurious.count(pe.hi) && v_spurious.at(pe.hi))
                            extend = true;
                    }
                    if (extend) runs.back().push_back(k);
                    else runs.push_back({k});
                }
                for (auto& chain : runs) {
                    PendingCell pc;
                    pc.cell.dim = 1;
                    pc.cell.on_curve = e_oncurve[chain[0]];
                    pc.atoms_e = chain;
                    const auto& first = arr.edge_cells[Es[chain.front()]];
                    const auto& last = arr.edge_cells[Es[chain.back()]];
                    IVec dirv = arr.on_line[first.line].dir;
                    if (first.lo_bounded && last.hi_bounded) {
                        pc.cell.bounded = true;
                        pc.cell.p0 = first.lo;
                        pc.cell.p1 = last.hi;
                        pc.cell.dir = undirected(dirv);
                    } else if (first.lo_bounded || last.hi_bounded) {
                        pc.cell.bounded = false;
                        pc.cell.p0 = first.lo_bounded ? first.lo : last.hi;
                        pc.cell.dir = first.lo_bounded ? dirv : -dirv;
                        pc.cell.recession = {pc.cell.dir};
                    } else {
                        pc.cell.bounded = false;
                        pc.cell.p0 = first.sample;
                        pc.cell.dir = undirected(dirv);
                        pc.cell.recession = {undirected(dirv), -undirected(dirv)};
                        std::sort(pc.cell.recession.begin(), pc.cell.recession.end());
                    }
                    int mid = chain[chain.size() / 2];
                    pc.cell.sample = arr.edge_cells[Es[mid]].sample;
                    pc.cell.tangencies = e_tds[mid];
                    pend1.push_back(std::move(pc));
                }
            }
        }

        // Intrinsic 0-cells.
        for (int v : Vs) {
            const Pt& p = arr.verts[v];
            if (v_spurious.at(p)) continue;
            PendingCell pc;
            pc.cell.dim = 0;
            pc.cell.p0 = p;
            pc.cell.sample = p;
            pc.cell.on_curve = curve.on_curve(p);
            pc.cell.curve_vertex = curve.vertex_at(p) >= 0;
            pc.cell.tangencies = v_tds.at(p);
            pend0.push_back(std::move(pc));
        }

        auto key = [](const PendingCell& c) { return c.cell.dim == 0 ? c.cell.p0 : c.cell.sample; };
        auto by_pos = [&](const PendingCell& a, const PendingCell& b) {
            return lex_less(key(a), key(b));
        };
        std::sort(pend0.begin(), pend0.end(), by_pos);
        std::sort(pend1.begin(), pend1.end(), by_pos);
        std::sort(pend2.begin(), pend2.end(), by_pos);

        const int n0 = static_cast<int>(pend0.size());
        const int n1 = static_cast<int>(pend1.size());
        for (int i1 = 0; i1 < n1; ++i1) {
            auto& c1 = pend1[i1].cell;
            for (int i0 = 0; i0 < n0; ++i0) {
                const Pt& p = pend0[i0].cell.p0;
                bool touches = c1.bounded ? (p == c1.p0 || p == c1.p1)
                                          : (c1.recession.size() == 1 && p == c1.p0);
                if (touches) c1.faces.push_back(i0);
            }
        }
        for (std::size_t i2 = 0; i2 < pend2.size(); ++i2) {
            auto& c2 = pend2[i2].cell;
            std::set<std::string> fsigns;
            for (int fk : pend2[i2].atoms_f) fsigns.insert(face_signs(fk));
            for (int i0 = 0; i0 < n0; ++i0) {
                std::string vs = arr.signs_at(pend0[i0].cell.p0);
                for (const auto& fs : fsigns)
                    if (compatible(vs, fs)) {
                        c2.faces.push_back(i0);
                        break;
                    }
            }
            for (int i1 = 0; i1 < n1; ++i1) {
                bool inc = false;
                for (int ka : pend1[i1].atoms_e)
                    for (const auto& fs : fsigns)
                        if (compatible(arr.edge_cells[Es[ka]].signs, fs)) inc = true;
                if (inc) c2.faces.push_back(n0 + i1);
            }
        }

        BitangentClass cls;
        for (auto& c : pend0) cls.cells.push_back(std::move(c.cell));
        for (auto& c : pend1) cls.cells.push_back(std::move(c.cell));
        for (auto& c : pend2) cls.cells.push_back(std::move(c.cell));
        classes.push_back(std::move(cls));
    }

    std::sort(classes.begin(), classes.end(), [](const BitangentClass& a, const BitangentClass& b) {
        return lex_less(a.anchor(), b.anchor());
    });
    return classes;
}

namespace {

bool cell_contains(const ClassCell& c, const Pt& p) {
    if (c.dim == 0) return p == c.p0;
    if (c.dim == 1) {
        if (c.bounded) {
            Pt d = c.p1 - c.p0;
            Pt r = p - c.p0;
            if (det(r, d) != 0) return false;
            Rat t = (d.x != 0) ? r.x / d.x : r.y / d.y;
            return t >= 0 && t <= 1;
        }
        if (c.recession.size() == 1) return Span1{c.p0, c.dir, Rat(0), true}.contains(p);
        // full line
        return det(p - c.p0, Pt{Rat(c.dir.x), Rat(c.dir.y)}) == 0;
    }
    // 2-cell: closed convex hull of the finite vertices plus the recession
    // cone, described by its supporting halfplanes. Candidate boundary lines:
    // hull edges and lines through hull vertices along recession directions.
    const auto& hull = c.hull;
    if (hull.empty()) return false;
    struct Half {
        Pt base;
        IVec dir; // inside is the left side: det(dir, x - base) >= 0 or <= 0
        int side; // +1 left, -1 right
    };
    std::vector<Half> halves;
    auto try_add = [&](const Pt& base, IVec dir) {
        if (dir == IVec{0, 0}) return;
        // Determine the side containing the whole cell.
        bool le = true, ge = true;
        auto clas = [&](const Rat& s) {
            if (s > 0) le = false;
            if (s < 0) ge = false;
        };
        for (const auto& h : hull) clas(det(h - base, Pt{Rat(dir.x), Rat(dir.y)}));
        for (const auto& r : c.recession) clas(Rat(det(r, dir)));
        if (le) halves.push_back({base, dir, -1});
        else if (ge) halves.push_back({base, dir, +1});
    };
    auto rational_dir = [](const Pt& d) {
        mpz_class ax = d.x.get_num() * d.y.get_den();
        mpz_class ay = d.y.get_num() * d.x.get_den();
        mpz_class g = gcd(abs(ax), abs(ay));
        if (g != 0) {
            ax /= g;
            ay /= g;
        }
        if (!ax.fits_slong_p() || !ay.fits_slong_p())
            fail(errc::internal, "hull edge direction overflows");
        return IVec{ax.get_si(), ay.get_si()};
    };
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Pt& a = hull[i];
        const Pt& b = hull[(i + 1) % hull.size()];
        if (a == b) continue;
        try_add(a, rational_dir(b - a));
    }
    for (const auto& h : hull)
        for (const auto& r : c.recession) try_add(h, r);
    for (const auto& hp : halves) {
        Rat s = det(p - hp.base, Pt{Rat(hp.dir.x), Rat(hp.dir.y)});
        if (hp.side > 0 && s < 0) return false;
        if (hp.side < 0 && s > 0) return false;
    }
    return true;
}

} // namespace

bool class_contains(const BitangentClass& cls, const Pt& p) {
    for (const auto& c : cls.cells)
        if (cell_contains(c, p)) return true;
    return false;
}

BitangentClass refine_shape(const BitangentClass& cls, const TropicalCurve& curve) {
    BitangentClass out = cls;
    for (auto& c : out.cells) {
        if (c.dim == 0) {
            c.on_curve = curve.on_curve(c.p0);
            c.curve_vertex = curve.vertex_at(c.p0) >= 0;
        } else if (c.dim == 1) {
            c.on_curve = curve.on_curve(c.sample);
        } else {
            c.on_curve = false;
        }
    }
    return out;
}

BitangentClass transform_class(const S3Element& sigma, const BitangentClass& cls,
                               const TropicalCurve& curve, const TropicalCurve& curve_sigma) {
    BitangentClass out;
    auto map_end = [&](End e) {
        if (e == End::none) return End::none;
        IVec d = sigma.plane_dir(end_dir(e));
        for (End cand : {End::horizontal, End::vertical, End::diagonal})
            if (end_dir(cand) == d) return cand;
        fail(errc::internal, "S3 image of a line end is not a line end");
    };
    auto map_vertex = [&](int vid) {
        if (vid < 0) return -1;
        Pt p = sigma.plane(curve.vertices[vid].pos);
        int w = curve_sigma.vertex_at(p);
        if (w < 0) fail(errc::internal, "transformed curve vertex not found");
        return w;
    };
    auto map_edge = [&](int eid) {
        if (eid < 0) return -1;
        const auto& e = curve.edges[eid];
        Pt a = sigma.plane(curve.vertices[e.v0].pos);
        Pt b = sigma.plane(curve.vertices[e.v1].pos);
        for (std::size_t k = 0; k < curve_sigma.edges.size(); ++k) {
            const auto& f = curve_sigma.edges[k];
            Pt fa = curve_sigma.vertices[f.v0].pos, fb = curve_sigma.vertices[f.v1].pos;
            if ((fa == a && fb == b) || (fa == b && fb == a)) return static_cast<int>(k);
        }
        fail(errc::internal, "transformed curve edge not found");
    };
    auto map_ray = [&](int rid) {
        if (rid < 0) return -1;
        const auto& r = curve.rays[rid];
        Pt a = sigma.plane(curve.vertices[r.v0].pos);
        IVec d = sigma.plane_dir(r.dir);
        for (std::size_t k = 0; k < curve_sigma.rays.size(); ++k) {
            const auto& f = curve_sigma.rays[k];
            if (curve_sigma.vertices[f.v0].pos == a && f.dir == d) return static_cast<int>(k);
        }
        fail(errc::internal, "transformed curve ray not found");
    };

    for (const auto& c : cls.cells) {
        ClassCell n = c;
        n.p0 = sigma.plane(c.p0);
        n.p1 = sigma.plane(c.p1);
        n.sample = sigma.plane(c.sample);
        if (c.dim == 1) n.dir = c.bounded ? undirected(sigma.plane_dir(c.dir)) : sigma.plane_dir(c.dir);
        n.recession.clear();
        for (const auto& d : c.recession) n.recession.push_back(sigma.plane_dir(d));
        std::sort(n.recession.begin(), n.recession.end());
        n.hull.clear();
        for (const auto& h : c.hull) n.hull.push_back(sigma.plane(h));
        if (n.hull.size() >= 3) n.hull = hull_ccw_pts(n.hull);
        n.tangencies.clear();
        for (const auto& t : c.tangencies) {
            TangencyDatum td = t;
            td.location = sigma.plane(t.location);
            td.end = map_end(t.end);
            td.curve_vertex = map_vertex(t.curve_vertex);
            td.curve_edge = map_edge(t.curve_edge);
            td.curve_ray = map_ray(t.curve_ray);
            n.tangencies.push_back(td);
        }
        out.cells.push_back(std::move(n));
    }
    return out;
}

} // namespace tropbt
