#include "tropbt/classes.hpp"
#include "tropbt/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropbt {

std::vector<Line> critical_lines(const TropicalCurve& curve) {
    std::set<Line> set;
    for (const auto& v : curve.vertices) {
        set.insert(Line::through(v.pos, IVec{1, 0}));
        set.insert(Line::through(v.pos, IVec{0, 1}));
        set.insert(Line::through(v.pos, IVec{1, 1}));
    }
    for (const auto& e : curve.edges) set.insert(Line::through(curve.vertices[e.v0].pos, e.dir));
    for (const auto& r : curve.rays) set.insert(Line::through(curve.vertices[r.v0].pos, r.dir));
    return std::vector<Line>(set.begin(), set.end());
}

namespace {

struct PtLess {
    bool operator()(const Pt& a, const Pt& b) const { return lex_less(a, b); }
};

Pt line_origin(const Line& l) {
    if (l.b != 0) return Pt{Rat(0), l.c / l.b};
    return Pt{l.c / l.a, Rat(0)};
}

Rat param_of(const Arrangement::LineData& ld, const Pt& p) {
    Pt r = p - ld.origin;
    return (ld.dir.x != 0) ? r.x / ld.dir.x : r.y / ld.dir.y;
}

} // namespace

std::string Arrangement::signs_at(const Pt& p) const {
    std::string s(lines.size(), '0');
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int g = sgn(lines[i].eval(p));
        s[i] = g > 0 ? '+' : (g < 0 ? '-' : '0');
    }
    return s;
}

int Arrangement::face_index(const std::string& signs) const {
    for (std::size_t i = 0; i < face_cells.size(); ++i)
        if (face_cells[i].signs == signs) return static_cast<int>(i);
    return -1;
}

int Arrangement::face_of_sample(const Pt& p) {
    std::string key = signs_at(p);
    int idx = face_index(key);
    if (idx >= 0) return idx;
    face_cells.push_back({key, p});
    return static_cast<int>(face_cells.size()) - 1;
}

Arrangement build_arrangement(const std::vector<Line>& lines_in) {
    Arrangement arr;
    {
        std::set<Line> dedup(lines_in.begin(), lines_in.end());
        arr.lines.assign(dedup.begin(), dedup.end());
    }
    const int n = static_cast<int>(arr.lines.size());

    std::map<Pt, int, PtLess> vert_ids;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto p = intersect(arr.lines[i], arr.lines[j]);
            if (!p) continue;
            if (!vert_ids.count(*p)) {
                vert_ids.emplace(*p, static_cast<int>(arr.verts.size()));
                arr.verts.push_back(*p);
            }
        }
    }

    arr.on_line.resize(n);
    for (int i = 0; i < n; ++i) {
        auto& ld = arr.on_line[i];
        ld.origin = line_origin(arr.lines[i]);
        ld.dir = arr.lines[i].direction();
        std::vector<std::pair<Rat, int>> pts;
        for (std::size_t v = 0; v < arr.verts.size(); ++v)
            if (arr.lines[i].contains(arr.verts[v]))
                pts.push_back({param_of(ld, arr.verts[v]), static_cast<int>(v)});
        std::sort(pts.begin(), pts.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [t, v] : pts) {
            ld.params.push_back(t);
            ld.vert_ids.push_back(v);
        }
    }

    for (int i = 0; i < n; ++i) {
        const auto& ld = arr.on_line[i];
        int m = static_cast<int>(ld.params.size());
        int intervals = (m == 0) ? 1 : m + 1;
        for (int k = 0; k < intervals; ++k) {
            Arrangement::EdgeCell e;
            e.line = i;
            e.interval = k;
            if (m == 0) {
                e.sample = ld.origin;
            } else if (k == 0) {
                e.hi_bounded = true;
                e.hi = ld.origin + ld.params[0] * ld.dir;
                e.vhi = ld.vert_ids[0];
                e.sample = ld.origin + (ld.params[0] - 1) * ld.dir;
            } else if (k == m) {
                e.lo_bounded = true;
                e.lo = ld.origin + ld.params[m - 1] * ld.dir;
                e.vlo = ld.vert_ids[m - 1];
                e.sample = ld.origin + (ld.params[m - 1] + 1) * ld.dir;
            } else {
                e.lo_bounded = e.hi_bounded = true;
                e.lo = ld.origin + ld.params[k - 1] * ld.dir;
                e.hi = ld.origin + ld.params[k] * ld.dir;
                e.vlo = ld.vert_ids[k - 1];
                e.vhi = ld.vert_ids[k];
                e.sample = ld.origin + ((ld.params[k - 1] + ld.params[k]) / 2) * ld.dir;
            }
            e.signs = arr.signs_at(e.sample);
            if (e.signs[i] != '0') fail(errc::internal, "edge sample off its own line");
            for (int j = 0; j < n; ++j)
                if (j != i && e.signs[j] == '0')
                    fail(errc::internal, "degenerate edge sample on a foreign line");
            arr.edge_cells.push_back(e);
        }
    }
    return arr;
}

} // namespace tropbt
