#include "tropbt/lifting.hpp"

#include "tropbt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace tropbt {

namespace {

/// Local lifting multiplicity of one tangency in a pair; the partner's end
/// feeds the (4)/(6a) determinant rule.
long local_mult(const TropicalCurve& curve, const TangencyDatum& d, End partner_end) {
    switch (d.type) {
        case TanType::t1: return 0;
        case TanType::t2: return 1;
        case TanType::t3a:
        case TanType::t3b:
        case TanType::t3c: return 2;
        case TanType::t5a: return 2;
        case TanType::t4:
        case TanType::t6a: return det46(curve, d, partner_end);
        default: return 0;
    }
}

long member_weight(const TropicalCurve& curve, const std::vector<TangencyDatum>& tds) {
    if (tds.empty()) return 0;
    if (tds.size() == 1) {
        // Coincident double tangency.
        switch (tds[0].type) {
            case TanType::t5b:
            case TanType::t6b: return 1;
            default: return 0; // (1) and (4) of multiplicity four never lift
        }
    }
    if (tds.size() != 2) fail(errc::internal, "member with more than two tangencies");
    const auto& a = tds[0];
    const auto& b = tds[1];
    if (a.sub == TangencyDatum::Sub::tripod && b.sub == TangencyDatum::Sub::tripod)
        return 4; // the vertex whose star is a tropical line
    // The multiplicity-4 overlap along a full edge does not lift, and no
    // other (3b) pair does either.
    if (a.type == TanType::t3b || b.type == TanType::t3b) return 0;
    if (a.end != End::none && a.end == b.end) return 0; // same-end pair
    return local_mult(curve, a, b.end) * local_mult(curve, b, a.end);
}

} // namespace

std::vector<long> complex_mults(const BitangentClass& refined, const TropicalCurve& curve) {
    std::vector<long> out(refined.cells.size(), 0);
    for (std::size_t i = 0; i < refined.cells.size(); ++i) {
        const auto& c = refined.cells[i];
        if (c.dim != 0) continue;
        out[i] = member_weight(curve, c.tangencies);
    }
    return out;
}

std::vector<long> complex_mults_checked(const BitangentClass& refined, const TropicalCurve& curve,
                                        const std::string& label, const ShapeCatalog& cat) {
    auto w = complex_mults(refined, curve);
    long sum = std::accumulate(w.begin(), w.end(), 0L);
    if (sum != 4)
        fail(errc::weight_mismatch,
             "class weights sum to " + std::to_string(sum) + ", expected 4");
    const CatalogEntry* e = cat.by_label(label);
    if (e) {
        std::vector<long> nonzero_sorted;
        for (long x : w)
            if (x > 0) nonzero_sorted.push_back(x);
        std::sort(nonzero_sorted.rbegin(), nonzero_sorted.rend());
        if (nonzero_sorted != e->weights)
            fail(errc::weight_mismatch, "computed weights disagree with catalog for " + label);
    }
    return w;
}

int SignParams::at(char c) const {
    auto it = values.find(c);
    if (it == values.end())
        fail(errc::parameter_not_found, std::string("condition parameter '") + c + "' unresolved");
    return it->second;
}

namespace {

int sign_at(const SignTable& s, int i, int j) {
    auto it = s.find(LPt{i, j});
    if (it == s.end()) fail(errc::internal, "sign table missing entry");
    return it->second;
}

int pow_sign(int s, int e) { return (e % 2 == 0) ? 1 : s; }

struct TangencyRef {
    const ClassCell* cell = nullptr;
    const TangencyDatum* datum = nullptr;
    const TangencyDatum* partner = nullptr;
};

/// All weight-positive members' tangencies of a given type and end.
std::vector<TangencyRef> find_tangencies(const BitangentClass& cls, const TropicalCurve& curve,
                                         TanType type, End end) {
    std::vector<TangencyRef> out;
    for (const auto& c : cls.cells) {
        if (c.dim != 0) continue;
        if (member_weight(curve, c.tangencies) == 0) continue;
        for (std::size_t i = 0; i < c.tangencies.size(); ++i) {
            const auto& d = c.tangencies[i];
            if (d.type != type) continue;
            if (end != End::none && d.end != end) continue;
            TangencyRef r;
            r.cell = &c;
            r.datum = &d;
            if (c.tangencies.size() == 2) r.partner = &c.tangencies[1 - i];
            out.push_back(r);
        }
    }
    return out;
}

struct DualEdgeInfo {
    LPt lo, hi;   // endpoints, sorted
    LPt apex_lo;  // apex of the flanking triangle on the low side
    LPt apex_hi;  // on the high side
};

/// The dual edge of a carried tangency with its two flanking triangle
/// apexes. For a vertical dual edge the low/high sides are x = u-1 / x = u+1;
/// for a horizontal one they are y = v-1 / y = v+1.
DualEdgeInfo dual_edge_info(const TropicalCurve& curve, const DualSubdivision& sub, int edge) {
    const auto& e = curve.edges[edge];
    DualEdgeInfo info;
    info.lo = std::min(e.dual_a, e.dual_b);
    info.hi = std::max(e.dual_a, e.dual_b);
    int c1 = sub.cell_with_edge(info.lo, info.hi);
    int c2 = sub.cell_with_edge(info.lo, info.hi, c1);
    if (c1 < 0 || c2 < 0) fail(errc::parameter_not_found, "dual edge without two triangles");
    auto apex = [&](int cell) {
        for (const auto& p : sub.cells[cell].points)
            if (!(p == info.lo) && !(p == info.hi)) return p;
        fail(errc::internal, "degenerate dual triangle");
    };
    LPt a1 = apex(c1), a2 = apex(c2);
    bool vertical = info.lo.i == info.hi.i;
    if (vertical) {
        info.apex_lo = (a1.i < info.lo.i) ? a1 : a2;
        info.apex_hi = (a1.i < info.lo.i) ? a2 : a1;
        if (!(info.apex_lo.i == info.lo.i - 1 && info.apex_hi.i == info.lo.i + 1))
            fail(errc::parameter_not_found, "unexpected flanking apexes of a vertical dual edge");
    } else {
        info.apex_lo = (a1.j < info.lo.j) ? a1 : a2;
        info.apex_hi = (a1.j < info.lo.j) ? a2 : a1;
        if (!(info.apex_lo.j == info.lo.j - 1 && info.apex_hi.j == info.lo.j + 1))
            fail(errc::parameter_not_found, "unexpected flanking apexes of a horizontal dual edge");
    }
    return info;
}

TangencyRef unique_tangency(const BitangentClass& cls, const TropicalCurve& curve, TanType type,
                            End end, const char* what) {
    auto v = find_tangencies(cls, curve, type, end);
    if (v.empty()) fail(errc::parameter_not_found, std::string("no tangency for ") + what);
    return v.front();
}

} // namespace

SignParams extract_sign_params(const std::string& condition, const BitangentClass& rep_cls,
                               const TropicalCurve& rep_curve, const DualSubdivision& rep_sub) {
    SignParams p;
    auto expect = [&](bool ok, const std::string& msg) {
        if (!ok) fail(errc::parameter_not_found, "condition " + condition + ": " + msg);
    };
    auto k_from_diag2 = [&]() {
        // Type (2) tangency on the diagonal end: dual edge {(1,1),(k,4-k)}.
        auto refs = find_tangencies(rep_cls, rep_curve, TanType::t2, End::diagonal);
        expect(!refs.empty(), "type (2) diagonal tangency not found");
        int k = -1;
        for (const auto& r : refs) {
            const auto& e = rep_curve.edges[r.datum->curve_edge];
            LPt other;
            if (e.dual_a == LPt{1, 1}) other = e.dual_b;
            else if (e.dual_b == LPt{1, 1}) other = e.dual_a;
            else fail(errc::parameter_not_found, "diagonal (2) carrier not at (1,1)");
            expect(other.i + other.j == 4, "diagonal (2) carrier endpoint off the hypotenuse");
            if (k >= 0 && k != other.i)
                fail(errc::ambiguous_parameter, "conflicting k parameters");
            k = other.i;
        }
        return k;
    };

    // Shared anchors keep the representative orientation honest: a wrongly
    // oriented class fails these checks and canonicalize moves on.
    auto ray_of = [&](const TangencyDatum& d) {
        return d.curve_ray >= 0 ? rep_curve.rays[d.curve_ray].dir : IVec{0, 0};
    };
    auto require_6a_ray = [&](IVec want) {
        for (const auto& c : rep_cls.cells)
            for (const auto& d : c.tangencies)
                if ((d.type == TanType::t6a || d.type == TanType::t6b) && !(ray_of(d) == want))
                    fail(errc::parameter_not_found, "shared end points the wrong way");
    };

    if (condition == "rest") {
        // no parameters
    } else if (condition == "S5" || condition == "LOP") {
        // The off-branch stop member carries a horizontal (3c) with dual edge
        // {(1,0),(1,1)} flanked by (2,2) and (0,i), i = 0 resp. 1.
        auto r = unique_tangency(rep_cls, rep_curve, TanType::t3c, End::horizontal,
                                 "horizontal (3c)");
        auto info = dual_edge_info(rep_curve, rep_sub, r.datum->curve_edge);
        expect(info.lo == LPt{1, 0} && info.hi == LPt{1, 1}, "dual edge must be {(1,0),(1,1)}");
        expect(info.apex_hi == LPt{2, 2}, "right apex must be (2,2)");
        expect(info.apex_lo == (condition == "S5" ? LPt{0, 0} : LPt{0, 1}),
               "marked axis vertex off its row");
    } else if (condition == "K7" || condition == "IN") {
        p.values['k'] = k_from_diag2();
        // Anchor at the origin: some weight-positive radical tangency whose
        // local data touches (0,0).
        bool anchored = false;
        for (const auto& c : rep_cls.cells) {
            if (c.dim != 0) continue;
            for (const auto& d : c.tangencies) {
                if (d.type == TanType::t3a && d.curve_edge >= 0) {
                    auto info = dual_edge_info(rep_curve, rep_sub, d.curve_edge);
                    LPt want_apex = condition == "IN" ? LPt{0, 1} : LPt{0, 0};
                    if (d.end == End::horizontal && info.lo == LPt{1, 0} &&
                        info.hi == LPt{1, 1} && info.apex_lo == want_apex)
                        anchored = true;
                    if (condition == "K7" && d.end == End::vertical && info.lo == LPt{0, 1} &&
                        info.hi == LPt{1, 1} && info.apex_lo == LPt{0, 0})
                        anchored = true;
                } else if (condition == "K7" &&
                           (d.type == TanType::t4 || d.type == TanType::t6a)) {
                    End partner = End::none;
                    for (const auto& o : c.tangencies)
                        if (!(o.location == d.location)) partner = o.end;
                    int carrier = carrier46(rep_curve, d, partner);
                    if (carrier >= 0) {
                        const auto& e = rep_curve.edges[carrier];
                        LPt lo = std::min(e.dual_a, e.dual_b), hi = std::max(e.dual_a, e.dual_b);
                        if (lo == LPt{0, 0} && hi == LPt{1, 1}) anchored = true;
                    }
                }
            }
        }
        expect(anchored, "no radical tangency anchored at the origin");
    } else if (condition == "D" || condition == "EFJ" || condition == "HHp" ||
               condition == "M" || condition == "B" || condition == "G") {
        bool is3a = condition == "G";
        auto r = unique_tangency(rep_cls, rep_curve, is3a ? TanType::t3a : TanType::t3c,
                                 End::horizontal, "horizontal (3)");
        auto info = dual_edge_info(rep_curve, rep_sub, r.datum->curve_edge);
        expect(info.lo.i == 1, "horizontal (3) dual edge not at u=1");
        p.values['v'] = info.lo.j;
        expect(info.apex_lo.i == 0, "left apex not on the axis");
        p.values['i'] = info.apex_lo.j;
        if (condition == "D") {
            expect(info.lo == LPt{1, 0}, "dual edge must be {(1,0),(1,1)}");
            expect(info.apex_hi == LPt{2, 2}, "right apex must be (2,2)");
        } else if (condition == "EFJ") {
            expect(info.apex_hi == LPt{2, 0}, "right apex must be (2,0)");
            require_6a_ray(IVec{0, -1}); // shape (J)
        } else if (condition == "HHp" || condition == "M" || condition == "B") {
            expect(info.apex_hi == LPt{2, 1}, "right apex must be (2,1)");
            if (condition == "HHp") require_6a_ray(IVec{0, -1}); // shape (H')
        } else if (condition == "G") {
            expect(info.lo == LPt{1, 0}, "dual edge must be {(1,0),(1,1)}");
            p.values['k'] = k_from_diag2();
        }
        if (condition == "B") {
            auto rv = unique_tangency(rep_cls, rep_curve, TanType::t3a, End::vertical,
                                      "vertical (3a)");
            auto iv = dual_edge_info(rep_curve, rep_sub, rv.datum->curve_edge);
            expect(iv.lo == LPt{2, 1} && iv.hi == LPt{3, 1}, "vertical dual edge must be {(2,1),(3,1)}");
            expect(iv.apex_lo.j == 0, "bottom apex not on the axis");
            p.values['j'] = iv.apex_lo.i;
        }
    } else if (condition == "A") {
        auto rh = unique_tangency(rep_cls, rep_curve, TanType::t3c, End::horizontal,
                                  "horizontal (3c)");
        auto ih = dual_edge_info(rep_curve, rep_sub, rh.datum->curve_edge);
        expect(ih.lo.i == 1, "horizontal dual edge not at u=1");
        expect(ih.apex_hi == LPt{2, 2}, "horizontal right apex must be (2,2)");
        expect(ih.apex_lo.i == 0, "horizontal left apex not on the axis");
        p.values['v'] = ih.lo.j;
        p.values['i'] = ih.apex_lo.j;
        auto rv = unique_tangency(rep_cls, rep_curve, TanType::t3c, End::vertical, "vertical (3c)");
        auto iv = dual_edge_info(rep_curve, rep_sub, rv.datum->curve_edge);
        expect(iv.lo.j == 1, "vertical dual edge not at v=1");
        expect(iv.apex_hi == LPt{2, 2}, "vertical top apex must be (2,2)");
        expect(iv.apex_lo.j == 0, "vertical bottom apex not on the axis");
        p.values['u'] = iv.lo.i;
        p.values['j'] = iv.apex_lo.i;
    } else if (condition == "C") {
        // Tripod vertex: dual triangle {(1,1),(1,2),(2,1)}; the marked
        // vertices are the apexes of the three surrounding triangles.
        const ClassCell* tri = nullptr;
        for (const auto& c : rep_cls.cells)
            if (c.dim == 0 && !c.tangencies.empty() &&
                c.tangencies[0].sub == TangencyDatum::Sub::tripod)
                tri = &c;
        expect(tri != nullptr, "tripod member not found");
        int cv = rep_curve.vertex_at(tri->p0);
        expect(cv >= 0, "tripod member not at a curve vertex");
        auto dual = rep_curve.vertices[cv].dual;
        std::array<LPt, 3> want = {LPt{1, 1}, LPt{1, 2}, LPt{2, 1}};
        expect(dual == want, "tripod dual triangle must be {(1,1),(1,2),(2,1)}");
        auto apex_beyond = [&](LPt a, LPt b, LPt inner) {
            int c1 = rep_sub.cell_with_edge(a, b);
            int c2 = rep_sub.cell_with_edge(a, b, c1);
            expect(c1 >= 0 && c2 >= 0, "flanking triangles missing");
            for (int c : {c1, c2}) {
                for (const auto& q : rep_sub.cells[c].points) {
                    if (q == a || q == b) continue;
                    if (!(q == inner)) return q;
                }
            }
            fail(errc::parameter_not_found, "apex beyond the tripod triangle not found");
        };
        LPt pi = apex_beyond(LPt{1, 1}, LPt{1, 2}, LPt{2, 1});
        LPt pj = apex_beyond(LPt{1, 1}, LPt{2, 1}, LPt{1, 2});
        LPt pk = apex_beyond(LPt{1, 2}, LPt{2, 1}, LPt{1, 1});
        expect(pi.i == 0, "horizontal-arm mark must lie on x = 0");
        expect(pj.j == 0, "vertical-arm mark must lie on y = 0");
        expect(pk.i + pk.j == 4, "diagonal-arm mark must lie on the hypotenuse");
        p.values['i'] = pi.j;
        p.values['j'] = pj.i;
        p.values['k'] = pk.i;
    } else {
        fail(errc::internal, "unknown condition template '" + condition + "'");
    }
    return p;
}

bool real_condition(const std::string& condition, const SignParams& p, const SignTable& s) {
    auto sg = [&](int i, int j) { return sign_at(s, i, j); };
    if (condition == "rest") return true;
    if (condition == "S5") return sg(0, 0) * sg(2, 2) > 0;
    if (condition == "LOP") return sg(1, 0) * sg(1, 1) * sg(0, 1) * sg(2, 2) < 0;
    if (condition == "K7") return sg(0, 0) * sg(p.at('k'), 4 - p.at('k')) > 0;
    if (condition == "IN")
        return sg(1, 0) * sg(1, 1) * sg(0, 1) * sg(p.at('k'), 4 - p.at('k')) < 0;
    if (condition == "D")
        return pow_sign(-sg(1, 0) * sg(1, 1), p.at('i')) * sg(0, p.at('i')) * sg(2, 2) > 0;
    if (condition == "EFJ")
        return pow_sign(-sg(1, p.at('v')) * sg(1, p.at('v') + 1), p.at('i')) *
                   sg(0, p.at('i')) * sg(2, 0) > 0;
    if (condition == "G")
        return pow_sign(-sg(1, 0) * sg(1, 1), p.at('i')) * sg(0, p.at('i')) *
                   sg(p.at('k'), 4 - p.at('k')) > 0;
    if (condition == "HHp") {
        int sv = sg(1, p.at('v')) * sg(1, p.at('v') + 1);
        return pow_sign(-sv, p.at('i') + 1) * sg(0, p.at('i')) * sg(2, 1) > 0 &&
               sv * sg(2, 1) * sg(4, 0) < 0;
    }
    if (condition == "M") {
        int sv = sg(1, p.at('v')) * sg(1, p.at('v') + 1);
        return pow_sign(-sv, p.at('i') + 1) * sg(0, p.at('i')) * sg(2, 1) > 0 &&
               sv * sg(3, 0) * sg(3, 1) > 0;
    }
    if (condition == "A")
        return pow_sign(-sg(1, p.at('v')) * sg(1, p.at('v') + 1), p.at('i')) *
                       sg(0, p.at('i')) * sg(2, 2) > 0 &&
               pow_sign(-sg(p.at('u'), 1) * sg(p.at('u') + 1, 1), p.at('j')) *
                       sg(p.at('j'), 0) * sg(2, 2) > 0;
    if (condition == "B") {
        int sv = sg(1, p.at('v')) * sg(1, p.at('v') + 1);
        return pow_sign(-sv, p.at('i') + 1) * sg(0, p.at('i')) * sg(2, 1) > 0 &&
               pow_sign(-sg(2, 1), p.at('j') + 1) * pow_sign(sg(3, 1), p.at('j')) * sv *
                       sg(p.at('j'), 0) > 0;
    }
    if (condition == "C") {
        int i = p.at('i'), j = p.at('j'), k = p.at('k');
        int c1 = pow_sign(-sg(1, 1), i + j) * pow_sign(sg(1, 2), i) * pow_sign(sg(2, 1), j) *
                 sg(0, i) * sg(j, 0);
        int c2 = pow_sign(-sg(2, 1), k + j) * pow_sign(sg(1, 2), k) * pow_sign(sg(1, 1), j) *
                 sg(k, 4 - k) * sg(j, 0);
        return c1 > 0 && c2 > 0;
    }
    fail(errc::internal, "unknown condition template '" + condition + "'");
}

// ---------------------------------------------------------------------------
// Independent recomposition from the per-tangency local lifting conditions.
// ---------------------------------------------------------------------------

namespace {

struct QuantitySigns {
    int m = 0, n = 0, mn = 0; // 0 = unknown, else +1/-1

    void set(End end, int s) {
        if (end == End::horizontal) m = s;
        else if (end == End::vertical) mn = s;
        else if (end == End::diagonal) n = s;
    }
    int get(End end) const {
        if (end == End::horizontal) return m;
        if (end == End::vertical) return mn;
        if (end == End::diagonal) return n;
        return 0;
    }
    void propagate() {
        for (int round = 0; round < 2; ++round) {
            if (m == 0 && n != 0 && mn != 0) m = n * mn;
            if (n == 0 && m != 0 && mn != 0) n = m * mn;
            if (mn == 0 && m != 0 && n != 0) mn = m * n;
        }
    }
};

} // namespace

std::optional<bool> real_condition_recomposed(const BitangentClass& rep_cls,
                                              const TropicalCurve& rep_curve,
                                              const DualSubdivision& rep_sub,
                                              const SignTable& signs) {
    auto sg = [&](LPt p) { return sign_at(signs, p.i, p.j); };
    std::optional<bool> verdict;
    bool any_member = false;

    for (const auto& c : rep_cls.cells) {
        if (c.dim != 0) continue;
        long w = member_weight(rep_curve, c.tangencies);
        if (w < 2) continue;
        if (c.tangencies.size() != 2) return std::nullopt; // shapes (II)/(C): handled elsewhere

        // Determined coefficient signs from the two tangencies.
        QuantitySigns q;
        for (const auto& d : c.tangencies) {
            if (d.type == TanType::t2) {
                const auto& e = rep_curve.edges[d.curve_edge];
                q.set(d.end, -sg(e.dual_a) * sg(e.dual_b));
            } else if (d.type == TanType::t3a || d.type == TanType::t3c) {
                auto info = dual_edge_info(rep_curve, rep_sub, d.curve_edge);
                if (d.end == End::horizontal) q.set(End::horizontal, sg(info.lo) * sg(info.hi));
                else if (d.end == End::vertical) q.set(End::vertical, sg(info.lo) * sg(info.hi));
                else return std::nullopt;
            }
        }
        q.propagate();

        bool member_ok = true;
        bool member_known = true;
        for (std::size_t i = 0; i < c.tangencies.size() && member_known; ++i) {
            const auto& d = c.tangencies[i];
            const auto& other = c.tangencies[1 - i];
            switch (d.type) {
                case TanType::t2: break; // rational solution, always real
                case TanType::t3c: {
                    auto info = dual_edge_info(rep_curve, rep_sub, d.curve_edge);
                    int par, body;
                    if (d.end == End::horizontal) {
                        par = info.apex_hi.j + info.apex_lo.j; // r + w
                        body = pow_sign(sg(info.lo) * sg(info.hi), par) * sg(info.apex_hi) *
                               sg(info.apex_lo);
                    } else if (d.end == End::vertical) {
                        par = info.apex_hi.i + info.apex_lo.i;
                        body = pow_sign(sg(info.lo) * sg(info.hi), par) * sg(info.apex_hi) *
                               sg(info.apex_lo);
                    } else {
                        return std::nullopt;
                    }
                    if (pow_sign(-1, par) * body < 0) member_ok = false;
                    break;
                }
                case TanType::t3a: {
                    int sn = q.n;
                    if (sn == 0) {
                        member_known = false;
                        break;
                    }
                    auto info = dual_edge_info(rep_curve, rep_sub, d.curve_edge);
                    int par, body;
                    if (d.end == End::horizontal) {
                        par = info.apex_lo.j + info.lo.j; // w + v
                        body = pow_sign(sg(info.lo) * sg(info.hi), par) * sg(info.apex_lo) *
                               sg(info.hi) * sn;
                    } else if (d.end == End::vertical) {
                        par = info.apex_lo.i + info.lo.i; // w + u
                        body = pow_sign(sg(info.lo) * sg(info.hi), par) * sg(info.apex_lo) *
                               sg(info.hi) * sn;
                    } else {
                        return std::nullopt;
                    }
                    if (pow_sign(-1, par + 1) * body < 0) member_ok = false;
                    break;
                }
                case TanType::t4: {
                    if (other.end == End::none) return std::nullopt;
                    int qs = q.get(other.end);
                    if (qs == 0) {
                        member_known = false;
                        break;
                    }
                    const auto& e = rep_curve.edges[d.curve_edge];
                    if (-qs * sg(e.dual_a) * sg(e.dual_b) < 0) member_ok = false;
                    break;
                }
                case TanType::t5a: {
                    // Dual triangle {A, A-(1,0), A-(0,1)}; the radicand pair
                    // depends on the partner's end.
                    int cv = d.curve_vertex;
                    auto dual = rep_curve.vertices[cv].dual;
                    LPt A = dual[2]; // sorted ascending: the top-right corner
                    LPt h{A.i - 1, A.j}, v{A.i, A.j - 1};
                    bool shape_ok = false;
                    for (auto& t : dual)
                        if (t == h) shape_ok = true;
                    if (!(shape_ok && (dual[0] == v || dual[1] == v))) return std::nullopt;
                    int qs = q.get(other.end);
                    if (qs == 0) {
                        member_known = false;
                        break;
                    }
                    int body;
                    if (other.end == End::diagonal) body = qs * sg(v) * sg(h);
                    else if (other.end == End::horizontal) body = qs * sg(A) * sg(v);
                    else body = qs * sg(A) * sg(h);
                    if (body < 0) member_ok = false;
                    break;
                }
                case TanType::t6a:
                    return std::nullopt; // carrier choice can be ambiguous
                default:
                    return std::nullopt;
            }
        }
        if (!member_known) continue;
        any_member = true;
        if (verdict && *verdict != member_ok)
            fail(errc::condition_mismatch,
                 "weight-two members disagree on the real-lifting condition");
        verdict = member_ok;
    }
    if (!any_member) return std::nullopt;
    return verdict;
}

// ---------------------------------------------------------------------------
// Appendix formulas for multiplicity-four vertex tangencies.
// ---------------------------------------------------------------------------

Mult4Forms mult4_initial_forms(bool left, double a, double b, double c) {
    if (a == 0 || b == 0 || c == 0)
        fail(errc::zero_coefficient, "initial forms require nonzero coefficients");
    Mult4Forms f{};
    if (left) {
        const double s3 = std::sqrt(3.0);
        f.m = -b / (8 * c);
        f.n = 8 * a * c * c / (b * b * b);
        f.x1 = std::pow(b, 4) * (3 + 2 * s3) / (64 * a * c * c * c);
        f.y1 = -b * (1 + s3) / (4 * c);
        f.x2 = std::pow(b, 4) * (3 - 2 * s3) / (64 * a * c * c * c);
        f.y2 = -b * (1 - s3) / (4 * c);
    } else {
        const double s2 = std::sqrt(2.0);
        f.m = -a / b;
        f.n = b * b * b / (4 * a * a * c);
        f.x1 = 4 * a * a * a * c * (1 + s2) / std::pow(b, 4);
        f.y1 = -s2 * a / b;
        f.x2 = 4 * a * a * a * c * (1 - s2) / std::pow(b, 4);
        f.y2 = s2 * a / b;
    }
    return f;
}

Mult4Residual mult4_residual(bool left, double a, double b, double c, const Mult4Forms& f,
                             bool second_point) {
    double x = second_point ? f.x2 : f.x1;
    double y = second_point ? f.y2 : f.y1;
    Mult4Residual r{};
    r.line = y + f.m + f.n * x;
    if (left) {
        r.q = a * x + b * y * y * y + c * y * y * y * y;
        r.wronskian = a - f.n * y * y * (3 * b + 4 * c * y);
    } else {
        r.q = a * x + b * x * y + c * y * y * y * y;
        r.wronskian = (a + b * y) - f.n * (b * x + 4 * c * y * y * y);
    }
    return r;
}

} // namespace tropbt
