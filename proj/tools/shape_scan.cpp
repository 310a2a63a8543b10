// Maintenance tool: scan quartics, label every bitangent class with its
// catalog shape, pick the representative orientation, and emit catalog
// records. Used to build and audit data/shape_catalog.txt.

#include "tropbt/catalog.hpp"
#include "tropbt/classes.hpp"
#include "tropbt/errors.hpp"
#include "tropbt/lifting.hpp"
#include "tropbt/sampler.hpp"
#include "tropbt/signature.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace tropbt;

namespace {

struct Features {
    int n0 = 0, n1 = 0, n2 = 0;
    bool bounded = true;
    bool cell2_unbounded = false;
    int on_curve_0 = 0, curve_vertex_0 = 0;
    int on_curve_1 = 0, rays = 0, markers = 0, shared = 0, tripod = 0;
    std::multiset<std::string> vertex_types;
    std::vector<long> weights;
    std::set<std::string> all_types;
    std::set<std::string> ray_dirs;     // unbounded 1-cell directions
    std::set<std::string> on1_dirs;     // bounded on-curve 1-cell directions
};

Features features_of(const BitangentClass& cls, const TropicalCurve& curve) {
    Features f;
    auto w = complex_mults(cls, curve);
    for (std::size_t i = 0; i < cls.cells.size(); ++i) {
        const auto& c = cls.cells[i];
        if (c.dim == 0) {
            ++f.n0;
            f.on_curve_0 += c.on_curve;
            f.curve_vertex_0 += c.curve_vertex;
            f.vertex_types.insert(member_summary(curve, c.tangencies));
            if (w[i] > 0) f.weights.push_back(w[i]);
            for (const auto& t : c.tangencies) {
                if (t.sub == TangencyDatum::Sub::at_vertex) ++f.markers;
                if (t.sub == TangencyDatum::Sub::shared_rays) ++f.shared;
                if (t.sub == TangencyDatum::Sub::tripod) ++f.tripod;
            }
        } else if (c.dim == 1) {
            ++f.n1;
            f.on_curve_1 += c.on_curve;
            if (!c.bounded) {
                ++f.rays;
                f.ray_dirs.insert(to_string(c.dir));
            } else if (c.on_curve) {
                f.on1_dirs.insert(to_string(undirected(c.dir)));
            }
        } else {
            ++f.n2;
            if (!c.recession.empty()) f.cell2_unbounded = true;
        }
        if (!c.bounded) f.bounded = false;
        for (const auto& t : c.tangencies) f.all_types.insert(tan_type_name(t.type));
    }
    std::sort(f.weights.rbegin(), f.weights.rend());
    return f;
}

bool has_type(const Features& f, const char* t) { return f.all_types.count(t) > 0; }

std::string ray_of_6(const BitangentClass& cls, const TropicalCurve& curve) {
    for (const auto& c : cls.cells)
        for (const auto& t : c.tangencies)
            if ((t.type == TanType::t6a || t.type == TanType::t6b) && t.curve_ray >= 0)
                return to_string(curve.rays[t.curve_ray].dir);
    return "";
}

/// Count weight-positive members carrying a given tangency type.
int members_with(const BitangentClass& cls, const TropicalCurve& curve, TanType type) {
    auto w = complex_mults(cls, curve);
    int n = 0;
    for (std::size_t i = 0; i < cls.cells.size(); ++i) {
        if (cls.cells[i].dim != 0 || w[i] <= 0) continue;
        for (const auto& t : cls.cells[i].tangencies)
            if (t.type == type) {
                ++n;
                break;
            }
    }
    return n;
}

/// Coarse family of a class; names are final except for the bounded
/// two-dimensional family, handled after orientation.
std::string coarse_label(const BitangentClass& cls, const TropicalCurve& curve) {
    Features f = features_of(cls, curve);
    if (has_type(f, "5b") || has_type(f, "6b")) return "II";
    if (f.n0 == 1 && f.n1 == 0 && f.n2 == 0) {
        if (f.tripod) return "C";
        return f.on_curve_0 ? "B" : "A";
    }
    if (f.markers > 0) {
        bool t5a = has_type(f, "5a"), t6a = has_type(f, "6a"), t4 = has_type(f, "4");
        if (f.bounded) return "D";
        if (f.n2 == 0) {
            if (f.markers == 2) return "P";
            if (f.on_curve_1 >= 2) return "O";
            return t5a ? "L" : (t6a ? "Lp" : "?L");
        }
        if (f.markers == 2) return "S";
        if (t4) return "Q";
        if (t6a) return "Qp";
        return "R";
    }
    if (f.n2 > 0 && f.cell2_unbounded) {
        int n3a = members_with(cls, curve, TanType::t3a);
        if (n3a >= 2) return "V";
        if (n3a == 1) return has_type(f, "6a") ? "Up" : "U";
        if (!has_type(f, "6a")) return "T";
        return "T?"; // (T') or (T''): settled in representative position
    }
    if (f.n2 > 0) return "2D?"; // bounded parallelogram family
    if (f.n1 > 0 && f.bounded) {
        if (f.n0 == 3 && f.curve_vertex_0 == 1) return "D";
        if (f.on_curve_0 == 0) return "E";
        if (f.on_curve_0 == 2 && f.on_curve_1 > 0) return "G";
        if (f.on_curve_0 == 1) return "F";
        return "?1B";
    }
    if (f.n1 > 0) {
        bool t4 = has_type(f, "4"), t6a = has_type(f, "6a"), t5a = has_type(f, "5a");
        if (f.n0 == 1 && t4) return "H";
        if (f.n0 == 1 && t6a) return "Hp";
        if (f.shared > 0) {
            if (f.n0 == 2 && t5a) return "M";
            if (f.n0 == 4) return "N";
            if (f.n0 == 3 && t5a) return "I";
            if (f.n0 == 3 && t6a) return "J";
            return "?1Ushared";
        }
        if (t6a && f.n0 == 2) return "K";
        return "?1U";
    }
    return "?";
}

std::string condition_of(const std::string& label) {
    if (label == "A" || label == "B" || label == "C" || label == "D" || label == "G" ||
        label == "M")
        return label;
    if (label == "E" || label == "F" || label == "J") return "EFJ";
    if (label == "H" || label == "Hp") return "HHp";
    if (label == "I" || label == "N") return "IN";
    if (label == "K" || label == "T" || label == "T?" || label == "Tp" || label == "Tpp" ||
        label == "U" || label == "Up" || label == "V")
        return "K7";
    if (label == "L" || label == "O" || label == "P") return "LOP";
    if (label == "Lp" || label == "Q" || label == "Qp" || label == "R" || label == "S")
        return "S5";
    return "rest";
}

/// Representative-orientation test for labels whose condition carries no
/// parameters: all tangency end attributions live on the horizontal and
/// diagonal ends.
bool rest_oriented(const Features& f) {
    for (const auto& s : f.vertex_types)
        if (s.find(":vertical") != std::string::npos) return false;
    return true;
}

/// The (row, col) cell of the bounded-2D classification table, computed on a
/// representative-oriented class. Row is the diagonal-tangency side, col the
/// horizontal one.
std::pair<int, int> table_cell(const BitangentClass& cls, const TropicalCurve& curve) {
    Features f = features_of(cls, curve);
    bool chain_mm = f.ray_dirs.count("(-1,-1)") > 0; // col-side attachment
    bool chain_px = f.ray_dirs.count("(1,0)") > 0;   // row-side attachment
    bool on_e = false, on_ep = false;                // parts of e / e' in B
    for (const auto& d : f.on1_dirs) {
        if (d == "(1,2)" || d == "(2,1)" || d == "(1,1)" || d == "(1,0)" || d == "(0,1)") on_e = true;
        if (d == "(1,-1)" || d == "(2,-1)" || d == "(1,-2)") on_ep = true;
    }
    int row, col;
    if (!chain_px && !on_ep) row = 1;
    else if (!on_ep) row = 2;
    else row = 3;
    if (!chain_mm && !on_e) col = 1;
    else if (!on_e) col = 2;
    else if (!chain_mm) col = 5;
    else col = has_type(f, "6a") || f.curve_vertex_0 > 2 ? 4 : 3;
    return {row, col};
}

std::string label_2d(int row, int col) {
    static const std::map<std::pair<int, int>, std::string> names = {
        {{1, 1}, "W"},  {{2, 1}, "X"},  {{3, 1}, "Y"},  {{2, 2}, "Z"},  {{2, 3}, "AA"},
        {{3, 3}, "BB"}, {{3, 5}, "CC"}, {{3, 4}, "DD"}, {{1, 5}, "EE"}, {{2, 5}, "FF"},
        {{1, 4}, "GG"}, {{2, 4}, "HH"},
    };
    auto it = names.find({row, col});
    return it == names.end() ? "?2D" + std::to_string(row) + std::to_string(col) : it->second;
}

struct Oriented {
    std::string label;
    std::string rep_sig;
    std::string id_sig;
    Features rep_features;
    std::string detail;
};

Oriented label_and_orient(const BitangentClass& refined, const S3Context& ctx) {
    Oriented out;
    out.id_sig = signature(refined, ctx.curve_t[0]).text;
    std::string label = coarse_label(refined, ctx.curve_t[0]);
    std::string condition = condition_of(label);

    for (const auto& sigma : S3Element::all()) {
        int k = sigma.index();
        BitangentClass rep = transform_class(sigma, refined, ctx.curve_t[0], ctx.curve_t[k]);
        rep = refine_shape(rep, ctx.curve_t[k]);
        Features rf = features_of(rep, ctx.curve_t[k]);

        if (condition != "rest") {
            try {
                extract_sign_params(condition, rep, ctx.curve_t[k], ctx.sub_t[k]);
            } catch (const error&) {
                continue;
            }
        } else if (!rest_oriented(rf)) {
            continue;
        }

        std::string final_label = label;
        if (label == "T?") {
            std::string ray = ray_of_6(rep, ctx.curve_t[k]);
            if (ray == "(0,-1)") final_label = "Tp";
            else if (ray == "(-1,0)") final_label = "Tpp";
            else continue;
        } else if (label == "2D?") {
            auto [row, col] = table_cell(rep, ctx.curve_t[k]);
            // Cells (1,2), (1,3), (3,2) are the tau1-images of (2,1), (3,1),
            // (2,3); keep scanning for the canonical orientation.
            if ((row == 1 && (col == 2 || col == 3)) || (row == 3 && col == 2)) continue;
            final_label = label_2d(row, col);
            out.detail = "cell(" + std::to_string(row) + "," + std::to_string(col) + ")";
        } else if (label == "Up") {
            // (U'): second radical member is a shared-end vertex
            std::string ray = ray_of_6(rep, ctx.curve_t[k]);
            out.detail = "ray " + ray;
        }
        out.label = final_label;
        out.rep_sig = signature(rep, ctx.curve_t[k]).text;
        out.rep_features = rf;
        return out;
    }
    out.label = label + "!"; // no orientation found
    return out;
}

struct Entry {
    std::string label;
    std::string condition;
    std::vector<long> weights;
    std::string signature;
    std::string provenance;
};

std::map<std::string, Entry> by_id_sig;
std::map<std::string, std::map<std::string, std::string>> label_reps; // label -> rep sig -> prov

void scan_spec(const QuarticSpec& spec, bool emit_features, const std::string& provenance) {
    S3Context ctx = S3Context::make(spec);
    auto classes = enumerate_classes(ctx.curve());
    int idx = 0;
    for (const auto& cls : classes) {
        ++idx;
        auto refined = refine_shape(cls, ctx.curve());
        std::string prov = provenance + "#" + std::to_string(idx);
        Oriented o = label_and_orient(refined, ctx);
        bool fresh = !by_id_sig.count(o.id_sig);
        if (fresh) {
            Features f = features_of(refined, ctx.curve_t[0]);
            Entry e{o.label, condition_of(o.label), f.weights, o.rep_sig, prov};
            by_id_sig[o.id_sig] = e;
            if (!o.rep_sig.empty()) {
                auto& reps = label_reps[o.label];
                if (!reps.count(o.rep_sig)) reps[o.rep_sig] = prov;
            }
            if (emit_features) {
                std::cout << "== " << o.label << " (" << prov << ") " << o.detail << "\n";
                std::cout << "   n0=" << f.n0 << " n1=" << f.n1 << " n2=" << f.n2
                          << " b=" << f.bounded << " onC0=" << f.on_curve_0
                          << " cv0=" << f.curve_vertex_0 << " onC1=" << f.on_curve_1
                          << " rays=" << f.rays << " markers=" << f.markers
                          << " shared=" << f.shared << " w=";
                for (long w : f.weights) std::cout << w << ",";
                std::cout << " raydirs=";
                for (auto& d : f.ray_dirs) std::cout << d;
                std::cout << " on1=";
                for (auto& d : f.on1_dirs) std::cout << d;
                std::cout << "\n";
                for (const auto& v : f.vertex_types) std::cout << "   vx: " << v << "\n";
            }
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shape catalog scanner"};
    std::vector<std::string> inputs;
    int count = 0;
    unsigned long seed = 1;
    bool features = false;
    std::string emit_path;
    app.add_option("--input", inputs, "quartic documents to scan");
    app.add_option("--random", count, "scan this many random quartics");
    app.add_option("--seed", seed, "rng seed");
    app.add_flag("--features", features, "print feature bundles for new signatures");
    app.add_option("--emit", emit_path, "write catalog records here");
    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& input : inputs) {
            std::ifstream in(input);
            std::ostringstream os;
            os << in.rdbuf();
            scan_spec(parse_spec(os.str()), features, input);
        }
        std::mt19937_64 rng(seed);
        for (int k = 0; k < count; ++k) {
            QuarticSpec spec = random_smooth_quartic(rng);
            try {
                scan_spec(spec, features, "s" + std::to_string(seed) + "-" + std::to_string(k));
            } catch (const error& e) {
                if (!e.is_input_degeneracy())
                    std::cerr << "instance " << k << ": " << errc_name(e.kind()) << ": "
                              << e.what() << "\n";
            }
            if ((k + 1) % 50 == 0)
                std::cerr << "scanned " << k + 1 << ", labels " << label_reps.size() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "scan failed: " << e.what() << "\n";
        return 1;
    }

    std::cout << "labels found " << label_reps.size() << ":\n";
    for (const auto& [label, reps] : label_reps) {
        std::cout << "  " << label << ": " << reps.size() << " rep signature(s)";
        if (reps.size() > 1) std::cout << "  <-- CONFLICT";
        std::cout << "\n";
        if (reps.size() > 1)
            for (const auto& [sig, prov] : reps) std::cout << "      from " << prov << "\n";
    }

    if (!emit_path.empty()) {
        std::map<std::string, Entry> best;
        for (const auto& [sig, e] : by_id_sig) {
            if (e.label.find('?') != std::string::npos || e.label.find('!') != std::string::npos ||
                e.signature.empty())
                continue;
            if (!best.count(e.label)) best[e.label] = e;
        }
        std::ofstream out(emit_path);
        out << "# Shape catalog: 41 bitangent class shapes, their real-lifting\n";
        out << "# condition templates, complex weight multisets, and canonical\n";
        out << "# representative signatures. Generated by tools/shape_scan; audited\n";
        out << "# by tests/test_catalog.\n";
        for (const auto& [label, e] : best) {
            out << "shape " << label << "\n";
            out << "condition " << e.condition << "\n";
            out << "weights";
            for (long w : e.weights) out << " " << w;
            out << "\n";
            out << "signature " << label_reps[label].begin()->first << "\n";
            out << "end\n";
        }
        std::cout << "emitted " << best.size() << " records to " << emit_path << "\n";
    }
    return 0;
}
