#include "tropbt/catalog.hpp"

#include "tropbt/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#ifndef TROPBT_DATA_DIR
#define TROPBT_DATA_DIR "data"
#endif

namespace tropbt {

ShapeCatalog ShapeCatalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::internal, "cannot open shape catalog '" + path + "'");
    ShapeCatalog cat;
    CatalogEntry cur;
    bool open = false;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "shape") {
            if (open) fail(errc::internal, "catalog: nested shape record");
            ls >> cur.label;
            cur.condition.clear();
            cur.weights.clear();
            cur.signature.clear();
            open = true;
        } else if (key == "condition") {
            ls >> cur.condition;
        } else if (key == "weights") {
            long w;
            while (ls >> w) cur.weights.push_back(w);
        } else if (key == "signature") {
            std::string rest;
            std::getline(ls, rest);
            std::size_t i = 0;
            while (i < rest.size() && rest[i] == ' ') ++i;
            cur.signature = rest.substr(i);
        } else if (key == "end") {
            if (!open) fail(errc::internal, "catalog: stray end");
            cat.entries_.push_back(cur);
            open = false;
        } else {
            fail(errc::internal, "catalog: unknown key '" + key + "'");
        }
    }
    if (open) fail(errc::internal, "catalog: unterminated record");
    return cat;
}

const ShapeCatalog& ShapeCatalog::builtin() {
    static const ShapeCatalog cat = [] {
        const char* env = std::getenv("TROPBT_CATALOG");
        std::string path = env ? env : std::string(TROPBT_DATA_DIR) + "/shape_catalog.txt";
        return load_file(path);
    }();
    return cat;
}

const CatalogEntry* ShapeCatalog::by_signature(const std::string& sig) const {
    for (const auto& e : entries_)
        if (e.signature == sig) return &e;
    return nullptr;
}

const CatalogEntry* ShapeCatalog::by_label(const std::string& label) const {
    for (const auto& e : entries_)
        if (e.label == label) return &e;
    return nullptr;
}

std::vector<long> weights(const std::string& label, const ShapeCatalog& cat) {
    const CatalogEntry* e = cat.by_label(label);
    if (!e) fail(errc::unrecognized_shape, "unknown shape label '" + label + "'");
    return e->weights;
}

S3Context S3Context::make(const QuarticSpec& spec) {
    S3Context ctx{spec, {}, {}, {}};
    for (const auto& sigma : S3Element::all()) {
        int k = sigma.index();
        ctx.spec_t[k] = transform_spec(sigma, spec);
        ctx.sub_t[k] = regular_subdivision(ctx.spec_t[k]);
        if (!is_smooth(ctx.sub_t[k]))
            fail(errc::internal, "transformed subdivision lost smoothness");
        ctx.curve_t[k] = dual_curve(ctx.spec_t[k], ctx.sub_t[k]);
    }
    return ctx;
}

namespace {

/// For shape (C) the signature is symmetric, so the representative position
/// is pinned by the metric: the vertical arm strictly shortest, then the
/// horizontal arm no longer than the diagonal one.
bool c_oriented(const BitangentClass& rep, const TropicalCurve& curve) {
    for (const auto& c : rep.cells) {
        if (c.dim != 0) continue;
        bool tripod = false;
        for (const auto& t : c.tangencies)
            if (t.sub == TangencyDatum::Sub::tripod) tripod = true;
        if (!tripod) continue;
        int cv = curve.vertex_at(c.p0);
        if (cv < 0) return false;
        Rat len_h(-1), len_v(-1), len_d(-1);
        const auto& vx = curve.vertices[cv];
        for (int k = 0; k < vx.degree_bounded; ++k) {
            const auto& e = curve.edges[vx.edges[k]];
            IVec d = e.v0 == cv ? e.dir : -e.dir;
            if (d == IVec{-1, 0}) len_h = e.length;
            if (d == IVec{0, -1}) len_v = e.length;
            if (d == IVec{1, 1}) len_d = e.length;
        }
        if (len_h < 0 || len_v < 0 || len_d < 0) return false;
        if (!(len_v < len_h && len_v < len_d))
            return false;
        return len_h <= len_d;
    }
    return true; // not a (C) class
}

} // namespace

Canonicalized canonicalize(const BitangentClass& refined, const S3Context& ctx,
                           const ShapeCatalog& cat) {
    std::optional<Canonicalized> fallback;
    for (const auto& sigma : S3Element::all()) {
        int k = sigma.index();
        BitangentClass rep =
            transform_class(sigma, refined, ctx.curve_t[0], ctx.curve_t[k]);
        rep = refine_shape(rep, ctx.curve_t[k]);
        ShapeSignature sig = signature(rep, ctx.curve_t[k]);
        const CatalogEntry* entry = cat.by_signature(sig.text);
        if (!entry) continue;
        Canonicalized out{entry->label, sigma, std::move(rep), std::move(sig)};
        if (entry->label == "C") {
            if (!c_oriented(out.rep_class, ctx.curve_t[k])) {
                if (!fallback) fallback = std::move(out);
                continue;
            }
        }
        return out;
    }
    if (fallback)
        fail(errc::non_generic_curve,
             "shape (C) class without a metric-generic representative position");
    fail(errc::unrecognized_shape, "class signature matches no catalog entry");
}

} // namespace tropbt
