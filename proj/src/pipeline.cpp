#include "tropbt/pipeline.hpp"

#include "tropbt/errors.hpp"

#include <numeric>

namespace tropbt {

PipelineResult run_pipeline(const QuarticSpec& spec, const PipelineOptions& opts) {
    const ShapeCatalog& cat = opts.catalog ? *opts.catalog : ShapeCatalog::builtin();

    PipelineResult out;
    out.spec = spec;
    out.sub = regular_subdivision(spec);
    if (!is_smooth(out.sub))
        fail(errc::not_smooth, "the Newton subdivision is not a unimodular triangulation");
    out.curve = dual_curve(spec, out.sub);
    out.graph = skeleton(out.curve);

    S3Context ctx = S3Context::make(spec);
    EnumerateOptions eopts;
    eopts.parallel = opts.parallel;
    auto classes = enumerate_classes(out.curve, eopts);

    for (auto& cls : classes) {
        ClassResult cr;
        cr.refined = refine_shape(cls, out.curve);
        if (opts.check_invariants) {
            for (const auto& cell : cr.refined.cells) {
                for (const auto& d : cell.recession) {
                    if (!(d == IVec{-1, -1} || d == IVec{1, 0} || d == IVec{0, 1}))
                        fail(errc::internal,
                             "unbounded class cell with recession direction " + to_string(d));
                }
            }
        }
        cr.canon = canonicalize(cr.refined, ctx, cat);
        int k = cr.canon.sigma.index();
        const TropicalCurve& rep_curve = ctx.curve_t[k];
        const DualSubdivision& rep_sub = ctx.sub_t[k];
        cr.weights = complex_mults_checked(cr.canon.rep_class, rep_curve, cr.canon.label, cat);

        const CatalogEntry* entry = cat.by_label(cr.canon.label);
        if (!entry) fail(errc::unrecognized_shape, "label missing from catalog");
        SignTable rep_signs = signs_of(ctx.spec_t[k]);
        cr.params = extract_sign_params(entry->condition, cr.canon.rep_class, rep_curve, rep_sub);
        cr.real = real_condition(entry->condition, cr.params, rep_signs);
        auto recomposed =
            real_condition_recomposed(cr.canon.rep_class, rep_curve, rep_sub, rep_signs);
        if (recomposed && *recomposed != cr.real)
            fail(errc::condition_mismatch,
                 "per-tangency recomposition disagrees with the shape table for " +
                     cr.canon.label);
        cr.real_count = cr.real ? 4 : 0;
        cr.totally_real = cr.real;
        out.classes.push_back(std::move(cr));
    }

    for (const auto& cr : out.classes) {
        out.complex_total += std::accumulate(cr.weights.begin(), cr.weights.end(), 0L);
        out.real_total += cr.real_count;
    }
    if (opts.check_invariants) {
        if (out.complex_total != 28)
            fail(errc::weight_mismatch, "complex lifting total is not 28");
        if (out.real_total != 4 && out.real_total != 8 && out.real_total != 16 &&
            out.real_total != 28)
            fail(errc::internal, "real lifting total outside {4,8,16,28}");
    }

    if (opts.run_theta) {
        std::vector<BitangentClass> plain;
        for (const auto& cr : out.classes) plain.push_back(cr.refined);
        out.theta = class_theta_bijection(plain, out.curve, out.graph);
    }
    return out;
}

} // namespace tropbt
