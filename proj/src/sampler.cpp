#include "tropbt/sampler.hpp"

#include "tropbt/errors.hpp"
#include "tropbt/newton_dual.hpp"

namespace tropbt {

namespace {

bool heights_smooth(const std::array<long, 15>& h) {
    std::array<CoeffEntry, 15> ents{};
    int k = 0;
    for (const auto& p : QuarticSpec::support()) {
        ents[k].p = p;
        ents[k].val = Rat(h[k]);
        ents[k].sign = +1;
        ents[k].lead = 1;
        ++k;
    }
    return is_smooth(regular_subdivision(QuarticSpec{ents}));
}

} // namespace

QuarticSpec random_smooth_quartic(std::mt19937_64& rng, int* attempts_out) {
    // Uniform-height rejection has a vanishing acceptance rate for
    // unimodularity, so the sampler walks the unimodular chambers of the
    // secondary fan instead: start from a convex lift and apply random
    // height moves, keeping only those that stay unimodular.
    const auto& pts = QuarticSpec::support();
    int attempts = 0;
    while (true) {
        ++attempts;
        long spread = 6 + 2 * (attempts % 5);
        std::uniform_int_distribution<long> delta(-3 * spread, 3 * spread);
        std::uniform_int_distribution<int> pick(0, 14);
        std::uniform_int_distribution<int> sdist(0, 1);

        std::array<long, 15> h{};
        for (int k = 0; k < 15; ++k) {
            const auto& p = pts[k];
            h[k] = spread * (p.i * p.i + p.i * p.j + p.j * p.j);
        }
        int moves = 0;
        for (int step = 0; step < 220 && moves < 60; ++step) {
            int k = pick(rng);
            long old = h[k];
            h[k] += delta(rng);
            if (heights_smooth(h)) ++moves;
            else h[k] = old;
        }
        if (!heights_smooth(h)) continue;

        // Affine normalization: corner heights become 0 (scaled by 4 to stay
        // integral in the numerators).
        long h00 = 0, h40 = 0, h04 = 0;
        for (int k = 0; k < 15; ++k) {
            if (pts[k] == LPt{0, 0}) h00 = h[k];
            if (pts[k] == LPt{4, 0}) h40 = h[k];
            if (pts[k] == LPt{0, 4}) h04 = h[k];
        }
        std::array<CoeffEntry, 15> entries{};
        for (int k = 0; k < 15; ++k) {
            long v4 = 4 * h[k] - (4 * h00 + pts[k].i * (h40 - h00) + pts[k].j * (h04 - h00));
            entries[k].p = pts[k];
            entries[k].val = Rat(v4, 4);
            entries[k].val.canonicalize();
            entries[k].sign = sdist(rng) ? +1 : -1;
            entries[k].lead = 1;
        }
        QuarticSpec spec(entries);
        try {
            dual_curve(spec, regular_subdivision(spec));
        } catch (const error& e) {
            if (e.kind() == errc::non_generic_curve) continue;
            throw;
        }
        if (attempts_out) *attempts_out = attempts;
        return spec;
    }
}

} // namespace tropbt
