#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropbt/catalog.hpp"
#include "tropbt/lifting.hpp"

#include <numeric>
#include <set>

using namespace tropbt;

TEST_CASE("catalog integrity: 41 entries, distinct signatures, weights sum 4") {
    const ShapeCatalog& cat = ShapeCatalog::builtin();
    CHECK(cat.entries().size() == 41);
    std::set<std::string> labels, sigs;
    for (const auto& e : cat.entries()) {
        labels.insert(e.label);
        sigs.insert(e.signature);
        long sum = std::accumulate(e.weights.begin(), e.weights.end(), 0L);
        CHECK(sum == 4);
        CHECK(!e.condition.empty());
    }
    CHECK(labels.size() == 41);
    CHECK(sigs.size() == 41);
    // Key labels present.
    for (const char* l : {"A", "B", "C", "S", "E", "W", "II", "Lp", "Tp", "Tpp", "HH"})
        CHECK(cat.by_label(l) != nullptr);
}

TEST_CASE("worked example canonicalization matches the published table") {
    QuarticSpec spec = tropbt_test::worked_example();
    S3Context ctx = S3Context::make(spec);
    auto classes = enumerate_classes(ctx.curve());

    std::multiset<std::string> found;
    for (const auto& cls : classes) {
        auto refined = refine_shape(cls, ctx.curve());
        auto canon = canonicalize(refined, ctx);
        found.insert(canon.label + "/" + canon.sigma.word());
    }
    // (1)=(S,id), (2)=(E,t1t0), (3)=(W,t0t1t0), (4)=(E,t0t1t0), (5)-(7)=(A,id)
    std::multiset<std::string> want = {"S/id",     "E/t1t0", "W/t0t1t0", "E/t0t1t0",
                                       "A/id",     "A/id",   "A/id"};
    CHECK(found == want);
}

TEST_CASE("canonicalization is S3-equivariant on the worked example") {
    QuarticSpec spec = tropbt_test::worked_example();
    S3Context ctx = S3Context::make(spec);
    auto classes = enumerate_classes(ctx.curve());
    for (const auto& sigma : S3Element::all()) {
        QuarticSpec tspec = transform_spec(sigma, spec);
        S3Context tctx = S3Context::make(tspec);
        auto tclasses = enumerate_classes(tctx.curve());
        std::multiset<std::string> a, b;
        for (const auto& cls : classes)
            a.insert(canonicalize(refine_shape(cls, ctx.curve()), ctx).label);
        for (const auto& cls : tclasses)
            b.insert(canonicalize(refine_shape(cls, tctx.curve()), tctx).label);
        CHECK(a == b);
    }
}

TEST_CASE("signatures are translation invariant") {
    QuarticSpec spec = tropbt_test::worked_example();
    // Shift the whole picture by (7,3): multiply coefficients by t^(-7i-3j),
    // i.e. add the affine function to the valuations.
    std::array<CoeffEntry, 15> ents{};
    int k = 0;
    for (const auto& e : spec.entries()) {
        ents[k] = e;
        ents[k].val = e.val - Rat(7) * e.p.i - Rat(3) * e.p.j;
        ++k;
    }
    QuarticSpec shifted(ents);
    S3Context c1 = S3Context::make(spec), c2 = S3Context::make(shifted);
    auto cls1 = enumerate_classes(c1.curve());
    auto cls2 = enumerate_classes(c2.curve());
    REQUIRE(cls1.size() == cls2.size());
    std::multiset<std::string> s1, s2;
    for (const auto& c : cls1) s1.insert(signature(refine_shape(c, c1.curve()), c1.curve()).text);
    for (const auto& c : cls2) s2.insert(signature(refine_shape(c, c2.curve()), c2.curve()).text);
    CHECK(s1 == s2);
}
