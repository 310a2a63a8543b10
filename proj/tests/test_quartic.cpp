#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropbt/errors.hpp"
#include "tropbt/quartic.hpp"

using namespace tropbt;

TEST_CASE("parse_spec reads the worked example") {
    QuarticSpec spec = tropbt_test::worked_example();
    CHECK(spec.entries().size() == 15);
    CHECK(spec.val(LPt{0, 1}) == 8);
    CHECK(spec.sign(LPt{0, 1}) == -1);
    CHECK(spec.val(LPt{0, 0}) == 0);
    CHECK(spec.sign(LPt{0, 0}) == +1);
    CHECK(spec.lead(LPt{1, 0}) == 3);
    CHECK(spec.val(LPt{2, 2}) == 32);
}

TEST_CASE("parse_spec validation errors") {
    std::string base = tropbt_test::slurp(tropbt_test::data_file("worked_example.q"));

    SUBCASE("missing entry") {
        std::string doc;
        std::istringstream in(base);
        std::string line;
        while (std::getline(in, line))
            if (line.find("i=2 j=2") == std::string::npos) doc += line + "\n";
        CHECK_THROWS_WITH_AS(parse_spec(doc), doctest::Contains("(2,2)"), error);
        try {
            parse_spec(doc);
        } catch (const error& e) {
            CHECK(e.kind() == errc::missing_entry);
        }
    }
    SUBCASE("duplicate entry") {
        std::string doc = base + "i=1 j=1 val=2 sign=+\n";
        try {
            parse_spec(doc);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.kind() == errc::duplicate_entry);
        }
    }
    SUBCASE("malformed rational") {
        std::string doc = base;
        doc.replace(doc.find("val=10"), 6, "val=1x");
        try {
            parse_spec(doc);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.kind() == errc::malformed_rational);
        }
    }
    SUBCASE("bad sign") {
        std::string doc = base;
        doc.replace(doc.find("sign=+"), 6, "sign=2");
        try {
            parse_spec(doc);
            CHECK(false);
        } catch (const error& e) {
            CHECK(e.kind() == errc::sign_not_plus_minus);
        }
    }
    SUBCASE("rational valuations and unicode minus") {
        std::string doc;
        QuarticSpec we = tropbt_test::worked_example();
        for (const auto& e : we.entries()) {
            doc += "i=" + std::to_string(e.p.i) + " j=" + std::to_string(e.p.j) +
                   " val=" + to_string(e.val) + "/3 sign=\xE2\x88\x92\n";
        }
        QuarticSpec spec = parse_spec(doc);
        CHECK(spec.val(LPt{1, 0}) == Rat(10, 3));
        CHECK(spec.sign(LPt{0, 0}) == -1);
    }
}

TEST_CASE("S3 lattice action") {
    CHECK(apply_s3_lattice(S3Element::t0(), LPt{1, 3}) == LPt{3, 1});
    CHECK(apply_s3_lattice(S3Element::t1(), LPt{0, 0}) == LPt{4, 0});
    CHECK(apply_s3_lattice(S3Element::identity(), LPt{2, 1}) == LPt{2, 1});

    // Corners map to corners.
    for (const auto& sigma : S3Element::all()) {
        for (LPt c : {LPt{0, 0}, LPt{4, 0}, LPt{0, 4}}) {
            LPt img = apply_s3_lattice(sigma, c);
            bool corner = (img == LPt{0, 0}) || (img == LPt{4, 0}) || (img == LPt{0, 4});
            CHECK(corner);
        }
        // The action is a bijection of the 15 lattice points.
        std::set<std::pair<int, int>> seen;
        for (const auto& p : QuarticSpec::support()) {
            LPt q = apply_s3_lattice(sigma, p);
            CHECK(in_simplex4(q));
            seen.insert({q.i, q.j});
        }
        CHECK(seen.size() == 15);
    }
}

TEST_CASE("S3 plane action") {
    CHECK(apply_s3_plane(S3Element::t0(), Pt{Rat(10), Rat(5)}) == Pt{Rat(5), Rat(10)});
    CHECK(apply_s3_plane(S3Element::t1(), Pt{Rat(1), Rat(0)}) == Pt{Rat(-1), Rat(-1)});
    CHECK(apply_s3_plane(S3Element::t1(), Pt{Rat(0), Rat(0)}) == Pt{Rat(0), Rat(0)});

    // Unimodular linear parts.
    for (const auto& sigma : {S3Element::t0(), S3Element::t1()}) {
        IVec e1 = sigma.plane_dir(IVec{1, 0});
        IVec e2 = sigma.plane_dir(IVec{0, 1});
        CHECK(std::abs(det(e1, e2)) == 1);
    }
}

TEST_CASE("S3 is the symmetric group on three letters") {
    const auto& all = S3Element::all();
    // Cayley table closure and group axioms via explicit checks.
    CHECK(S3Element::t0() * S3Element::t0() == S3Element::identity());
    CHECK(S3Element::t1() * S3Element::t1() == S3Element::identity());
    std::set<int> idx;
    for (const auto& a : all)
        for (const auto& b : all) idx.insert((a * b).index());
    CHECK(idx.size() == 6);
    for (const auto& a : all) {
        CHECK((a * a.inverse()) == S3Element::identity());
        CHECK((a.inverse() * a) == S3Element::identity());
        for (const auto& b : all)
            for (const auto& c : all) CHECK(((a * b) * c) == (a * (b * c)));
    }
    // Non-abelian: t0 t1 != t1 t0.
    CHECK(!(S3Element::t0() * S3Element::t1() == S3Element::t1() * S3Element::t0()));
    // Composition matches the lattice action.
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& p : QuarticSpec::support())
                CHECK((a * b).lattice(p) == a.lattice(b.lattice(p)));
    // Word parsing round-trips.
    for (const auto& a : all) CHECK(S3Element::from_word(a.word()) == a);
}

TEST_CASE("sign table action is an index permutation") {
    QuarticSpec spec = tropbt_test::worked_example();
    SignTable s = signs_of(spec);

    SignTable t0s = apply_s3_signs(S3Element::t0(), s);
    CHECK(t0s[LPt{1, 2}] == s[LPt{2, 1}]);
    CHECK(t0s[LPt{1, 2}] == -1);

    CHECK(apply_s3_signs(S3Element::identity(), s) == s);

    S3Element g = S3Element::t1() * S3Element::t0();
    SignTable round = apply_s3_signs(g.inverse(), apply_s3_signs(g, s));
    CHECK(round == s);

    // Multiset of signs preserved.
    for (const auto& sigma : S3Element::all()) {
        SignTable u = apply_s3_signs(sigma, s);
        int pos_s = 0, pos_u = 0;
        for (const auto& [p, v] : s) pos_s += v > 0;
        for (const auto& [p, v] : u) pos_u += v > 0;
        CHECK(pos_s == pos_u);
        CHECK(u.size() == 15);
    }
}

TEST_CASE("transform_spec matches the sign action") {
    QuarticSpec spec = tropbt_test::worked_example();
    for (const auto& sigma : S3Element::all()) {
        QuarticSpec t = transform_spec(sigma, spec);
        CHECK(signs_of(t) == apply_s3_signs(sigma, signs_of(spec)));
        for (const auto& p : QuarticSpec::support())
            CHECK(t.val(sigma.lattice(p)) == spec.val(p));
    }
}
