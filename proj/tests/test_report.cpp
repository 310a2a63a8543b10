#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropbt/report.hpp"
#include "tropbt/svg.hpp"

using namespace tropbt;

TEST_CASE("report round-trips and is deterministic") {
    QuarticSpec spec = tropbt_test::worked_example();
    PipelineResult r1 = run_pipeline(spec);
    PipelineResult r2 = run_pipeline(spec);

    ReportDocument d1 = make_report(r1);
    ReportDocument d2 = make_report(r2);
    std::string t1 = render_report(d1);
    std::string t2 = render_report(d2);
    CHECK(t1 == t2);

    ReportDocument parsed = parse_report(t1);
    CHECK(parsed == d1);
    CHECK(render_report(parsed) == t1);
}

TEST_CASE("svg output contains the expected structure") {
    QuarticSpec spec = tropbt_test::worked_example();
    PipelineResult r = run_pipeline(spec);
    std::string svg = render_svg(r.curve, r.classes);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // curve edges and rays drawn
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 30);
    // empty class list still renders the curve
    std::string curve_only = render_svg(r.curve, {});
    CHECK(curve_only.find("<line") != std::string::npos);
}
