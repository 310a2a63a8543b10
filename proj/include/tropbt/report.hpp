#ifndef TROPBT_REPORT_HPP
#define TROPBT_REPORT_HPP

#include "tropbt/pipeline.hpp"

#include <string>
#include <vector>

namespace tropbt {

/// Machine-readable result document. Rationals are serialized as "p/q",
/// never as floats; rendering is deterministic.
struct ReportDocument {
    int schema = 1;
    std::vector<std::string> input;     // canonical coefficient records
    std::vector<std::string> triangles; // "(i,j) (i,j) (i,j)" per cell
    std::string skeleton_type;          // "(l,b,c)"
    std::vector<std::string> loops;     // "dual=(i,j) length=L"
    struct ClassLine {
        std::string label;
        std::string sigma;
        std::string anchor;
        bool real = false;
        int real_count = 0;
        bool totally_real = false;
        std::vector<long> weights;
        std::vector<std::string> cells; // one canonical line per cell

        bool operator==(const ClassLine&) const = default;
    };
    std::vector<ClassLine> classes;
    long complex_total = 0;
    int real_total = 0;
    std::vector<int> theta_pairs; // gamma index per class, empty when skipped
    std::vector<std::string> warnings;

    bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report(const PipelineResult& result);
std::string render_report(const ReportDocument& doc);
ReportDocument parse_report(const std::string& text);

} // namespace tropbt

#endif
