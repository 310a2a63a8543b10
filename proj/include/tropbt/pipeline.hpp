#ifndef TROPBT_PIPELINE_HPP
#define TROPBT_PIPELINE_HPP

#include "tropbt/catalog.hpp"
#include "tropbt/classes.hpp"
#include "tropbt/lifting.hpp"
#include "tropbt/newton_dual.hpp"
#include "tropbt/theta.hpp"

#include <optional>

namespace tropbt {

struct PipelineOptions {
    bool parallel = true;
    bool run_theta = true;
    bool check_invariants = true; // recession directions, weight sums, 0-or-4
    const ShapeCatalog* catalog = nullptr; // defaults to the builtin catalog
};

struct ClassResult {
    BitangentClass refined;      // in input position
    Canonicalized canon;         // label, sigma, representative position
    std::vector<long> weights;   // per representative cell
    SignParams params;
    bool real = false;
    int real_count = 0;
    bool totally_real = false;
};

struct PipelineResult {
    QuarticSpec spec;
    DualSubdivision sub;
    TropicalCurve curve;
    MetricGraph graph;
    std::vector<ClassResult> classes;
    long complex_total = 0;
    int real_total = 0;
    std::optional<ThetaBijection> theta;
    std::vector<std::string> warnings;
};

PipelineResult run_pipeline(const QuarticSpec& spec, const PipelineOptions& opts = {});

} // namespace tropbt

#endif
