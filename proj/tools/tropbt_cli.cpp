// Command-line driver: compute a full bitangent report for one quartic,
// run the randomized invariant suite, or cross-check theta characteristics.

#include "tropbt/errors.hpp"
#include "tropbt/pipeline.hpp"
#include "tropbt/report.hpp"
#include "tropbt/sampler.hpp"
#include "tropbt/svg.hpp"
#include "tropbt/theta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace tropbt;

int exit_code_for(const error& e) {
    switch (e.kind()) {
        case errc::not_smooth:
        case errc::non_generic_curve:
            return 2;
        case errc::class_count_not_seven:
        case errc::weight_mismatch:
        case errc::unrecognized_shape:
        case errc::condition_mismatch:
        case errc::bijection_failure:
        case errc::internal:
            return 3;
        default:
            return 1;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::internal, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(errc::internal, "cannot write '" + path + "'");
    out << text;
}

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("TROPBT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

QuarticSpec apply_sign_overrides(const QuarticSpec& spec,
                                 const std::vector<std::string>& overrides) {
    if (overrides.empty()) return spec;
    // An override replaces the sign assignment: keys not listed default to +.
    QuarticSpec out = spec;
    for (const auto& e : spec.entries()) out = out.with_sign(e.p, +1);
    for (const auto& ov : overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos || eq < 3)
            fail(errc::sign_not_plus_minus, "bad --signs-override '" + ov + "', want sIJ=+/-");
        std::string key = ov.substr(0, eq), val = ov.substr(eq + 1);
        if (key.size() != 3 || key[0] != 's' || !isdigit(key[1]) || !isdigit(key[2]))
            fail(errc::sign_not_plus_minus, "bad --signs-override key '" + key + "'");
        int i = key[1] - '0', j = key[2] - '0';
        int s = 0;
        if (val == "+" || val == "+1") s = +1;
        else if (val == "-" || val == "-1") s = -1;
        else fail(errc::sign_not_plus_minus, "bad --signs-override value '" + val + "'");
        out = out.with_sign(LPt{i, j}, s);
    }
    return out;
}

int cmd_compute(const std::string& input, const std::string& report_path,
                const std::string& svg_path, const std::vector<std::string>& overrides,
                bool serial) {
    QuarticSpec spec = parse_spec(read_file(input));
    spec = apply_sign_overrides(spec, overrides);
    PipelineOptions opts;
    opts.parallel = !serial;
    PipelineResult result = run_pipeline(spec, opts);
    ReportDocument doc = make_report(result);
    std::string text = render_report(doc);
    if (!report_path.empty()) write_file(report_path, text);
    else std::cout << text;
    if (!svg_path.empty()) write_file(svg_path, render_svg(result.curve, result.classes));
    std::cerr << "classes: " << result.classes.size() << ", complex total "
              << result.complex_total << ", real total " << result.real_total << "\n";
    return 0;
}

int cmd_random_suite(int count, unsigned long seed, const std::string& freq_path, bool serial) {
    std::mt19937_64 rng(seed);
    std::map<std::string, long> freq;
    int done = 0;
    long resampled = 0;
    while (done < count) {
        int attempts = 0;
        QuarticSpec spec = random_smooth_quartic(rng, &attempts);
        resampled += attempts - 1;
        PipelineOptions opts;
        opts.parallel = !serial;
        try {
            PipelineResult result = run_pipeline(spec, opts);
            for (const auto& cr : result.classes) ++freq[cr.canon.label];
            ++done;
            if (done % 10 == 0)
                std::cerr << "random-suite: " << done << "/" << count << " instances ok\n";
        } catch (const error& e) {
            if (e.is_input_degeneracy()) {
                ++resampled;
                continue; // rejection sampling over the generic locus
            }
            std::cerr << "random-suite: invariant failure with seed " << seed << " after "
                      << done << " instances: " << errc_name(e.kind()) << ": " << e.what()
                      << "\n";
            return 3;
        }
    }
    std::ostringstream os;
    os << "instances " << done << "\n";
    os << "rejected " << resampled << "\n";
    for (const auto& [label, n] : freq) os << "shape " << label << " " << n << "\n";
    if (!freq_path.empty()) write_file(freq_path, os.str());
    std::cout << os.str();
    return 0;
}

int cmd_theta_check(const std::string& input) {
    QuarticSpec spec = parse_spec(read_file(input));
    PipelineOptions opts;
    opts.run_theta = true;
    PipelineResult result = run_pipeline(spec, opts);
    const auto& bij = *result.theta;
    auto gammas = cycle_classes(result.graph);
    std::cout << "theta characteristics " << bij.thetas.size() << "\n";
    for (std::size_t k = 0; k < bij.thetas.size(); ++k) {
        std::cout << "gamma " << k << " edges";
        for (int e : gammas[k].edges) std::cout << " " << e;
        std::cout << " degree " << bij.thetas[k].degree() << "\n";
    }
    for (std::size_t c = 0; c < bij.gamma_of_class.size(); ++c)
        std::cout << "class " << c + 1 << " label " << result.classes[c].canon.label
                  << " gamma " << bij.gamma_of_class[c] << "\n";
    std::cout << "bijection ok\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_cap();
    CLI::App app{"tropical plane quartic bitangents: shapes, lifts, theta characteristics"};
    app.require_subcommand(1);

    std::string input, report_path, svg_path, freq_path;
    std::vector<std::string> overrides;
    bool serial = false;
    int count = 100;
    unsigned long seed = 1;

    auto* compute = app.add_subcommand("compute", "full pipeline for one quartic");
    compute->add_option("--input", input, "coefficient document")->required();
    compute->add_option("--report", report_path, "write the report here (default stdout)");
    compute->add_option("--svg", svg_path, "write an SVG rendering here");
    compute->add_option("--signs-override", overrides,
                        "sIJ=+/-; replaces the sign table (unlisted keys become +)");
    compute->add_flag("--serial", serial, "disable the OpenMP probe kernel");

    auto* rs = app.add_subcommand("random-suite", "randomized invariant suite");
    rs->add_option("--count", count, "number of random smooth quartics")->required();
    rs->add_option("--seed", seed, "RNG seed")->required();
    rs->add_option("--freq-table", freq_path, "write the shape frequency table here");
    rs->add_flag("--serial", serial, "disable the OpenMP probe kernel");

    auto* tc = app.add_subcommand("theta-check", "theta characteristic cross-check");
    tc->add_option("--input", input, "coefficient document")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return cmd_compute(input, report_path, svg_path, overrides, serial);
        if (rs->parsed()) return cmd_random_suite(count, seed, freq_path, serial);
        if (tc->parsed()) return cmd_theta_check(input);
    } catch (const tropbt::error& e) {
        std::cerr << tropbt::errc_name(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
