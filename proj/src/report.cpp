#include "tropbt/report.hpp"

#include "tropbt/errors.hpp"

#include <sstream>

namespace tropbt {

namespace {

std::string coeff_line(const CoeffEntry& e) {
    std::ostringstream os;
    os << "i=" << e.p.i << " j=" << e.p.j << " val=" << to_string(e.val)
       << " sign=" << (e.sign > 0 ? "+" : "-") << " lead=" << to_string(e.lead);
    return os.str();
}

std::string cell_line(const ClassCell& c, long weight) {
    std::ostringstream os;
    os << "dim=" << c.dim << " bounded=" << (c.bounded ? "yes" : "no")
       << " on-curve=" << (c.on_curve ? "yes" : "no")
       << " curve-vertex=" << (c.curve_vertex ? "yes" : "no");
    if (c.dim == 0) os << " at=" << to_string(c.p0) << " weight=" << weight;
    if (c.dim == 1) {
        os << " dir=" << to_string(c.dir);
        if (c.bounded) os << " from=" << to_string(c.p0) << " to=" << to_string(c.p1);
        else os << " from=" << to_string(c.p0);
    }
    if (!c.recession.empty()) {
        os << " recession=";
        for (const auto& d : c.recession) os << to_string(d);
    }
    return os.str();
}

} // namespace

ReportDocument make_report(const PipelineResult& r) {
    ReportDocument doc;
    for (const auto& e : r.spec.entries()) doc.input.push_back(coeff_line(e));
    for (const auto& t : r.sub.triangles()) {
        std::ostringstream os;
        os << to_string(t[0]) << " " << to_string(t[1]) << " " << to_string(t[2]);
        doc.triangles.push_back(os.str());
    }
    {
        std::ostringstream os;
        os << "(" << r.graph.loops << "," << r.graph.biedges << "," << r.graph.bridges << ")";
        doc.skeleton_type = os.str();
    }
    for (const auto& [p, len] : r.graph.loop_lengths) {
        std::ostringstream os;
        os << "dual=" << to_string(p) << " length=" << to_string(len);
        doc.loops.push_back(os.str());
    }
    for (const auto& cr : r.classes) {
        ReportDocument::ClassLine cl;
        cl.label = cr.canon.label;
        cl.sigma = cr.canon.sigma.word();
        cl.anchor = to_string(cr.refined.anchor());
        cl.real = cr.real;
        cl.real_count = cr.real_count;
        cl.totally_real = cr.totally_real;
        for (std::size_t i = 0; i < cr.canon.rep_class.cells.size(); ++i) {
            if (cr.canon.rep_class.cells[i].dim == 0 && cr.weights[i] > 0)
                cl.weights.push_back(cr.weights[i]);
        }
        std::sort(cl.weights.rbegin(), cl.weights.rend());
        // transform_class preserves the cell order, so the representative
        // weights align with the input-position cells.
        for (std::size_t i = 0; i < cr.refined.cells.size(); ++i)
            cl.cells.push_back(cell_line(cr.refined.cells[i], cr.weights[i]));
        doc.classes.push_back(std::move(cl));
    }
    doc.complex_total = r.complex_total;
    doc.real_total = r.real_total;
    if (r.theta) doc.theta_pairs = r.theta->gamma_of_class;
    doc.warnings = r.warnings;
    return doc;
}

std::string render_report(const ReportDocument& doc) {
    std::ostringstream os;
    os << "tropbt-report " << doc.schema << "\n";
    os << "input " << doc.input.size() << "\n";
    for (const auto& s : doc.input) os << "  " << s << "\n";
    os << "subdivision " << doc.triangles.size() << "\n";
    for (const auto& s : doc.triangles) os << "  triangle " << s << "\n";
    os << "skeleton type=" << doc.skeleton_type << "\n";
    for (const auto& s : doc.loops) os << "  loop " << s << "\n";
    os << "classes " << doc.classes.size() << "\n";
    int idx = 1;
    for (const auto& c : doc.classes) {
        os << "class " << idx++ << "\n";
        os << "  label " << c.label << "\n";
        os << "  sigma " << c.sigma << "\n";
        os << "  anchor " << c.anchor << "\n";
        os << "  real " << (c.real ? "true" : "false") << "\n";
        os << "  real-count " << c.real_count << "\n";
        os << "  totally-real " << (c.totally_real ? "true" : "false") << "\n";
        os << "  weights";
        for (long w : c.weights) os << " " << w;
        os << "\n";
        os << "  cells " << c.cells.size() << "\n";
        for (const auto& s : c.cells) os << "    cell " << s << "\n";
    }
    os << "totals complex=" << doc.complex_total << " real=" << doc.real_total << "\n";
    if (doc.theta_pairs.empty()) {
        os << "theta skipped\n";
    } else {
        os << "theta pairs";
        for (int g : doc.theta_pairs) os << " " << g;
        os << "\n";
    }
    os << "warnings " << doc.warnings.size() << "\n";
    for (const auto& w : doc.warnings) os << "  " << w << "\n";
    return os.str();
}

ReportDocument parse_report(const std::string& text) {
    ReportDocument doc;
    std::istringstream in(text);
    std::string line;

    auto need = [&](bool ok, const std::string& what) {
        if (!ok) fail(errc::internal, "report parse error: " + what);
    };
    auto strip = [](const std::string& s) {
        std::size_t a = s.find_first_not_of(' ');
        if (a == std::string::npos) return std::string();
        return s.substr(a);
    };

    need(static_cast<bool>(std::getline(in, line)), "missing header");
    {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag >> doc.schema;
        need(tag == "tropbt-report", "bad header");
    }
    std::size_t n = 0;
    need(static_cast<bool>(std::getline(in, line)), "missing input");
    {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag >> n;
        need(tag == "input", "bad input header");
    }
    for (std::size_t i = 0; i < n; ++i) {
        need(static_cast<bool>(std::getline(in, line)), "truncated input");
        doc.input.push_back(strip(line));
    }
    need(static_cast<bool>(std::getline(in, line)), "missing subdivision");
    {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag >> n;
        need(tag == "subdivision", "bad subdivision header");
    }
    for (std::size_t i = 0; i < n; ++i) {
        need(static_cast<bool>(std::getline(in, line)), "truncated subdivision");
        std::string s = strip(line);
        need(s.rfind("triangle ", 0) == 0, "bad triangle line");
        doc.triangles.push_back(s.substr(9));
    }
    need(static_cast<bool>(std::getline(in, line)), "missing skeleton");
    need(line.rfind("skeleton type=", 0) == 0, "bad skeleton line");
    doc.skeleton_type = line.substr(14);
    while (in.peek() == ' ') {
        std::getline(in, line);
        std::string s = strip(line);
        need(s.rfind("loop ", 0) == 0, "bad loop line");
        doc.loops.push_back(s.substr(5));
    }
    need(static_cast<bool>(std::getline(in, line)), "missing classes");
    {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag >> n;
        need(tag == "classes", "bad classes header");
    }
    for (std::size_t i = 0; i < n; ++i) {
        need(static_cast<bool>(std::getline(in, line)), "truncated class list");
        need(line.rfind("class ", 0) == 0, "bad class line");
        ReportDocument::ClassLine c;
        auto field = [&](const char* key) {
            need(static_cast<bool>(std::getline(in, line)), "truncated class");
            std::string s = strip(line);
            std::string pref = std::string(key) + " ";
            need(s.rfind(pref, 0) == 0, std::string("expected ") + key);
            return s.substr(pref.size());
        };
        c.label = field("label");
        c.sigma = field("sigma");
        c.anchor = field("anchor");
        c.real = field("real") == "true";
        c.real_count = std::stoi(field("real-count"));
        c.totally_real = field("totally-real") == "true";
        {
            need(static_cast<bool>(std::getline(in, line)), "truncated class");
            std::istringstream ls(strip(line));
            std::string tag;
            ls >> tag;
            need(tag == "weights", "expected weights");
            long w;
            while (ls >> w) c.weights.push_back(w);
        }
        std::size_t nc = 0;
        {
            need(static_cast<bool>(std::getline(in, line)), "truncated class");
            std::istringstream ls(strip(line));
            std::string tag;
            ls >> tag >> nc;
            need(tag == "cells", "expected cells");
        }
        for (std::size_t k = 0; k < nc; ++k) {
            need(static_cast<bool>(std::getline(in, line)), "truncated cells");
            std::string s = strip(line);
            need(s.rfind("cell ", 0) == 0, "bad cell line");
            c.cells.push_back(s.substr(5));
        }
        doc.classes.push_back(std::move(c));
    }
    need(static_cast<bool>(std::getline(in, line)), "missing totals");
    {
        need(line.rfind("totals complex=", 0) == 0, "bad totals");
        std::size_t sp = line.find(" real=");
        doc.complex_total = std::stol(line.substr(15, sp - 15));
        doc.real_total = std::stoi(line.substr(sp + 6));
    }
    need(static_cast<bool>(std::getline(in, line)), "missing theta");
    if (line != "theta skipped") {
        need(line.rfind("theta pairs", 0) == 0, "bad theta line");
        std::istringstream ls(line.substr(11));
        int g;
        while (ls >> g) doc.theta_pairs.push_back(g);
    }
    need(static_cast<bool>(std::getline(in, line)), "missing warnings");
    {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag >> n;
        need(tag == "warnings", "bad warnings header");
    }
    for (std::size_t i = 0; i < n; ++i) {
        need(static_cast<bool>(std::getline(in, line)), "truncated warnings");
        doc.warnings.push_back(strip(line));
    }
    return doc;
}

} // namespace tropbt
