#include "tropbt/signature.hpp"

#include <algorithm>
#include <sstream>

namespace tropbt {

namespace {

std::string cell_invariant(const ClassCell& c, const TropicalCurve& curve) {
    std::ostringstream os;
    os << "d" << c.dim << (c.bounded ? "b" : "u") << (c.on_curve ? "C" : "o")
       << (c.curve_vertex ? "V" : "-");
    if (c.dim == 1) os << "|dir" << to_string(c.dir);
    if (!c.recession.empty()) {
        os << "|rec";
        for (const auto& d : c.recession) os << to_string(d);
    }
    os << "|tg{" << member_summary(curve, c.tangencies) << "}";
    return os.str();
}

} // namespace

ShapeSignature signature(const BitangentClass& refined, const TropicalCurve& curve) {
    const auto& cells = refined.cells;
    std::vector<std::string> inv(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) inv[i] = cell_invariant(cells[i], curve);

    // Symmetric incidence lists.
    std::vector<std::vector<int>> nbr(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (int f : cells[i].faces) {
            nbr[i].push_back(f);
            nbr[f].push_back(static_cast<int>(i));
        }
    }

    // One refinement round: append the sorted multiset of neighbor invariants.
    std::vector<std::string> inv2(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::vector<std::string> ns;
        for (int j : nbr[i]) ns.push_back(inv[j]);
        std::sort(ns.begin(), ns.end());
        std::ostringstream os;
        os << inv[i] << "|N[";
        for (const auto& s : ns) os << s << ";";
        os << "]";
        inv2[i] = os.str();
    }

    std::vector<std::string> sorted_cells = inv2;
    std::sort(sorted_cells.begin(), sorted_cells.end());

    std::vector<std::string> edges;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (int f : cells[i].faces) {
            std::string a = inv2[f], b = inv2[i];
            edges.push_back("(" + a + ">" + b + ")");
        }
    }
    std::sort(edges.begin(), edges.end());

    std::ostringstream os;
    os << "cells[";
    for (const auto& s : sorted_cells) os << s << "##";
    os << "]inc[";
    for (const auto& s : edges) os << s << "##";
    os << "]";
    return ShapeSignature{os.str()};
}

} // namespace tropbt
