#ifndef TROPBT_LIFTING_HPP
#define TROPBT_LIFTING_HPP

#include "tropbt/catalog.hpp"
#include "tropbt/classes.hpp"

#include <map>
#include <string>
#include <vector>

namespace tropbt {

/// Complex lifting multiplicity of every 0-cell of a refined class, indexed
/// like the class's cells (non-0-cells get 0). The per-class sum is checked
/// against the catalog weight multiset when a label is supplied.
std::vector<long> complex_mults(const BitangentClass& refined, const TropicalCurve& curve);
std::vector<long> complex_mults_checked(const BitangentClass& refined, const TropicalCurve& curve,
                                        const std::string& label, const ShapeCatalog& cat);

/// Parameters of a real-lifting condition template, resolved to lattice
/// coordinates in the representative-position dual subdivision.
struct SignParams {
    std::map<char, int> values; // keys among i, j, k, u, v
    int at(char c) const;
};

/// Resolve the parameters of `condition` from the representative-position
/// class and subdivision. Throws ParameterNotFound / AmbiguousParameter.
SignParams extract_sign_params(const std::string& condition, const BitangentClass& rep_cls,
                               const TropicalCurve& rep_curve, const DualSubdivision& rep_sub);

/// Evaluate the real-lifting sign condition of a catalog label on the
/// sigma-transformed sign table. Conditions are conjunctions of sign
/// monomial inequalities; labels without conditions return true.
bool real_condition(const std::string& condition, const SignParams& params, const SignTable& signs);

/// Recompose the condition from the per-tangency local lifting rules, as an
/// independent check of the per-shape table. Returns nothing for members
/// whose local data this path does not cover.
std::optional<bool> real_condition_recomposed(const BitangentClass& rep_cls,
                                              const TropicalCurve& rep_curve,
                                              const DualSubdivision& rep_sub,
                                              const SignTable& signs);

/// Full per-class lifting report.
struct ClassLift {
    std::string label;
    S3Element sigma;
    std::vector<long> weights;   // per 0-cell of the representative class
    bool real = false;
    int real_count = 0;          // 0 or 4
    bool totally_real = false;   // equals `real` for smooth generic input
};

struct LiftReport {
    std::vector<ClassLift> classes;
    long complex_total = 0;      // always 28
    int real_total = 0;          // 4, 8, 16 or 28
};

/// Initial forms of the coefficients and tangency points of the unique
/// classical bitangent triple over a multiplicity-four vertex tangency
/// (types (5b)/(6b)); `left` selects the local model a*x + b*y^3 + c*y^4,
/// otherwise a*x + b*x*y + c*y^4.
struct Mult4Forms {
    double m, n;
    double x1, y1; // first tangency point
    double x2, y2; // second tangency point
};
Mult4Forms mult4_initial_forms(bool left, double a, double b, double c);

/// Residuals of the three local equations at a tangency point.
struct Mult4Residual {
    double q, line, wronskian;
};
Mult4Residual mult4_residual(bool left, double a, double b, double c, const Mult4Forms& f,
                             bool second_point);

} // namespace tropbt

#endif
