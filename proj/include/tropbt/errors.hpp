#ifndef TROPBT_ERRORS_HPP
#define TROPBT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropbt {

/// Error taxonomy. `kind()` is stable and drives CLI exit codes:
/// input/genericity problems exit 2, internal invariant failures exit 3.
enum class errc {
    missing_entry,
    duplicate_entry,
    malformed_rational,
    sign_not_plus_minus,
    point_outside_simplex,
    not_smooth,
    not_bitangent,
    non_generic_curve,
    unclassifiable_tangency,
    class_count_not_seven,
    unrecognized_shape,
    weight_mismatch,
    ambiguous_parameter,
    parameter_not_found,
    condition_mismatch,
    zero_coefficient,
    degree_mismatch,
    bijection_failure,
    internal,
};

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

    /// True for errors that indicate unusable input (non-smooth or
    /// non-generic) rather than a bug in the pipeline.
    bool is_input_degeneracy() const {
        return kind_ == errc::not_smooth || kind_ == errc::non_generic_curve;
    }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline const char* errc_name(errc k) {
    switch (k) {
        case errc::missing_entry: return "MissingEntry";
        case errc::duplicate_entry: return "DuplicateEntry";
        case errc::malformed_rational: return "MalformedRational";
        case errc::sign_not_plus_minus: return "SignNotPlusMinus";
        case errc::point_outside_simplex: return "PointOutsideSimplex";
        case errc::not_smooth: return "NotSmooth";
        case errc::not_bitangent: return "NotBitangent";
        case errc::non_generic_curve: return "NonGenericCurve";
        case errc::unclassifiable_tangency: return "UnclassifiableTangency";
        case errc::class_count_not_seven: return "ClassCountNotSeven";
        case errc::unrecognized_shape: return "UnrecognizedShape";
        case errc::weight_mismatch: return "WeightMismatch";
        case errc::ambiguous_parameter: return "AmbiguousParameter";
        case errc::parameter_not_found: return "ParameterNotFound";
        case errc::condition_mismatch: return "ConditionMismatch";
        case errc::zero_coefficient: return "ZeroCoefficient";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::bijection_failure: return "BijectionFailure";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace tropbt

#endif
