#pragma once

#include <string>
#include <vector>

#include "graphvol/diagram.hpp"

namespace graphvol {

// A computed volume bound with its provenance. Upper bounds are strict
// ("<") and equal diagram crossings times the relevant polyhedron constant;
// the doubling bound is a lower bound (">=").
struct VolumeBoundReport {
    enum class Kind { StrictUpper, Lower };

    Kind kind;
    double value = 0.0;
    int crossings = 0;          // diagram crossing count used (upper bounds)
    std::string ambient;
    std::string constant_name;  // "CUBOCT", "B4TRUNC" or "none"
    std::string constant_provenance;
    std::vector<std::string> warnings;

    std::string kind_str() const { return kind == Kind::StrictUpper ? "strict-upper" : "lower"; }
};

// Parsed reference constants.
double cuboct_constant();
double b4trunc_constant();

// vol < vol(Q_cuboct) * c for a diagram in a thickened surface F x I with
// chi(F) < 1, assuming the exterior is tg-hyperbolic. A crossing-free cycle
// makes hyperbolicity fail and is reported as a warning. Errors:
// "wrong-ambient" for S^3 input, "euler-characteristic" when chi(F) >= 1.
VolumeBoundReport upper_bound_thickened(const GraphDiagram& d);

// vol < vol(B4_trunc) * c for a diagram in S^3, same hyperbolicity caveat.
// Error "wrong-ambient" when the ambient is not S^3.
VolumeBoundReport upper_bound_s3(const GraphDiagram& d);

// vol(M exterior) >= vol(double of M cut along F)/2 + vol(thickened-surface
// exterior), for positive finite inputs the caller attests are volumes of
// tg-hyperbolic manifolds. Error "non-positive-volume" otherwise.
VolumeBoundReport doubling_lower_bound(double vol_double_cut, double vol_thickened_complement);

} // namespace graphvol
