#include "graphvol/bounds.hpp"

#include <cmath>
#include <cstdlib>

#include "graphvol/lobachevsky.hpp"
#include "graphvol/numformat.hpp"

namespace graphvol {

double cuboct_constant() { return std::strtod(kCuboctDigits, nullptr); }

double b4trunc_constant() { return std::strtod(kB4TruncDigits, nullptr); }

namespace {

void warn_if_not_hyperbolic(const GraphDiagram& d, VolumeBoundReport& r) {
    // tg-hyperbolicity is a hypothesis this tool cannot decide; the one
    // decidable necessary condition is the crossing-free-cycle test.
    if (auto cycle = find_crossing_free_cycle(d)) {
        std::string edges;
        for (std::size_t i = 0; i < cycle->edge_ids.size(); ++i) {
            if (i) edges += " ";
            edges += cycle->edge_ids[i];
        }
        r.warnings.push_back("crossing-free cycle through edges [" + edges +
                             "]: the exterior is not hyperbolic, so the bound is vacuous");
    } else {
        r.warnings.push_back(
            "bound is conditional on the exterior being tg-hyperbolic (not decided here); "
            "no crossing-free cycle found");
    }
}

} // namespace

VolumeBoundReport upper_bound_thickened(const GraphDiagram& d) {
    const AmbientSpace& amb = d.ambient();
    if (amb.kind != AmbientSpace::Kind::ThickenedSurface)
        throw Error("wrong-ambient",
                    "the cuboctahedron bound applies to thickened surfaces; for S^3 use the "
                    "bipyramid bound");
    if (amb.euler_characteristic() >= 1)
        throw Error("euler-characteristic",
                    "the thickened-surface bound needs chi(F) < 1, got chi = " +
                        std::to_string(amb.euler_characteristic()));

    VolumeBoundReport r;
    r.kind = VolumeBoundReport::Kind::StrictUpper;
    r.crossings = crossing_count(d);
    r.ambient = amb.str();
    const VolumeConstant c = cuboct_volume_closed_form();
    r.constant_name = "CUBOCT";
    r.constant_provenance = c.provenance;
    r.value = r.crossings * cuboct_constant();
    r.warnings.push_back("uses diagram crossings (>= minimal crossing number); the bound "
                         "stays valid, possibly weaker");
    warn_if_not_hyperbolic(d, r);
    return r;
}

VolumeBoundReport upper_bound_s3(const GraphDiagram& d) {
    if (d.ambient().kind != AmbientSpace::Kind::S3)
        throw Error("wrong-ambient", "the bipyramid bound applies to diagrams in S^3");

    VolumeBoundReport r;
    r.kind = VolumeBoundReport::Kind::StrictUpper;
    r.crossings = crossing_count(d);
    r.ambient = d.ambient().str();
    const VolumeConstant c = b4trunc_volume();
    r.constant_name = "B4TRUNC";
    r.constant_provenance = c.provenance;
    r.value = r.crossings * b4trunc_constant();
    r.warnings.push_back("uses diagram crossings (>= minimal crossing number); the bound "
                         "stays valid, possibly weaker");
    warn_if_not_hyperbolic(d, r);
    return r;
}

VolumeBoundReport doubling_lower_bound(double vol_double_cut, double vol_thickened_complement) {
    if (!(vol_double_cut > 0.0) || !std::isfinite(vol_double_cut) ||
        !(vol_thickened_complement > 0.0) || !std::isfinite(vol_thickened_complement))
        throw Error("non-positive-volume",
                    "doubling bound needs positive finite volumes, got " +
                        format_real(vol_double_cut) + " and " +
                        format_real(vol_thickened_complement));

    VolumeBoundReport r;
    r.kind = VolumeBoundReport::Kind::Lower;
    r.value = 0.5 * vol_double_cut + vol_thickened_complement;
    r.constant_name = "none";
    r.constant_provenance =
        "cut-and-double: half the doubled cut manifold volume plus the thickened exterior "
        "volume; both inputs attested tg-hyperbolic by the caller";
    r.warnings.push_back("inputs are externally supplied volumes; nothing is computed from a "
                         "diagram here");
    return r;
}

} // namespace graphvol
