#pragma once

#include "wisp/core/region.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wisp {

enum class ObservabilityMode {
    Strict,   ///< boundary-set clause, x0 outside the closure of Omega \ omega, T > sup |x - x0|
    Relaxed,  ///< T > diam(Omega \ closure(omega))
};

/// One face x_axis = side of the unit cube.
struct FaceReport {
    int axis = 0;
    int side = 0;                    ///< 0 for x_axis = 0, 1 for x_axis = 1
    bool in_observation_set = false; ///< (x - x0) . nu >= 0 on the face
    bool covered = false;            ///< every face node lies in the closure of omega
    std::size_t uncovered_nodes = 0;

    std::string name() const;
};

struct ObservabilityReport {
    ObservabilityMode mode = ObservabilityMode::Relaxed;
    double final_time = 0.0;
    double required_time = 0.0;             ///< sup |x - x0| (strict) or diam (relaxed)
    bool time_clause = false;
    std::optional<bool> x0_outside_unobserved;  ///< strict only
    std::optional<bool> boundary_clause;        ///< strict only
    std::vector<FaceReport> faces;              ///< strict only, all 2 dim faces
    bool passed = false;
};

/// Evaluates the observability condition for (x0, omega, T). Failures are
/// reported, never thrown. Boundary coverage is tested on grid nodes face by
/// face with exact axis normals.
ObservabilityReport check_observability(const std::array<double, 3>& x0, const ObservationRegion& region,
                                        double final_time, ObservabilityMode mode);

/// diam(Omega \ closure(omega)): the removed box's diagonal, 0 for omega = Omega.
double unobserved_diameter(const ObservationRegion& region);

} // namespace wisp
