#pragma once

#include <cstddef>

#include "polyrl/optimizer.hpp"
#include "polyrl/types.hpp"

namespace polyrl {

enum class DirectionSet { coordinate_axes };

struct LineSearchConfig {
    // Probes tried along each direction, in the fixed order
    // +s, -s, +s/2, -s/2, +s/4, ... ; at least 2.
    std::size_t probes_per_direction = 4;
    double step_magnitude = 0.5;  // > 0
    DirectionSet directions = DirectionSet::coordinate_axes;
};

void validate(const LineSearchConfig& cfg);

// Offset of the j-th probe (0-based): sign alternates +,-, magnitude halves
// every pair. Never zero, so the probed point never collides with the
// origin vertex.
double probe_offset(const LineSearchConfig& cfg, std::size_t j);

struct InitialSimplex {
    Simplex simplex;
    std::size_t evaluations = 0;
};

// Build the n+1 starting vertices from one origin point: the origin itself
// plus, per coordinate axis, the best of the probed offsets along that axis
// (ties keep the earliest probe). Every vertex carries its evaluated value;
// the vertex for axis i differs from the origin in coordinate i only, so
// the simplex is nondegenerate by construction.
// Costs exactly n * probes_per_direction + 1 objective calls.
InitialSimplex build_initial_simplex(const ParameterVector& first_vertex,
                                     const LineSearchConfig& cfg,
                                     const Objective& objective);

}  // namespace polyrl
