#include "polyrl/line_search.hpp"

#include <stdexcept>
#include <utility>

namespace polyrl {

void validate(const LineSearchConfig& cfg) {
    if (cfg.probes_per_direction < 2)
        throw std::invalid_argument("line_search: need at least 2 probes per direction");
    if (!(cfg.step_magnitude > 0.0))
        throw std::invalid_argument("line_search: step_magnitude must be > 0");
}

double probe_offset(const LineSearchConfig& cfg, std::size_t j) {
    const double magnitude =
        cfg.step_magnitude / static_cast<double>(std::size_t{1} << (j / 2));
    return (j % 2 == 0) ? magnitude : -magnitude;
}

InitialSimplex build_initial_simplex(const ParameterVector& first_vertex,
                                     const LineSearchConfig& cfg,
                                     const Objective& objective) {
    validate(cfg);
    if (first_vertex.empty())
        throw std::invalid_argument("line_search: empty first vertex");

    const std::size_t n = first_vertex.size();
    InitialSimplex out;
    out.simplex.reserve(n + 1);
    out.simplex.push_back(Vertex{first_vertex, objective(first_vertex)});
    ++out.evaluations;

    ParameterVector probe = first_vertex;
    for (std::size_t axis = 0; axis < n; ++axis) {
        Vertex best;
        for (std::size_t j = 0; j < cfg.probes_per_direction; ++j) {
            probe[axis] = first_vertex[axis] + probe_offset(cfg, j);
            const double value = objective(probe);
            ++out.evaluations;
            if (j == 0 || value < best.value)
                best = Vertex{probe, value};
        }
        probe[axis] = first_vertex[axis];
        out.simplex.push_back(std::move(best));
    }
    return out;
}

}  // namespace polyrl
