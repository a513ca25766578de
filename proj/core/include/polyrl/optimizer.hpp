#pragma once

#include <cstddef>
#include <limits>

#include "polyrl/types.hpp"

namespace polyrl {

// One simplex vertex: a point in parameter space together with its cached
// objective value. Values are evaluated once and reused; the engine never
// silently re-evaluates a vertex (the objective may be noisy).
struct Vertex {
    ParameterVector point;
    double value = 0.0;
};

// n+1 vertices spanning R^n. Operations that require it state whether they
// expect the vertices sorted by ascending value.
using Simplex = std::vector<Vertex>;

// Dimension n of the space the simplex lives in (= vertex count - 1).
std::size_t dimension(const Simplex& s);

struct PolytopeConfig {
    double alpha = 1.0;  // reflection coefficient, > 0
    double gamma = 2.0;  // expansion coefficient, > 1
    double beta = 0.5;   // contraction coefficient, in (0, 1)

    // Stop once the mean absolute deviation of the vertex values falls to
    // epsilon or below.
    double epsilon = 1e-8;

    // Objective-call budget for one run() invocation; checked between
    // iterations, so a run may overshoot by at most one iteration's worth.
    std::size_t max_evaluations = std::numeric_limits<std::size_t>::max();
};

void validate(const PolytopeConfig& cfg);

enum class StopReason { converged, budget_exhausted, external_stop };

struct OptimizerOutcome {
    ParameterVector best_point;
    double best_value = 0.0;
    std::size_t evaluations_used = 0;
    StopReason reason = StopReason::converged;
};

// Which branch of the iteration replaced (or shrank) the simplex.
enum class StepBranch {
    reflect_accept,        // f0 <= f(r) <= f_{n-1}
    expand_accept,         // f(r) < f0 and f(e) < f(r)
    reflect_after_expand,  // f(r) < f0 but the expansion did not improve
    contract_accept,       // contracted point beat min(f(r), fn)
    shrink,                // everything failed; halve toward the best vertex
};

struct StepResult {
    Simplex simplex;
    std::size_t evaluations = 0;
    StepBranch branch = StepBranch::reflect_accept;
};

// Polled between iterations; return true to halt the run (used by the
// trainer to stop as soon as a fully successful cycle has been seen).
using StopPredicate = std::function<bool()>;

// --- simplex primitives ------------------------------------------------

// Reorder vertices by ascending value. Stable: equal values keep their
// prior relative order, so runs are reproducible.
Simplex sort_vertices(Simplex s);

// Centroid of the first n vertices (the worst one excluded); expects a
// sorted simplex.
ParameterVector centroid(const Simplex& s);

// r = c + alpha * (c - worst)
ParameterVector reflect(const ParameterVector& c, const ParameterVector& worst,
                        double alpha);

// e = c + gamma * (r - c)
ParameterVector expand(const ParameterVector& c, const ParameterVector& r,
                       double gamma);

// k = c + beta * (target - c); target is the worst vertex or the reflected
// point, whichever the iteration is contracting toward.
ParameterVector contract(const ParameterVector& c, const ParameterVector& target,
                         double beta);

// w_i <- (w_0 + w_i) / 2 for i = 1..n, re-evaluating each moved vertex.
// Expects a sorted simplex; costs n objective calls.
Simplex shrink(Simplex s, const Objective& objective);

// Mean absolute deviation of the vertex values: zero iff all values agree.
double termination_measure(const Simplex& s);

// --- iteration ----------------------------------------------------------

// One full iteration: sort, reflect, then accept / expand / contract /
// shrink per the branch rules above. Consumes 1, 2, or 2+n objective calls.
StepResult step(Simplex s, const PolytopeConfig& cfg, const Objective& objective);

// Iterate step() until the termination measure reaches cfg.epsilon, the
// evaluation budget is spent, or the stop predicate fires. The simplex is
// advanced in place so a caller can resume the same run with a fresh budget.
OptimizerOutcome run(Simplex& s, const PolytopeConfig& cfg,
                     const Objective& objective, const StopPredicate& stop = {});

}  // namespace polyrl
