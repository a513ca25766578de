#include "polyrl/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace polyrl {

std::size_t dimension(const Simplex& s) {
    if (s.size() < 2)
        throw std::invalid_argument("simplex: need at least 2 vertices");
    return s.size() - 1;
}

void validate(const PolytopeConfig& cfg) {
    if (!(cfg.alpha > 0.0))
        throw std::invalid_argument("polytope: alpha must be > 0");
    if (!(cfg.gamma > 1.0))
        throw std::invalid_argument("polytope: gamma must be > 1");
    if (!(cfg.beta > 0.0 && cfg.beta < 1.0))
        throw std::invalid_argument("polytope: beta must be in (0, 1)");
    if (!(cfg.epsilon >= 0.0))
        throw std::invalid_argument("polytope: epsilon must be >= 0");
}

Simplex sort_vertices(Simplex s) {
    std::stable_sort(s.begin(), s.end(),
                     [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    return s;
}

ParameterVector centroid(const Simplex& s) {
    const std::size_t n = dimension(s);
    ParameterVector c(s.front().point.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const ParameterVector& p = s[i].point;
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] += p[j];
    }
    for (double& x : c)
        x /= static_cast<double>(n);
    return c;
}

ParameterVector reflect(const ParameterVector& c, const ParameterVector& worst,
                        double alpha) {
    ParameterVector r(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        r[j] = c[j] + alpha * (c[j] - worst[j]);
    return r;
}

ParameterVector expand(const ParameterVector& c, const ParameterVector& r,
                       double gamma) {
    ParameterVector e(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        e[j] = c[j] + gamma * (r[j] - c[j]);
    return e;
}

ParameterVector contract(const ParameterVector& c, const ParameterVector& target,
                         double beta) {
    ParameterVector k(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        k[j] = c[j] + beta * (target[j] - c[j]);
    return k;
}

Simplex shrink(Simplex s, const Objective& objective) {
    const ParameterVector& best = s.front().point;
    for (std::size_t i = 1; i < s.size(); ++i) {
        ParameterVector& p = s[i].point;
        for (std::size_t j = 0; j < p.size(); ++j)
            p[j] = 0.5 * (best[j] + p[j]);
        s[i].value = objective(p);
    }
    return s;
}

double termination_measure(const Simplex& s) {
    const double m = static_cast<double>(s.size());
    double mean = 0.0;
    for (const Vertex& v : s)
        mean += v.value;
    mean /= m;
    double deviation = 0.0;
    for (const Vertex& v : s)
        deviation += std::abs(v.value - mean);
    return deviation / m;
}

StepResult step(Simplex s, const PolytopeConfig& cfg, const Objective& objective) {
    s = sort_vertices(std::move(s));
    const std::size_t n = dimension(s);

    const double f_best = s.front().value;
    const double f_second_worst = s[n - 1].value;
    const double f_worst = s[n].value;

    const ParameterVector c = centroid(s);
    ParameterVector r = reflect(c, s[n].point, cfg.alpha);
    const double f_r = objective(r);
    std::size_t evaluations = 1;

    if (f_best <= f_r && f_r <= f_second_worst) {
        s[n] = Vertex{std::move(r), f_r};
        return {std::move(s), evaluations, StepBranch::reflect_accept};
    }

    if (f_r < f_best) {
        ParameterVector e = expand(c, r, cfg.gamma);
        const double f_e = objective(e);
        ++evaluations;
        if (f_e < f_r) {
            s[n] = Vertex{std::move(e), f_e};
            return {std::move(s), evaluations, StepBranch::expand_accept};
        }
        s[n] = Vertex{std::move(r), f_r};
        return {std::move(s), evaluations, StepBranch::reflect_after_expand};
    }

    // f(r) >= f_{n-1}: contract toward the worst vertex or the reflected
    // point, whichever currently looks better.
    ParameterVector k = f_r >= f_worst ? contract(c, s[n].point, cfg.beta)
                                       : contract(c, r, cfg.beta);
    const double f_k = objective(k);
    ++evaluations;
    if (f_k < std::min(f_r, f_worst)) {
        s[n] = Vertex{std::move(k), f_k};
        return {std::move(s), evaluations, StepBranch::contract_accept};
    }

    s = shrink(std::move(s), objective);
    evaluations += n;
    return {std::move(s), evaluations, StepBranch::shrink};
}

OptimizerOutcome run(Simplex& s, const PolytopeConfig& cfg,
                     const Objective& objective, const StopPredicate& stop) {
    validate(cfg);
    OptimizerOutcome outcome;

    for (;;) {
        if (stop && stop()) {
            outcome.reason = StopReason::external_stop;
            break;
        }
        if (termination_measure(s) <= cfg.epsilon) {
            outcome.reason = StopReason::converged;
            break;
        }
        if (outcome.evaluations_used >= cfg.max_evaluations) {
            outcome.reason = StopReason::budget_exhausted;
            break;
        }
        StepResult result = step(std::move(s), cfg, objective);
        s = std::move(result.simplex);
        outcome.evaluations_used += result.evaluations;
    }

    const Vertex* best = &s.front();
    for (const Vertex& v : s)
        if (v.value < best->value)
            best = &v;
    outcome.best_point = best->point;
    outcome.best_value = best->value;
    return outcome;
}

}  // namespace polyrl
