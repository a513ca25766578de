#include "polyrl/cartpole.hpp"

#include <cmath>
#include <stdexcept>

namespace polyrl {

void validate(const EnvConfig& cfg) {
    const double fields[] = {cfg.dt,           cfg.gravity,    cfg.cart_mass,
                             cfg.pole_mass,    cfg.pole_half_length,
                             cfg.force_magnitude, cfg.theta_fail, cfg.x_fail};
    for (double f : fields)
        if (!(f > 0.0))
            throw std::invalid_argument("env: physical constants must be positive");
    const double fracs[] = {cfg.init_frac_x, cfg.init_frac_x_dot,
                            cfg.init_frac_theta, cfg.init_frac_theta_dot};
    for (double f : fracs)
        if (!(f > 0.0))
            throw std::invalid_argument("env: initial-state fractions must be positive");
}

CartPoleState step(const CartPoleState& s, double force, const EnvConfig& cfg) {
    const double total_mass = cfg.cart_mass + cfg.pole_mass;
    const double sin_theta = std::sin(s.theta);
    const double cos_theta = std::cos(s.theta);

    const double theta_ddot =
        (cfg.gravity * sin_theta +
         cos_theta * (-force - cfg.pole_mass * cfg.pole_half_length *
                                   s.theta_dot * s.theta_dot * sin_theta) /
             total_mass) /
        (cfg.pole_half_length *
         (4.0 / 3.0 - cfg.pole_mass * cos_theta * cos_theta / total_mass));
    const double x_ddot =
        (force + cfg.pole_mass * cfg.pole_half_length *
                     (s.theta_dot * s.theta_dot * sin_theta - theta_ddot * cos_theta)) /
        total_mass;

    CartPoleState next;
    next.x = s.x + cfg.dt * s.x_dot;
    next.x_dot = s.x_dot + cfg.dt * x_ddot;
    next.theta = s.theta + cfg.dt * s.theta_dot;
    next.theta_dot = s.theta_dot + cfg.dt * theta_ddot;

    if (!std::isfinite(next.x) || !std::isfinite(next.x_dot) ||
        !std::isfinite(next.theta) || !std::isfinite(next.theta_dot))
        throw std::domain_error("cartpole: state became non-finite");
    return next;
}

bool is_failure(const CartPoleState& s, const EnvConfig& cfg) {
    return std::abs(s.theta) > cfg.theta_fail || std::abs(s.x) > cfg.x_fail;
}

CartPoleState random_initial_state(RandomStream& rng, const EnvConfig& cfg) {
    CartPoleState s;
    const double x_range = cfg.x_fail * cfg.init_frac_x;
    const double x_dot_range = 1.0 * cfg.init_frac_x_dot;
    const double theta_range = cfg.theta_fail * cfg.init_frac_theta;
    const double theta_dot_range = 1.0 * cfg.init_frac_theta_dot;
    s.x = rng.uniform(-x_range, x_range);
    s.x_dot = rng.uniform(-x_dot_range, x_dot_range);
    s.theta = rng.uniform(-theta_range, theta_range);
    s.theta_dot = rng.uniform(-theta_dot_range, theta_dot_range);
    return s;
}

}  // namespace polyrl
