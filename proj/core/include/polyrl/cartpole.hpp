#pragma once

#include <numbers>

#include "polyrl/rng.hpp"

namespace polyrl {

// Physical state of the cart-pole system.
// x: cart position (m), theta: pole angle from vertical (rad).
struct CartPoleState {
    double x = 0.0;
    double x_dot = 0.0;
    double theta = 0.0;
    double theta_dot = 0.0;
};

struct EnvConfig {
    double dt = 0.02;               // Euler time step (s)
    double gravity = 9.8;           // m/s^2
    double cart_mass = 1.0;         // kg
    double pole_mass = 0.1;         // kg
    double pole_half_length = 0.5;  // m, hinge to center of mass
    double force_magnitude = 10.0;  // N
    double theta_fail = 12.0 * std::numbers::pi / 180.0;  // rad
    double x_fail = 2.4;            // m

    // Initial states are drawn uniformly inside a fraction of the failure
    // ranges (velocities use a +-1 base range). Episodes never start failed.
    double init_frac_x = 0.2;
    double init_frac_x_dot = 0.5;
    double init_frac_theta = 0.2;
    double init_frac_theta_dot = 0.5;
};

void validate(const EnvConfig& cfg);

// One Euler step of the frictionless cart-pole dynamics. Positions are
// updated with the pre-step velocities, then velocities with the computed
// accelerations. Throws std::domain_error if the state blows up to
// non-finite values.
CartPoleState step(const CartPoleState& s, double force, const EnvConfig& cfg);

// True iff |theta| or |x| strictly exceeds its bound.
bool is_failure(const CartPoleState& s, const EnvConfig& cfg);

// Uniform draw within the scaled-down ranges above, in component order
// x, x_dot, theta, theta_dot (four draws from the stream).
CartPoleState random_initial_state(RandomStream& rng, const EnvConfig& cfg);

}  // namespace polyrl
