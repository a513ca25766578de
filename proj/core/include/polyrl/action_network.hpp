#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>

#include "polyrl/cartpole.hpp"
#include "polyrl/types.hpp"

namespace polyrl {

// Fixed-topology feedforward action network: sigmoid hidden layer, sigmoid
// output, optional direct input->output connections.
struct NetworkTopology {
    std::size_t inputs = 4;
    std::size_t hidden = 5;
    std::size_t outputs = 1;
    bool shortcut_connections = true;
};

void validate(const NetworkTopology& t);

// Total number of weights and biases. 35 for the default 4-5-1 topology
// with shortcuts.
std::size_t parameter_count(const NetworkTopology& t);

// Canonical flat parameter layout:
//   [input->hidden weights, one row per hidden unit]
//   [hidden biases]
//   [hidden->output weights, one row per output unit]
//   [input->output shortcut weights, one row per output unit (if enabled)]
//   [output biases]
struct UnpackedWeights {
    std::vector<double> input_hidden;
    std::vector<double> hidden_bias;
    std::vector<double> hidden_output;
    std::vector<double> input_output;  // empty without shortcuts
    std::vector<double> output_bias;
};

UnpackedWeights unpack(const NetworkTopology& t, const ParameterVector& params);
ParameterVector pack(const NetworkTopology& t, const UnpackedWeights& w);

// Forward pass for a single-output network; the result is strictly inside
// (0, 1). Throws std::domain_error on non-finite inputs.
double forward(const NetworkTopology& t, const ParameterVector& params,
               std::span<const double> inputs);

// Network inputs are the state components over their characteristic ranges
// (positions over the failure bounds; velocities over the conventional
// scales 2 m/s and 3 rad/s, which the state may exceed).
std::array<double, 4> scale_state(const CartPoleState& s, const EnvConfig& cfg);

// --- persistence ---------------------------------------------------------
// Plain-text weight file:
//   line 1: "topology <inputs> <hidden> <outputs> <shortcut|noshortcut>"
//   line 2: parameter count
//   then one parameter per line, canonical layout order, shortest
//   round-trip decimal formatting (save -> load -> save is byte-identical).

void save_weights(const std::filesystem::path& path, const NetworkTopology& t,
                  const ParameterVector& params);

struct LoadedNetwork {
    NetworkTopology topology;
    ParameterVector params;
};

// Throws std::runtime_error naming the path and offending line on any
// malformed content.
LoadedNetwork load_weights(const std::filesystem::path& path);

}  // namespace polyrl
