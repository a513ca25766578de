#pragma once

#include <functional>
#include <vector>

namespace polyrl {

// Flat vector of controller parameters (weights and biases); the search
// point every module exchanges.
using ParameterVector = std::vector<double>;

// Objective callbacks may be stateful (episodic objectives close over their
// own random stream), so they are passed around as std::function rather than
// a pure function pointer.
using Objective = std::function<double(const ParameterVector&)>;

}  // namespace polyrl
