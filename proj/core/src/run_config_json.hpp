#pragma once

// Internal: shared JSON tree builder for the config echo (not installed).

#include <json.hpp>

#include "polyrl/config_io.hpp"

namespace polyrl::detail {

nlohmann::json run_config_tree(const RunConfig& cfg);

}  // namespace polyrl::detail
