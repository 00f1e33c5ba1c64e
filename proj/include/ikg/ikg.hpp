#pragma once

#include "ikg/graph.hpp"
#include "ikg/canon.hpp"
#include "ikg/exchange.hpp"
#include "ikg/cycles.hpp"
#include "ikg/minors.hpp"
#include "ikg/planarity.hpp"
#include "ikg/diagram.hpp"
#include "ikg/invariants.hpp"
#include "ikg/fixtures.hpp"
#include "ikg/spatial.hpp"
#include "ikg/catalog.hpp"
#include "ikg/claims.hpp"

namespace ikg {
inline constexpr const char* kVersion = "0.1.0";
}
