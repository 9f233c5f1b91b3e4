#pragma once

#include "oridom/bounds.hpp"
#include "oridom/constructions.hpp"
#include "oridom/domination.hpp"
#include "oridom/errors.hpp"
#include "oridom/extremal.hpp"
#include "oridom/families.hpp"
#include "oridom/graph.hpp"
#include "oridom/hypergraph.hpp"
#include "oridom/invariants.hpp"
#include "oridom/orientation.hpp"
#include "oridom/orientation_engine.hpp"

namespace oridom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace oridom
