#pragma once

/**
 * @file powerchord.hpp
 * @brief Umbrella header: groups, power graphs, chordality certificates,
 *        criteria oracles, the small-group catalog and serialization.
 */

#include "error.hpp"
#include "ntheory.hpp"
#include "permutation.hpp"
#include "finite_field.hpp"
#include "group.hpp"
#include "group_props.hpp"
#include "graph.hpp"
#include "power_graph.hpp"
#include "chordality.hpp"
#include "group_spec.hpp"
#include "catalog.hpp"
#include "oracles.hpp"
#include "witnesses.hpp"
#include "census.hpp"
#include "properties.hpp"
#include "io.hpp"
