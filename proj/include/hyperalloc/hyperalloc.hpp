#pragma once

#include "hyperalloc/allocation.hpp"
#include "hyperalloc/conflict_graph.hpp"
#include "hyperalloc/evaluator.hpp"
#include "hyperalloc/harness.hpp"
#include "hyperalloc/hypergraph.hpp"
#include "hyperalloc/hypergraph_alloc.hpp"
#include "hyperalloc/interference.hpp"
#include "hyperalloc/op_counter.hpp"
#include "hyperalloc/radio.hpp"
#include "hyperalloc/random.hpp"
#include "hyperalloc/scenario.hpp"
#include "hyperalloc/set_packing.hpp"
#include "hyperalloc/stats.hpp"
#include "hyperalloc/units.hpp"
