#pragma once

// Umbrella header pulling in the whole library.

#include "starop/bench.hpp"
#include "starop/dataset.hpp"
#include "starop/errors.hpp"
#include "starop/node_id.hpp"
#include "starop/oracle.hpp"
#include "starop/render.hpp"
#include "starop/reward.hpp"
#include "starop/solver.hpp"
#include "starop/star_graph.hpp"
