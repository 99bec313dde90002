#pragma once

#include "pathlattice/circulation.hpp"
#include "pathlattice/enumerate.hpp"
#include "pathlattice/errors.hpp"
#include "pathlattice/fixtures.hpp"
#include "pathlattice/flow.hpp"
#include "pathlattice/graph_io.hpp"
#include "pathlattice/lattice.hpp"
#include "pathlattice/plane_graph.hpp"
#include "pathlattice/verify.hpp"
