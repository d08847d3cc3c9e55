#pragma once

// Umbrella header for the solver library (the CLI layer is in cli.hpp).

#include "tdchain/complex.hpp"
#include "tdchain/dp_engine.hpp"
#include "tdchain/error.hpp"
#include "tdchain/generate.hpp"
#include "tdchain/graph.hpp"
#include "tdchain/hasse.hpp"
#include "tdchain/io.hpp"
#include "tdchain/obcp.hpp"
#include "tdchain/ohcp.hpp"
#include "tdchain/oracle.hpp"
#include "tdchain/scope.hpp"
#include "tdchain/tree_decomposition.hpp"
