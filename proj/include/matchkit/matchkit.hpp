#pragma once

// Umbrella header.

#include "matchkit/analysis.hpp"
#include "matchkit/bipartite.hpp"
#include "matchkit/blossom.hpp"
#include "matchkit/checkers.hpp"
#include "matchkit/connectivity.hpp"
#include "matchkit/constructions.hpp"
#include "matchkit/decomposition.hpp"
#include "matchkit/enumerate.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/io.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/report.hpp"
#include "matchkit/suite.hpp"
#include "matchkit/verdict.hpp"
#include "matchkit/version.hpp"
