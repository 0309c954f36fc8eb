#pragma once

#include "gdom/bench.hpp"
#include "gdom/bitset.hpp"
#include "gdom/bounds.hpp"
#include "gdom/domination.hpp"
#include "gdom/exact.hpp"
#include "gdom/graph.hpp"
#include "gdom/heuristics.hpp"
#include "gdom/ilp.hpp"
#include "gdom/instance_io.hpp"
#include "gdom/metrics.hpp"
#include "gdom/purification.hpp"
