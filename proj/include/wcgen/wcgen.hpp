#pragma once

// Weakly chordal graph generation: separator-driven edge insertion over an
// initial layout of glued 4-cycles, a two-pair baseline generator, and the
// hole-detection oracle that certifies both.

#include "wcgen/baseline.hpp"
#include "wcgen/bench.hpp"
#include "wcgen/graph.hpp"
#include "wcgen/inserter.hpp"
#include "wcgen/io.hpp"
#include "wcgen/layout.hpp"
#include "wcgen/oracle.hpp"
#include "wcgen/rng.hpp"
#include "wcgen/trace.hpp"
#include "wcgen/tree.hpp"
