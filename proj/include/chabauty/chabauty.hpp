#pragma once

// Explicit metric for the space of closed subsets of a proper metric space:
// truncate to balls around a base point, take capped Hausdorff distances,
// integrate against a positive weight. Exact piecewise evaluation for finite
// sets, quadrature with a tail bound for oracle-backed sets, and a checker
// for convergence of sequences of closed sets.

#include "convergence.hpp"
#include "curve.hpp"
#include "distance.hpp"
#include "generators.hpp"
#include "hausdorff.hpp"
#include "io.hpp"
#include "kdtree.hpp"
#include "oracle.hpp"
#include "quadrature.hpp"
#include "selftest.hpp"
#include "set.hpp"
#include "space.hpp"
#include "weight.hpp"
