#ifndef FLOWPOLY_FLOWPOLY_HPP
#define FLOWPOLY_FLOWPOLY_HPP

// Umbrella header: exact flow-polytope machinery for signed graphs.

#include "flowpoly/dynamic_kostant.hpp"
#include "flowpoly/graph.hpp"
#include "flowpoly/kostant.hpp"
#include "flowpoly/linalg.hpp"
#include "flowpoly/numeric.hpp"
#include "flowpoly/series.hpp"
#include "flowpoly/special_polytopes.hpp"
#include "flowpoly/trees_subdivision.hpp"
#include "flowpoly/vertex_geometry.hpp"
#include "flowpoly/volume.hpp"

#endif  // FLOWPOLY_FLOWPOLY_HPP
