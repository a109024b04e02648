#pragma once
// umbrella header

#include "caps.hpp"
#include "covering.hpp"
#include "cut_lattice.hpp"
#include "edge_vector.hpp"
#include "errors.hpp"
#include "graph_io.hpp"
#include "laplacian.hpp"
#include "linalg.hpp"
#include "multigraph.hpp"
#include "orientations.hpp"
#include "polytope.hpp"
#include "poset.hpp"
#include "random_graph.hpp"
#include "rational.hpp"
#include "verify.hpp"
#include "voronoi_cut.hpp"
#include "voronoi_flow.hpp"
