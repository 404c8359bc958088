#pragma once

#include "hopfgate/dsr.hpp"

#include <string>

namespace hopfgate {

/// Graphviz DOT rendering: S-vertices as ellipses, R-vertices as boxes,
/// positive edges solid, negative dashed, infinite labels printed as "inf",
/// undirected edges without arrowheads. Output order is stable.
std::string to_dot(const DsrGraph& g, const std::string& name = "dsr");

/// Display-only pruning: repeatedly remove vertices of degree <= 1 together
/// with their edges, keeping exactly the cycle-supporting subgraph.
DsrGraph prune_acyclic_parts(const DsrGraph& g);

} // namespace hopfgate
