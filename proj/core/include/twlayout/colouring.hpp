#pragma once

#include <string>
#include <vector>

#include "twlayout/graph.hpp"
#include "twlayout/ordering.hpp"

namespace twlayout {

struct Colouring {
  std::vector<int> colour;  // indexed by vertex
  int colour_count = 0;
};

struct AcyclicColouringReport {
  bool ok = false;
  bool proper = false;
  bool acyclic = false;
  int colour_count = 0;
  // First offending colour pair, when !acyclic.
  int bad_colour_a = -1;
  int bad_colour_b = -1;
  std::vector<Vertex> witness;  // monochromatic edge or a vertex on a bichromatic cycle
  std::string message;
};

/// Greedy colouring along a k-tree elimination ordering: each vertex takes the
/// smallest colour absent from its earlier neighbours. Uses at most k+1
/// colours and is acyclic. Throws NotPEO if some back-neighbourhood is not a
/// clique of size at most k.
Colouring acyclic_colouring_ktree(const Graph& g, const VertexOrdering& order, int k);

/// Properness plus, for every pair of colours, acyclicity of the subgraph
/// induced by the edges between the two colour classes.
AcyclicColouringReport verify_acyclic_colouring(const Graph& g, const Colouring& c);

}  // namespace twlayout
