#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twlayout/decomposition.hpp"
#include "twlayout/graph.hpp"

namespace twlayout {

enum class Family {
  Path,
  Cycle,
  Star,
  Complete,
  CompleteBipartite,
  Grid,
  Caterpillar,
  RandomTree,
  RandomKTree,
  Gnp,
  Gk,
};

std::string_view to_string(Family f) noexcept;
/// Throws BadParams for an unknown name.
Family parse_family(std::string_view name);
bool is_randomized(Family f) noexcept;

struct GeneratorParams {
  int n = 0;
  int k = 0;
  int rows = 0;
  int cols = 0;
  int a = 0;  // complete bipartite part sizes
  int b = 0;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  std::size_t vertex_budget = 200000;
};

struct GeneratedGraph {
  Graph graph;
  /// For random k-trees: attach_cliques[i] is the k-clique the i-th added
  /// vertex (id k+i) was joined to.
  std::vector<std::vector<Vertex>> attach_cliques;
  /// Width-k decomposition built alongside k-trees and G_k; empty otherwise.
  TreeDecomposition decomposition;
};

/// Vertex id schemes:
///   path/cycle: 0..n-1 along the path;  star: centre 0, leaves 1..n-1;
///   grid: row-major r*cols+c;  complete bipartite: part A = 0..a-1;
///   random k-tree: initial clique 0..k-1, then vertices in insertion order;
///   caterpillar: spine 0..s-1 followed by leaves;  gk: see generate_gk.
/// Randomized families require a seed (BadParams otherwise) and are
/// deterministic for a fixed seed.
GeneratedGraph generate(Family family, const GeneratorParams& params);

/// Vertex count of G_k, or nullopt on overflow.
std::optional<std::size_t> gk_vertex_count(int k);

/// Number of middle vertices of G_k: 2(binom(k+2,2) - 1 - k) + 1.
int gk_middle_count(int k);

/// G_0 = K_1; G_k has the k-clique 0..k-1, middle vertices k..k+n-1 joined to
/// the clique, and then n consecutive copies of G_{k-1}, copy j fully joined
/// to middle vertex j. Throws ResourceLimit beyond `vertex_budget`.
GeneratedGraph generate_gk(int k, std::size_t vertex_budget = 200000);

}  // namespace twlayout
