#include "twlayout/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "twlayout/error.hpp"

namespace twlayout {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilies[] = {
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Star, "star"},
    {Family::Complete, "complete"},
    {Family::CompleteBipartite, "complete-bipartite"},
    {Family::Grid, "grid"},
    {Family::Caterpillar, "caterpillar"},
    {Family::RandomTree, "tree"},
    {Family::RandomKTree, "ktree"},
    {Family::Gnp, "gnp"},
    {Family::Gk, "gk"},
};

void require(bool cond, const char* what) {
  if (!cond) throw LayoutError(ErrorKind::BadParams, what);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

GeneratedGraph random_tree(int n, std::mt19937_64& rng) {
  GeneratedGraph out{Graph(static_cast<std::size_t>(n)), {}, {}};
  if (n < 2) return out;
  // Uniform labelled tree from a random Pruefer sequence.
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = static_cast<int>(pick(rng, static_cast<std::size_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);
  }
  std::make_heap(leaves.begin(), leaves.end(), std::greater<>());
  for (int c : code) {
    std::pop_heap(leaves.begin(), leaves.end(), std::greater<>());
    const int leaf = leaves.back();
    leaves.pop_back();
    out.graph.add_edge(leaf, c);
    if (--degree[static_cast<std::size_t>(c)] == 1) {
      leaves.push_back(c);
      std::push_heap(leaves.begin(), leaves.end(), std::greater<>());
    }
  }
  std::sort(leaves.begin(), leaves.end());
  out.graph.add_edge(leaves[0], leaves[1]);
  return out;
}

GeneratedGraph random_ktree(int n, int k, std::mt19937_64& rng) {
  require(k >= 0, "ktree: k must be non-negative");
  require(n >= k, "ktree: n must be at least k");
  GeneratedGraph out{Graph(static_cast<std::size_t>(n)), {}, {}};
  std::vector<Vertex> initial(static_cast<std::size_t>(k));
  std::iota(initial.begin(), initial.end(), 0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) out.graph.add_edge(i, j);
  }
  // Every k-clique of the current strict k-tree, with a bag that contains it.
  std::vector<std::vector<Vertex>> cliques{initial};
  std::vector<int> clique_bag{0};
  out.decomposition.bags.push_back(initial);
  for (int v = k; v < n; ++v) {
    const std::size_t h = pick(rng, cliques.size());
    const std::vector<Vertex> host = cliques[h];
    const int host_bag = clique_bag[h];
    for (Vertex c : host) out.graph.add_edge(v, c);
    out.attach_cliques.push_back(host);

    std::vector<Vertex> bag = host;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    const int bag_id = static_cast<int>(out.decomposition.bags.size());
    out.decomposition.bags.push_back(bag);
    if (k == 0) continue;
    out.decomposition.tree_edges.emplace_back(host_bag, bag_id);
    for (std::size_t drop = 0; drop < host.size(); ++drop) {
      std::vector<Vertex> c;
      for (std::size_t i = 0; i < host.size(); ++i) {
        if (i != drop) c.push_back(host[i]);
      }
      c.push_back(v);
      std::sort(c.begin(), c.end());
      cliques.push_back(std::move(c));
      clique_bag.push_back(bag_id);
    }
  }
  if (k == 0 && n > 0) {
    // Bag 0 is the empty initial clique; the singleton bags form a path.
    out.decomposition.bags.erase(out.decomposition.bags.begin());
    for (int i = 1; i < n; ++i) out.decomposition.tree_edges.emplace_back(i - 1, i);
  }
  return out;
}

void append_gk(int k, Graph& g, Vertex offset, TreeDecomposition& td) {
  if (k == 0) {
    td.bags.push_back({offset});
    return;
  }
  const int mid = gk_middle_count(k);
  const std::size_t sub = *gk_vertex_count(k - 1);
  std::vector<Vertex> clique(static_cast<std::size_t>(k));
  std::iota(clique.begin(), clique.end(), offset);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) g.add_edge(offset + i, offset + j);
  }
  const int root_bag = static_cast<int>(td.bags.size());
  td.bags.push_back(clique);
  for (int j = 0; j < mid; ++j) {
    const Vertex w = offset + k + j;
    for (int i = 0; i < k; ++i) g.add_edge(offset + i, w);
    std::vector<Vertex> link = clique;
    link.push_back(w);
    const int link_bag = static_cast<int>(td.bags.size());
    td.bags.push_back(link);
    td.tree_edges.emplace_back(root_bag, link_bag);

    const Vertex copy = offset + k + mid + static_cast<Vertex>(static_cast<std::size_t>(j) * sub);
    for (std::size_t x = 0; x < sub; ++x) g.add_edge(w, copy + static_cast<Vertex>(x));
    const int first = static_cast<int>(td.bags.size());
    append_gk(k - 1, g, copy, td);
    for (std::size_t b = static_cast<std::size_t>(first); b < td.bags.size(); ++b) td.bags[b].push_back(w);
    td.tree_edges.emplace_back(link_bag, first);
  }
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  for (const auto& fn : kFamilies) {
    if (fn.family == f) return fn.name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& fn : kFamilies) {
    if (fn.name == name) return fn.family;
  }
  throw LayoutError(ErrorKind::BadParams, "unknown family: " + std::string(name));
}

bool is_randomized(Family f) noexcept {
  return f == Family::RandomTree || f == Family::RandomKTree || f == Family::Gnp || f == Family::Caterpillar;
}

int gk_middle_count(int k) { return 2 * ((k + 1) * (k + 2) / 2 - 1 - k) + 1; }

std::optional<std::size_t> gk_vertex_count(int k) {
  if (k < 0) return std::nullopt;
  std::size_t size = 1;
  constexpr std::size_t kMax = std::size_t{1} << 40;
  for (int i = 1; i <= k; ++i) {
    const auto mid = static_cast<std::size_t>(gk_middle_count(i));
    if (size > kMax / mid) return std::nullopt;
    size = static_cast<std::size_t>(i) + mid + mid * size;
  }
  return size;
}

GeneratedGraph generate_gk(int k, std::size_t vertex_budget) {
  require(k >= 0, "gk: k must be non-negative");
  const auto size = gk_vertex_count(k);
  if (!size || *size > vertex_budget) {
    throw LayoutError(ErrorKind::ResourceLimit, "G_" + std::to_string(k) + " exceeds the vertex budget of " +
                                                    std::to_string(vertex_budget));
  }
  GeneratedGraph out{Graph(*size), {}, {}};
  append_gk(k, out.graph, 0, out.decomposition);
  return out;
}

GeneratedGraph generate(Family family, const GeneratorParams& p) {
  if (is_randomized(family)) require(p.seed.has_value(), "a seed is required for randomized families");
  std::mt19937_64 rng(p.seed.value_or(0));
  auto sized = [&](int minimum) {
    require(p.n >= minimum, "n is too small for this family");
    if (static_cast<std::size_t>(p.n) > p.vertex_budget) {
      throw LayoutError(ErrorKind::ResourceLimit, "n exceeds the vertex budget");
    }
    return GeneratedGraph{Graph(static_cast<std::size_t>(p.n)), {}, {}};
  };
  switch (family) {
    case Family::Path: {
      auto out = sized(0);
      for (int i = 1; i < p.n; ++i) out.graph.add_edge(i - 1, i);
      return out;
    }
    case Family::Cycle: {
      auto out = sized(3);
      for (int i = 0; i < p.n; ++i) out.graph.add_edge(i, (i + 1) % p.n);
      return out;
    }
    case Family::Star: {
      auto out = sized(1);
      for (int i = 1; i < p.n; ++i) out.graph.add_edge(0, i);
      return out;
    }
    case Family::Complete: {
      auto out = sized(0);
      for (int i = 0; i < p.n; ++i) {
        for (int j = i + 1; j < p.n; ++j) out.graph.add_edge(i, j);
      }
      return out;
    }
    case Family::CompleteBipartite: {
      require(p.a >= 0 && p.b >= 0, "complete-bipartite: part sizes must be non-negative");
      GeneratedGraph out{Graph(static_cast<std::size_t>(p.a + p.b)), {}, {}};
      for (int i = 0; i < p.a; ++i) {
        for (int j = 0; j < p.b; ++j) out.graph.add_edge(i, p.a + j);
      }
      return out;
    }
    case Family::Grid: {
      require(p.rows >= 1 && p.cols >= 1, "grid: rows and cols must be positive");
      GeneratedGraph out{Graph(static_cast<std::size_t>(p.rows) * static_cast<std::size_t>(p.cols)), {}, {}};
      for (int r = 0; r < p.rows; ++r) {
        for (int c = 0; c < p.cols; ++c) {
          const int v = r * p.cols + c;
          if (c + 1 < p.cols) out.graph.add_edge(v, v + 1);
          if (r + 1 < p.rows) out.graph.add_edge(v, v + p.cols);
        }
      }
      return out;
    }
    case Family::Caterpillar: {
      auto out = sized(1);
      const int spine = std::max(1, p.n / 3);
      for (int i = 1; i < spine; ++i) out.graph.add_edge(i - 1, i);
      for (int v = spine; v < p.n; ++v) {
        out.graph.add_edge(v, static_cast<Vertex>(pick(rng, static_cast<std::size_t>(spine))));
      }
      return out;
    }
    case Family::RandomTree: {
      sized(0);
      return random_tree(p.n, rng);
    }
    case Family::RandomKTree: {
      sized(0);
      return random_ktree(p.n, p.k, rng);
    }
    case Family::Gnp: {
      require(p.p >= 0.0 && p.p <= 1.0, "gnp: p must lie in [0, 1]");
      auto out = sized(0);
      std::bernoulli_distribution coin(p.p);
      for (int i = 0; i < p.n; ++i) {
        for (int j = i + 1; j < p.n; ++j) {
          if (coin(rng)) out.graph.add_edge(i, j);
        }
      }
      return out;
    }
    case Family::Gk:
      return generate_gk(p.k, p.vertex_budget);
  }
  throw LayoutError(ErrorKind::BadParams, "unsupported family");
}

}  // namespace twlayout
