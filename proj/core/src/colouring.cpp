#include "twlayout/colouring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twlayout/error.hpp"

namespace twlayout {

Colouring acyclic_colouring_ktree(const Graph& g, const VertexOrdering& order, int k) {
  const std::size_t n = g.vertex_count();
  if (!order.is_permutation_of(n)) throw LayoutError(ErrorKind::NotPEO, "ordering is not a permutation");
  Colouring c;
  c.colour.assign(n, -1);
  const auto backs = back_neighbourhoods(g, order.sequence);
  std::vector<char> used(static_cast<std::size_t>(k) + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& back = backs[i];
    if (static_cast<int>(back.size()) > k || !is_clique(g, back)) {
      throw LayoutError(ErrorKind::NotPEO, "earlier neighbours of vertex " + std::to_string(order.sequence[i]) +
                                               " do not form a clique of size <= " + std::to_string(k));
    }
    std::fill(used.begin(), used.end(), 0);
    for (Vertex w : back) used[static_cast<std::size_t>(c.colour[static_cast<std::size_t>(w)])] = 1;
    int col = 0;
    while (used[static_cast<std::size_t>(col)]) ++col;
    c.colour[static_cast<std::size_t>(order.sequence[i])] = col;
    c.colour_count = std::max(c.colour_count, col + 1);
  }
  return c;
}

AcyclicColouringReport verify_acyclic_colouring(const Graph& g, const Colouring& c) {
  AcyclicColouringReport r;
  const std::size_t n = g.vertex_count();
  r.colour_count = c.colour_count;
  if (c.colour.size() != n) {
    r.message = "colouring does not cover every vertex";
    return r;
  }
  r.proper = true;
  std::map<std::pair<int, int>, std::vector<Edge>> by_pair;
  for (const Edge& e : g.edges()) {
    const int a = c.colour[static_cast<std::size_t>(e.u)];
    const int b = c.colour[static_cast<std::size_t>(e.v)];
    if (a == b) {
      if (r.proper) {
        r.proper = false;
        r.witness = {e.u, e.v};
        r.message = "monochromatic edge";
      }
      continue;
    }
    by_pair[{std::min(a, b), std::max(a, b)}].push_back(e);
  }

  // One union-find array, reset only on the vertices each pair touches.
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  r.acyclic = true;
  for (const auto& [pair, edges] : by_pair) {
    for (const Edge& e : edges) {
      const Vertex a = find(e.u), b = find(e.v);
      if (a == b) {
        if (r.acyclic) {
          r.acyclic = false;
          r.bad_colour_a = pair.first;
          r.bad_colour_b = pair.second;
          if (r.proper) r.witness = {e.u, e.v};
          if (r.message.empty()) r.message = "bichromatic cycle";
        }
        break;
      }
      parent[static_cast<std::size_t>(a)] = b;
    }
    for (const Edge& e : edges) {
      parent[static_cast<std::size_t>(e.u)] = e.u;
      parent[static_cast<std::size_t>(e.v)] = e.v;
    }
  }
  r.ok = r.proper && r.acyclic;
  return r;
}

}  // namespace twlayout
