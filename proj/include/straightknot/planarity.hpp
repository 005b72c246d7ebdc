#pragma once

// Planarity of double-occurrence (Gauss) words.
//
// The word's 4-regular graph gets one wheel per crossing: a hub joined to a
// rim r0-r1-r2-r3. The first pass through the crossing enters at r0 and
// leaves at r2, the second enters at r1 and leaves at r3, so any planar
// embedding keeps the two passes transverse. Traversal edges are subdivided
// to keep the graph simple. The word has a classical realization iff this
// graph is planar.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "straightknot/words.hpp"

namespace straightknot {

/// Per-crossing orientation read off a planar embedding: +1 when the rim
/// vertices occur around the hub as r0, r1, r2, r3, and -1 for r0, r3, r2, r1.
/// Reflecting the whole embedding negates every entry.
struct GaussEmbedding {
  std::vector<int> rotation;  // indexed by crossing label - 1
};

namespace detail {

using PlanarGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                          boost::property<boost::vertex_index_t, int>,
                                          boost::property<boost::edge_index_t, int>>;

inline std::optional<GaussEmbedding> embed_gauss_word(const std::vector<int>& gauss, bool want_rotation) {
  if (gauss.empty()) return GaussEmbedding{};
  if (gauss.size() % 2 != 0) throw std::invalid_argument("Gauss word must have even length");
  int n = 0;
  for (int x : gauss) n = std::max(n, x);
  if (static_cast<int>(gauss.size()) != 2 * n) throw std::invalid_argument("Gauss labels must be 1..n");

  const int len = static_cast<int>(gauss.size());
  // vertices: 5 per crossing (hub, r0..r3), then one subdivision vertex per traversal edge
  PlanarGraph g(5 * n + len);
  auto hub = [](int c) { return 5 * (c - 1); };
  auto rim = [](int c, int k) { return 5 * (c - 1) + 1 + k; };
  for (int c = 1; c <= n; ++c) {
    for (int k = 0; k < 4; ++k) {
      boost::add_edge(hub(c), rim(c, k), g);
      boost::add_edge(rim(c, k), rim(c, (k + 1) % 4), g);
    }
  }
  std::vector<int> seen(n + 1, 0);
  std::vector<int> entry(len), exit(len);
  for (int v = 0; v < len; ++v) {
    const int c = gauss[v];
    if (c < 1 || c > n || seen[c] >= 2) throw std::invalid_argument("Gauss labels must each occur twice");
    const int pass = seen[c]++;
    entry[v] = rim(c, pass == 0 ? 0 : 1);
    exit[v] = rim(c, pass == 0 ? 2 : 3);
  }
  for (int v = 0; v < len; ++v) {
    const int mid = 5 * n + v;
    boost::add_edge(exit[v], mid, g);
    boost::add_edge(mid, entry[(v + 1) % len], g);
  }

  auto edge_index = boost::get(boost::edge_index, g);
  int ei = 0;
  for (auto [it, end] = boost::edges(g); it != end; ++it) boost::put(edge_index, *it, ei++);

  using Edge = boost::graph_traits<PlanarGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(boost::num_vertices(g));
  const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                                          boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!planar) return std::nullopt;

  GaussEmbedding out;
  if (!want_rotation) return out;
  out.rotation.resize(n);
  for (int c = 1; c <= n; ++c) {
    const auto h = hub(c);
    std::array<int, 4> order{};
    int k = 0;
    for (const Edge& e : embedding[h]) {
      const auto other = boost::source(e, g) == static_cast<std::size_t>(h) ? boost::target(e, g) : boost::source(e, g);
      order[k++] = static_cast<int>(other) - h - 1;
    }
    int pos0 = 0;
    while (order[pos0] != 0) ++pos0;
    out.rotation[c - 1] = order[(pos0 + 1) % 4] == 1 ? 1 : -1;
  }
  return out;
}

}  // namespace detail

/// Planar embedding data for a Gauss word, or absent when non-planar.
inline std::optional<GaussEmbedding> embed_gauss_word(const std::vector<int>& gauss) {
  return detail::embed_gauss_word(gauss, true);
}

inline bool gauss_word_planar(const std::vector<int>& gauss) {
  return detail::embed_gauss_word(gauss, false).has_value();
}

/// Independent realizability test for straight words, used to check the
/// augmentation search.
inline bool oracle_realizable(const StraightWord& w) { return gauss_word_planar(to_knot_word(w).entries()); }

}  // namespace straightknot
