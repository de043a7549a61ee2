#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtcatalan/error.hpp"
#include "qtcatalan/labelled_tree.hpp"

namespace qtcatalan {

inline constexpr int default_graph_enumeration_cap = 7;

// Simple graph on {0, ..., n-1}, stored as a bitmask over the vertex pairs
// (i, j), i < j, in lexicographic order.  Sized for exhaustive enumeration at
// small n rather than for large graphs.
class labelled_graph {
 public:
  labelled_graph() = default;
  labelled_graph(int n, std::uint64_t edge_mask) : n_(n), edges_(edge_mask) {}

  static int pair_count(int n) { return n * (n - 1) / 2; }

  static int edge_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  static labelled_graph from_tree(const labelled_tree& t) {
    labelled_graph g(t.vertex_count(), 0);
    for (const auto& [a, b] : t.edges()) g.add_edge(a, b);
    return g;
  }

  // Text form "n; i-j,i-j,...", e.g. "3; 0-1,0-2".
  static labelled_graph parse(std::string_view text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) raise(errc::bad_format, "missing ';'");
    int n = 0;
    try {
      n = std::stoi(std::string(text.substr(0, semi)));
    } catch (const std::exception&) {
      raise(errc::bad_format, "bad vertex count");
    }
    if (n < 1 || n > 11) raise(errc::bad_format, "vertex count out of range");
    labelled_graph g(n, 0);
    std::size_t pos = semi + 1;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    while (pos < text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view field = text.substr(pos, end - pos);
      const std::size_t dash = field.find('-');
      if (dash == std::string_view::npos) raise(errc::bad_format, "edge needs 'i-j'");
      int a = 0, b = 0;
      try {
        a = std::stoi(std::string(field.substr(0, dash)));
        b = std::stoi(std::string(field.substr(dash + 1)));
      } catch (const std::exception&) {
        raise(errc::bad_format, "bad edge endpoints");
      }
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
        raise(errc::bad_format, "edge endpoints out of range");
      }
      g.add_edge(a, b);
      pos = end + 1;
    }
    return g;
  }

  std::string to_string() const {
    std::string out = std::to_string(n_) + ";";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (!has_edge(i, j)) continue;
        out += first ? " " : ",";
        out += std::to_string(i) + "-" + std::to_string(j);
        first = false;
      }
    }
    return out;
  }

  int vertex_count() const { return n_; }
  std::uint64_t edge_mask() const { return edges_; }

  bool has_edge(int i, int j) const {
    return (edges_ >> edge_index(i, j, n_)) & 1u;
  }

  void add_edge(int i, int j) { edges_ |= std::uint64_t(1) << edge_index(i, j, n_); }

  int edge_count() const {
    int c = 0;
    for (std::uint64_t m = edges_; m != 0; m &= m - 1) ++c;
    return c;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (has_edge(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  // adjacency[v] as a vertex bitmask
  std::vector<std::uint32_t> adjacency() const {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (has_edge(i, j)) {
          adj[i] |= std::uint32_t(1) << j;
          adj[j] |= std::uint32_t(1) << i;
        }
      }
    }
    return adj;
  }

  bool is_connected() const {
    const auto adj = adjacency();
    std::uint32_t reached = 1;
    while (true) {
      std::uint32_t grown = reached;
      for (int v = 0; v < n_; ++v) {
        if ((reached >> v) & 1u) grown |= adj[v];
      }
      if (grown == reached) break;
      reached = grown;
    }
    return reached == (std::uint32_t(1) << n_) - 1;
  }

  friend bool operator==(const labelled_graph&, const labelled_graph&) = default;

 private:
  int n_ = 0;
  std::uint64_t edges_ = 0;
};

namespace detail {

// Core of the spanning-tree extraction, on adjacency bitmasks.  Vertices are
// visited from the most recently visited unseen vertex; edges to vertices
// already visited are skipped, so the visited edges form a tree.
inline std::vector<int> extract_spanning_parents(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> visit_order;
  visit_order.reserve(static_cast<std::size_t>(n));
  std::uint32_t visited = 0;
  std::uint32_t seen = 0;

  auto visit_neighbours = [&](int v) {
    for (int w = 0; w < n; ++w) {
      if (((adj[v] >> w) & 1u) && !((visited >> w) & 1u)) {
        visited |= std::uint32_t(1) << w;
        parent[w] = v;
        visit_order.push_back(w);
      }
    }
  };

  visited = 1;
  seen = 1;
  visit_order.push_back(0);
  visit_neighbours(0);
  while (seen != (std::uint32_t(1) << n) - 1) {
    int next = -1;
    for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
      if (!((seen >> *it) & 1u)) {
        next = *it;
        break;
      }
    }
    if (next == -1) raise(errc::not_connected, "unreached vertices remain");
    seen |= std::uint32_t(1) << next;
    visit_neighbours(next);
  }
  return parent;
}

}  // namespace detail

inline labelled_tree spanning_tree_extract(const labelled_graph& g) {
  if (!g.is_connected()) raise(errc::not_connected, "input graph is not connected");
  return labelled_tree::from_parents(detail::extract_spanning_parents(g.adjacency()));
}

// Every connected simple graph on {0..n-1} exactly once, in ascending order
// of the edge bitmask.
template <class Fn>
void for_each_connected_graph(int n, Fn&& fn, int cap = default_graph_enumeration_cap) {
  if (n < 1) raise(errc::unsupported_size, "need at least one vertex");
  if (n > cap) {
    raise(errc::unsupported_size,
          "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
  const int pairs = labelled_graph::pair_count(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
    labelled_graph g(n, mask);
    if (g.is_connected()) fn(g);
  }
}

inline unsigned long long connected_graph_count(int n, int cap = default_graph_enumeration_cap) {
  unsigned long long count = 0;
  for_each_connected_graph(n, [&](const labelled_graph&) { ++count; }, cap);
  return count;
}

}  // namespace qtcatalan
