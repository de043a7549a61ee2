#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtcatalan/error.hpp"

namespace qtcatalan {

// Tree on vertex set {0, ..., n-1} rooted at 0, stored as a parent map.
// Child order is not stored; where an order matters it is derived from the
// labels (children listed in increasing order).
class labelled_tree {
 public:
  static labelled_tree from_parents(std::vector<int> parent) {
    const int n = static_cast<int>(parent.size());
    if (n == 0 || parent[0] != -1) {
      raise(errc::bad_format, "vertex 0 must be the parentless root");
    }
    for (int v = 1; v < n; ++v) {
      if (parent[v] < 0 || parent[v] >= n) raise(errc::bad_format, "parent out of range");
    }
    for (int v = 1; v < n; ++v) {
      int hops = 0;
      for (int u = v; u != 0; u = parent[u]) {
        if (++hops > n) raise(errc::bad_format, "parent map contains a cycle");
      }
    }
    labelled_tree t;
    t.parent_ = std::move(parent);
    return t;
  }

  // Text form "p_1,...,p_{n-1}": the parents of vertices 1..n-1.  The
  // one-vertex tree is the empty string.
  static labelled_tree parse(std::string_view text) {
    std::vector<int> parent{-1};
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      const std::string field(text.substr(pos, end - pos));
      try {
        parent.push_back(std::stoi(field));
      } catch (const std::exception&) {
        raise(errc::bad_format, "bad parent entry '" + field + "'");
      }
      pos = end + 1;
    }
    return from_parents(std::move(parent));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t v = 1; v < parent_.size(); ++v) {
      if (v > 1) out += ',';
      out += std::to_string(parent_[v]);
    }
    return out;
  }

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int parent_of(int v) const { return parent_[static_cast<std::size_t>(v)]; }

  // children[v] in increasing label order
  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> kids(parent_.size());
    for (int v = 1; v < vertex_count(); ++v) kids[parent_[v]].push_back(v);
    return kids;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(parent_.size() - 1);
    for (int v = 1; v < vertex_count(); ++v) {
      out.emplace_back(std::min(v, parent_[v]), std::max(v, parent_[v]));
    }
    return out;
  }

  friend bool operator==(const labelled_tree&, const labelled_tree&) = default;

 private:
  std::vector<int> parent_;
};

// Ordered pairs (i, j) with 0 < i < j and j a descendant of i.
inline long long coinversions(const labelled_tree& t) {
  long long count = 0;
  for (int j = 1; j < t.vertex_count(); ++j) {
    for (int i = t.parent_of(j); i > 0; i = t.parent_of(i)) {
      if (i < j) ++count;
    }
  }
  return count;
}

// d~_0 = 0 and d~_j = d~_i + k - 1 when j is the k-th smallest child of i.
inline std::vector<int> d_tilde(const labelled_tree& t) {
  const auto kids = t.children();
  std::vector<int> d(static_cast<std::size_t>(t.vertex_count()), 0);
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (std::size_t k = 0; k < kids[v].size(); ++k) {
      const int c = kids[v][k];
      d[c] = d[v] + static_cast<int>(k);
      order.push_back(c);
    }
  }
  return d;
}

// Addable edges of vertex i: pairs {i, j} where j is a smaller sibling of
// some vertex on the path from i to the root.
inline std::vector<std::pair<int, int>> addable_edges(const labelled_tree& t, int i) {
  const auto kids = t.children();
  std::vector<std::pair<int, int>> out;
  for (int k = i; k != 0; k = t.parent_of(k)) {
    for (int j : kids[t.parent_of(k)]) {
      if (j < k) out.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  return out;
}

inline std::set<std::pair<int, int>> addable_edges_all(const labelled_tree& t) {
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < t.vertex_count(); ++i) {
    for (const auto& e : addable_edges(t, i)) out.insert(e);
  }
  return out;
}

namespace detail {

inline labelled_tree tree_from_pruefer(const std::vector<int>& seq, int n) {
  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
  } else if (n > 2) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[s];
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int s : seq) {
      for (int leaf = 0; leaf < n; ++leaf) {
        if (degree[leaf] == 1 && !used[leaf]) {
          edges.emplace_back(leaf, s);
          used[leaf] = 1;
          --degree[s];
          break;
        }
      }
    }
    int first = -1;
    for (int v = 0; v < n; ++v) {
      if (!used[v] && degree[v] == 1) {
        if (first == -1) first = v;
        else edges.emplace_back(first, v);
      }
    }
  }
  // orient toward the root
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> order{0};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : adj[order[i]]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  return labelled_tree::from_parents(std::move(parent));
}

}  // namespace detail

// Every labelled tree on {0..n-1} exactly once, decoded from sequences of
// length n-2 over the vertex set in lexicographic order.
template <class Fn>
void for_each_labelled_tree(int n, Fn&& fn) {
  if (n < 1) raise(errc::unsupported_size, "need at least the root vertex");
  if (n <= 2) {
    fn(detail::tree_from_pruefer({}, n));
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(n) - 2, 0);
  while (true) {
    fn(detail::tree_from_pruefer(seq, n));
    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 0 && seq[pos] == n - 1) {
      seq[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++seq[pos];
  }
}

inline unsigned long long labelled_tree_count(int n) {
  if (n <= 2) return 1;
  unsigned long long total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<unsigned long long>(n);
  return total;
}

}  // namespace qtcatalan
