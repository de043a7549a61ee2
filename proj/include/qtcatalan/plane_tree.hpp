#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtcatalan/dyck_path.hpp"
#include "qtcatalan/error.hpp"

namespace qtcatalan {

// Rooted tree with linearly ordered children; equality respects child order.
struct plane_tree {
  std::vector<plane_tree> children;

  int vertex_count() const {
    int total = 1;
    for (const plane_tree& c : children) total += c.vertex_count();
    return total;
  }

  friend bool operator==(const plane_tree& a, const plane_tree& b) {
    return a.children == b.children;
  }
};

namespace detail {

inline void render_tree(const plane_tree& t, std::string& out) {
  out.push_back('(');
  for (const plane_tree& c : t.children) render_tree(c, out);
  out.push_back(')');
}

}  // namespace detail

// Balanced-parentheses code: every vertex renders as "(" + children + ")".
inline std::string to_string(const plane_tree& t) {
  std::string out;
  detail::render_tree(t, out);
  return out;
}

inline plane_tree parse_tree(std::string_view text) {
  if (text.empty()) raise(errc::bad_format, "empty tree text");
  plane_tree root;
  std::vector<plane_tree*> stack;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') {
      if (stack.empty()) {
        if (i != 0) raise(errc::bad_format, "trailing text after the root");
        stack.push_back(&root);
      } else {
        stack.back()->children.emplace_back();
        stack.push_back(&stack.back()->children.back());
      }
    } else if (c == ')') {
      if (stack.empty()) raise(errc::bad_format, "unmatched ')'");
      stack.pop_back();
      if (stack.empty() && i + 1 != text.size()) {
        raise(errc::bad_format, "trailing text after the root");
      }
    } else {
      raise(errc::bad_format, std::string("unexpected character '") + c + "'");
    }
  }
  if (!stack.empty()) raise(errc::bad_format, "unmatched '('");
  return root;
}

namespace detail {

// Arena form used by the traversal algorithms: vertices in preorder, root 0.
struct flat_tree {
  std::vector<int> parent;              // parent[0] == -1
  std::vector<std::vector<int>> kids;   // in child order

  int size() const { return static_cast<int>(parent.size()); }
};

inline void flatten_rec(const plane_tree& t, int me, flat_tree& out) {
  for (const plane_tree& c : t.children) {
    const int id = out.size();
    out.parent.push_back(me);
    out.kids.emplace_back();
    out.kids[me].push_back(id);
    flatten_rec(c, id, out);
  }
}

inline flat_tree flatten(const plane_tree& t) {
  flat_tree out;
  out.parent.push_back(-1);
  out.kids.emplace_back();
  flatten_rec(t, 0, out);
  return out;
}

inline plane_tree unflatten(const flat_tree& f, int v = 0) {
  plane_tree t;
  t.children.reserve(f.kids[v].size());
  for (int c : f.kids[v]) t.children.push_back(unflatten(f, c));
  return t;
}

// Labelling A: root 0, the k-th leftmost child of a vertex labelled m gets
// m + k - 1.  Labelling D: distance to the root minus one, so the root is -1.
inline std::vector<int> a_labels(const flat_tree& f) {
  std::vector<int> label(f.parent.size(), 0);
  for (int v = 0; v < f.size(); ++v) {
    for (std::size_t k = 0; k < f.kids[v].size(); ++k) {
      label[f.kids[v][k]] = label[v] + static_cast<int>(k);
    }
  }
  return label;
}

inline std::vector<int> d_labels(const flat_tree& f) {
  std::vector<int> label(f.parent.size(), -1);
  for (int v = 1; v < f.size(); ++v) label[v] = label[f.parent[v]] + 1;
  return label;
}

}  // namespace detail

enum class labelling_kind { a, d };

// Vertex labels indexed by preorder id (root = 0).
struct vertex_labelling {
  labelling_kind kind = labelling_kind::a;
  std::vector<int> labels;
};

inline vertex_labelling label(const plane_tree& t, labelling_kind kind) {
  const detail::flat_tree f = detail::flatten(t);
  return {kind, kind == labelling_kind::a ? detail::a_labels(f) : detail::d_labels(f)};
}

namespace detail {

inline std::vector<int> read_a_impl(const flat_tree& f) {
  const int n = f.size() - 1;
  std::vector<int> word;
  word.reserve(n);
  if (n == 0) return word;
  const std::vector<int> label = a_labels(f);
  std::vector<char> appended(f.parent.size(), 0);
  std::vector<char> expanded(f.parent.size(), 0);
  auto expand = [&](int v) {
    for (int c : f.kids[v]) {  // sibling labels increase left to right
      word.push_back(label[c]);
      appended[c] = 1;
    }
    expanded[v] = 1;
  };
  expand(0);
  while (static_cast<int>(word.size()) < n) {
    int best = -1;
    bool tie = false;
    for (int v = 1; v < f.size(); ++v) {
      if (!appended[v] || expanded[v] || f.kids[v].empty()) continue;
      if (best == -1 || label[v] > label[best]) {
        best = v;
        tie = false;
      } else if (label[v] == label[best]) {
        tie = true;
      }
    }
    if (best == -1) raise(errc::internal_invariant_violation, "reading word stalled");
    if (tie) {
      raise(errc::ambiguous_selection,
            "two expandable vertices share label " + std::to_string(label[best]));
    }
    expand(best);
  }
  return word;
}

inline std::vector<int> read_d_impl(const flat_tree& f) {
  const int n = f.size() - 1;
  std::vector<int> word;
  if (n == 0) return word;
  const std::vector<int> label = d_labels(f);
  std::vector<char> appended(f.parent.size(), 0);
  std::vector<std::size_t> next_child(f.parent.size(), 0);
  appended[0] = 1;  // the root's -1 entry is appended first and removed at the end
  while (static_cast<int>(word.size()) < n) {
    int best = -1;
    bool tie = false;
    for (int v = 0; v < f.size(); ++v) {
      if (!appended[v] || next_child[v] >= f.kids[v].size()) continue;
      if (best == -1 || label[v] > label[best]) {
        best = v;
        tie = false;
      } else if (label[v] == label[best]) {
        tie = true;
      }
    }
    if (best == -1) raise(errc::internal_invariant_violation, "reading word stalled");
    if (tie) {
      raise(errc::ambiguous_selection,
            "two vertices with unread children share label " + std::to_string(label[best]));
    }
    const int c = f.kids[best][next_child[best]++];
    word.push_back(label[c]);
    appended[c] = 1;
  }
  return word;
}

}  // namespace detail

inline std::vector<int> read_a(const plane_tree& t) {
  return detail::read_a_impl(detail::flatten(t));
}

inline std::vector<int> read_d(const plane_tree& t) {
  return detail::read_d_impl(detail::flatten(t));
}

namespace detail {

// Dual plane tree.  Non-root vertices of the dual are associated with
// vertices of the source tree; a vertex's first child mirrors the right
// sibling of its associate, and the k-th child mirrors the first child of
// the (k-1)-th child's associate.
inline flat_tree dual_impl(const flat_tree& f) {
  flat_tree d;
  d.parent.push_back(-1);
  d.kids.emplace_back();
  std::vector<int> assoc{-1};

  auto child_index = [&](int v) {
    const auto& sibs = f.kids[f.parent[v]];
    for (std::size_t i = 0; i < sibs.size(); ++i) {
      if (sibs[i] == v) return static_cast<int>(i);
    }
    raise(errc::internal_invariant_violation, "vertex missing from its sibling list");
  };
  auto add_child = [&](int parent, int associate) {
    const int id = d.size();
    d.parent.push_back(parent);
    d.kids.emplace_back();
    d.kids[parent].push_back(id);
    assoc.push_back(associate);
    return id;
  };

  for (int v = 0; v < d.size(); ++v) {
    if (v == 0) {
      if (!f.kids[0].empty()) add_child(0, f.kids[0][0]);
    } else {
      const int src = assoc[v];
      const auto& sibs = f.kids[f.parent[src]];
      const int idx = child_index(src);
      if (idx + 1 < static_cast<int>(sibs.size())) add_child(v, sibs[idx + 1]);
    }
    // grow the child list of v: each new child comes from the previous one
    while (true) {
      const int last = d.kids[v].empty() ? -1 : d.kids[v].back();
      if (last == -1) break;
      const int src = assoc[last];
      if (f.kids[src].empty()) break;
      add_child(v, f.kids[src][0]);
    }
  }
  return d;
}

}  // namespace detail

inline plane_tree dual(const plane_tree& t) {
  return detail::unflatten(detail::dual_impl(detail::flatten(t)));
}

// Emits every plane tree on m vertices exactly once, ordered by the
// lexicographic order of the balanced-parentheses code with '(' < ')'.
template <class Fn>
void for_each_plane_tree(int m, Fn&& fn) {
  if (m < 1) raise(errc::unsupported_size, "a plane tree needs at least the root");
  for_each_dyck_path(m - 1, [&](const dyck_path& p) {
    plane_tree root;
    std::vector<plane_tree*> stack{&root};
    for (char c : p.steps()) {
      if (c == 'N') {
        stack.back()->children.emplace_back();
        stack.push_back(&stack.back()->children.back());
      } else {
        stack.pop_back();
      }
    }
    fn(root);
  });
}

}  // namespace qtcatalan
