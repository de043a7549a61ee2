#pragma once

#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtcatalan/dyck_path.hpp"
#include "qtcatalan/error.hpp"
#include "qtcatalan/plane_tree.hpp"

namespace qtcatalan {

// North adds a rightmost child and descends, East ascends.
inline plane_tree sigma(const dyck_path& p) {
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
  return root;
}

namespace detail {

inline void sigma_inv_rec(const plane_tree& t, std::string& out) {
  for (const plane_tree& c : t.children) {
    out.push_back('N');
    sigma_inv_rec(c, out);
    out.push_back('E');
  }
}

}  // namespace detail

inline dyck_path sigma_inv(const plane_tree& t) {
  std::string steps;
  steps.reserve(2 * static_cast<std::size_t>(t.vertex_count() - 1));
  detail::sigma_inv_rec(t, steps);
  return dyck_path::unchecked(std::move(steps));
}

namespace detail {

// Cell-to-vertex association table behind the Haglund-Loehr map, reduced to
// rows.  parent_row[r] is the row whose cell reaches row r's column bottom by
// Northeast travel (0 when row r's cell lies in the first column).  Rows in
// one column share the parent of the column's bottom row.
inline std::vector<int> eta_parent_rows(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> parent_row(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 2; r <= n; ++r) {
    if (a[r - 1] == a[r - 2] + 1) {
      parent_row[r] = parent_row[r - 1];  // stacked on the previous row's column
      continue;
    }
    int j = 0;
    for (int s = r - 1; s >= 1; --s) {
      if (a[s - 1] == a[r - 1]) {
        j = s;
        break;
      }
    }
    if (j == 0) raise(errc::internal_invariant_violation, "column bottom has no source cell");
    parent_row[r] = j;
  }
  return parent_row;
}

inline flat_tree eta_flat(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  flat_tree f;
  f.parent.assign(static_cast<std::size_t>(n) + 1, -1);
  f.kids.assign(static_cast<std::size_t>(n) + 1, {});
  const std::vector<int> parent_row = eta_parent_rows(a);
  for (int r = 1; r <= n; ++r) {
    f.parent[r] = parent_row[r];
    f.kids[parent_row[r]].push_back(r);  // bottom-to-top cells become left-to-right children
  }
  return f;
}

struct eta_inverse_result {
  std::vector<int> area;      // area entries row by row
  std::vector<int> row_node;  // row r (1-based) -> flat vertex id
};

// Reverse scan of the association table.  Every placed vertex sits on a
// diagonal; among placed vertices with unplaced children the one on the
// highest diagonal owns the next column, and its children occupy diagonals
// delta, delta+1, ... bottom to top.
inline eta_inverse_result eta_inverse_rows(const flat_tree& f) {
  const int n = f.size() - 1;
  eta_inverse_result out;
  out.area.reserve(n);
  out.row_node.assign(static_cast<std::size_t>(n) + 1, -1);
  std::priority_queue<std::pair<int, int>> pending;  // (diagonal, vertex)
  if (!f.kids[0].empty()) pending.emplace(0, 0);
  int row = 0;
  while (!pending.empty()) {
    const auto [diag, v] = pending.top();
    pending.pop();
    if (!pending.empty() && pending.top().first == diag) {
      raise(errc::ambiguous_selection,
            "two vertices with unplaced children share diagonal " + std::to_string(diag));
    }
    for (std::size_t k = 0; k < f.kids[v].size(); ++k) {
      const int c = f.kids[v][k];
      ++row;
      out.area.push_back(diag + static_cast<int>(k));
      out.row_node[row] = c;
      if (!f.kids[c].empty()) pending.emplace(diag + static_cast<int>(k), c);
    }
  }
  if (row != n) raise(errc::internal_invariant_violation, "row reconstruction incomplete");
  return out;
}

}  // namespace detail

inline plane_tree eta(const dyck_path& p) {
  return detail::unflatten(detail::eta_flat(area_entries(p)));
}

inline dyck_path eta_inv(const plane_tree& t) {
  const auto rows = detail::eta_inverse_rows(detail::flatten(t));
  return from_area_sequence(area_sequence{rows.area});
}

// An East step checks the leftmost vertex closest to the root that is still
// unchecked and hands it the following run of North steps as children; with a
// prepended East step this is a breadth-first construction.
inline plane_tree beta(const dyck_path& p) {
  const int n = p.semilength();
  // run_after_east[j] = North run directly following the j-th East step of
  // E + pi; the run preceding the first East of pi follows the prepended East.
  std::vector<int> run_after_east;
  run_after_east.reserve(static_cast<std::size_t>(n) + 1);
  int run = 0;
  for (char c : p.steps()) {
    if (c == 'N') {
      ++run;
    } else {
      run_after_east.push_back(run);
      run = 0;
    }
  }
  run_after_east.push_back(run);

  detail::flat_tree f;
  f.parent.push_back(-1);
  f.kids.emplace_back();
  std::queue<int> q;
  q.push(0);
  for (int k : run_after_east) {
    const int v = q.front();
    q.pop();
    for (int i = 0; i < k; ++i) {
      const int id = f.size();
      f.parent.push_back(v);
      f.kids.emplace_back();
      f.kids[v].push_back(id);
      q.push(id);
    }
  }
  return detail::unflatten(f);
}

inline dyck_path beta_inv(const plane_tree& t) {
  const detail::flat_tree f = detail::flatten(t);
  std::string steps;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    steps.push_back('E');
    for (int c : f.kids[v]) {
      steps.push_back('N');
      q.push(c);
    }
  }
  return dyck_path::parse(std::string_view(steps).substr(1));
}

inline dyck_path zeta(const dyck_path& p) { return beta_inv(sigma(p)); }

inline dyck_path zeta_inv(const dyck_path& p) { return sigma_inv(beta(p)); }

inline dyck_path omega(const dyck_path& p) { return sigma_inv(eta(p)); }

namespace detail {

inline std::string deutsch_rec(std::string_view s) {
  if (s.empty()) return {};
  int balance = 0;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    balance += (s[i] == 'N') ? 1 : -1;
    if (balance == 0) break;
  }
  const std::string_view alpha = s.substr(1, i - 1);
  const std::string_view rest = s.substr(i + 1);
  return "N" + deutsch_rec(rest) + "E" + deutsch_rec(alpha);
}

}  // namespace detail

// Recursive involution: N alpha E beta -> N beta' E alpha'.
inline dyck_path deutsch(const dyck_path& p) {
  return dyck_path::unchecked(detail::deutsch_rec(p.steps()));
}

// Fixes paths with a single return; otherwise merges the first two return
// blocks: N a1 E N a2 E rest -> N N a1 E a2 E rest.
inline dyck_path tau(const dyck_path& p) {
  if (p.empty()) raise(errc::empty_path, "tau needs a nonempty path");
  if (rise_return(p).returns == 1) return p;
  const auto [alpha1, tail] = first_return_decompose(p);
  const auto [alpha2, rest] = first_return_decompose(tail);
  return dyck_path::unchecked("N" + ("N" + alpha1.steps() + "E" + alpha2.steps()) + "E" +
                              rest.steps());
}

// Partial inverse, defined on the image of tau: paths with initial rise at
// least two are split back into two return blocks, and the one path that is
// both a fixed point and outside {IR >= 2} (the single-step path) maps to
// itself.  Anything else is not reachable by tau.
inline dyck_path tau_inv(const dyck_path& p) {
  if (p.empty()) raise(errc::empty_path, "tau_inv needs a nonempty path");
  const rise_return_result rr = rise_return(p);
  if (rr.initial_rise >= 2) {
    const auto [delta, rest] = first_return_decompose(p);
    const auto [alpha1, alpha2] = first_return_decompose(delta);
    return dyck_path::unchecked("N" + alpha1.steps() + "E" + "N" + alpha2.steps() + "E" +
                                rest.steps());
  }
  if (rr.returns == 1) return p;
  raise(errc::not_in_image, "initial rise 1 with more than one return");
}

}  // namespace qtcatalan
