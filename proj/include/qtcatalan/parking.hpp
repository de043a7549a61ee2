#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtcatalan/bijections.hpp"
#include "qtcatalan/dyck_path.hpp"
#include "qtcatalan/error.hpp"
#include "qtcatalan/labelled_tree.hpp"

namespace qtcatalan {

// Dyck path with cars 1..n placed right of the North steps, one per row,
// strictly increasing from bottom to top within each column (equivalently,
// decreasing read downward).
class parking_function {
 public:
  static parking_function make(dyck_path path, std::vector<int> car_of_row) {
    const int n = path.semilength();
    if (static_cast<int>(car_of_row.size()) != n) {
      raise(errc::bad_format, "need one car per row");
    }
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int c : car_of_row) {
      if (c < 1 || c > n || used[c]) raise(errc::bad_format, "cars must be a permutation of 1..n");
      used[c] = 1;
    }
    const std::vector<int> a = area_entries(path);
    for (int r = 2; r <= n; ++r) {
      if (a[r - 1] == a[r - 2] + 1 && car_of_row[r - 1] <= car_of_row[r - 2]) {
        raise(errc::bad_format, "cars must increase upward within a column");
      }
    }
    parking_function p;
    p.path_ = std::move(path);
    p.cars_ = std::move(car_of_row);
    return p;
  }

  // Text form "<steps>;c_1,...,c_n", cars listed by row.
  static parking_function parse(std::string_view text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) raise(errc::bad_format, "missing ';'");
    dyck_path path = dyck_path::parse(text.substr(0, semi));
    std::vector<int> cars;
    std::size_t pos = semi + 1;
    while (pos < text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      const std::string field(text.substr(pos, end - pos));
      try {
        cars.push_back(std::stoi(field));
      } catch (const std::exception&) {
        raise(errc::bad_format, "bad car entry '" + field + "'");
      }
      pos = end + 1;
    }
    return make(std::move(path), std::move(cars));
  }

  std::string to_string() const {
    std::string out = path_.steps() + ";";
    for (std::size_t i = 0; i < cars_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(cars_[i]);
    }
    return out;
  }

  const dyck_path& path() const { return path_; }
  const std::vector<int>& cars() const { return cars_; }
  int car_in_row(int r) const { return cars_[static_cast<std::size_t>(r) - 1]; }
  int size() const { return path_.semilength(); }

  friend bool operator==(const parking_function&, const parking_function&) = default;

 private:
  dyck_path path_;
  std::vector<int> cars_;
};

inline long long area(const parking_function& p) { return area_stats(p.path()).area; }

namespace detail {

template <class Fn>
void assign_cars_rec(const dyck_path& path, const std::vector<std::pair<int, int>>& columns,
                     std::size_t col, unsigned free_mask, std::vector<int>& cars, int n, Fn& fn) {
  if (col == columns.size()) {
    fn(parking_function::make(path, cars));
    return;
  }
  const auto [start_row, len] = columns[col];
  // choose an increasing run of free cars for this column, lexicographically
  auto choose = [&](auto&& self, int from, int need, unsigned taken) -> void {
    if (need == 0) {
      assign_cars_rec(path, columns, col + 1, free_mask & ~taken, cars, n, fn);
      return;
    }
    for (int c = from; c <= n; ++c) {
      if (!((free_mask >> c) & 1u)) continue;
      cars[static_cast<std::size_t>(start_row - 1 + len - need)] = c;
      self(self, c + 1, need - 1, taken | (1u << c));
    }
  };
  choose(choose, 1, len, 0u);
}

}  // namespace detail

// Every parking function on n cars exactly once: paths in lexicographic
// order, and for each path the column car sets in lexicographic order.
template <class Fn>
void for_each_parking_function(int n, Fn&& fn) {
  if (n < 1) raise(errc::unsupported_size, "need at least one car");
  for_each_dyck_path(n, [&](const dyck_path& path) {
    const std::vector<int> a = area_entries(path);
    std::vector<std::pair<int, int>> columns;  // (bottom row, height)
    for (int r = 1; r <= n; ++r) {
      if (r == 1 || a[r - 1] != a[r - 2] + 1) columns.emplace_back(r, 1);
      else ++columns.back().second;
    }
    std::vector<int> cars(static_cast<std::size_t>(n), 0);
    const unsigned all_free = ((1u << n) - 1u) << 1;
    detail::assign_cars_rec(path, columns, 0, all_free, cars, n, fn);
  });
}

inline unsigned long long parking_function_count(int n) {
  unsigned long long total = 1;
  for (int i = 0; i < n - 1; ++i) total *= static_cast<unsigned long long>(n + 1);
  return total;
}

// Cars in the first column become children of the root; the children of any
// other vertex are the cars of the column reached by Northeast travel from
// its own car.
inline labelled_tree lambda_map(const parking_function& p) {
  const int n = p.size();
  const std::vector<int> a = area_entries(p.path());
  const std::vector<int> parent_row = detail::eta_parent_rows(a);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, -1);
  for (int r = 1; r <= n; ++r) {
    const int pr = parent_row[r];
    parent[p.car_in_row(r)] = pr == 0 ? 0 : p.car_in_row(pr);
  }
  return labelled_tree::from_parents(std::move(parent));
}

// Inverse: sort children by label to recover the plane structure, replay the
// column scan to place rows, and read the car labels off the placed vertices.
inline parking_function lambda_inv(const labelled_tree& t) {
  const int n = t.vertex_count() - 1;
  if (n < 1) raise(errc::unsupported_size, "need a tree on at least two vertices");
  const auto kids = t.children();  // increasing label order = left-to-right
  // flatten with vertex labels carried along (preorder, root id 0)
  detail::flat_tree f;
  std::vector<int> label_of;
  f.parent.push_back(-1);
  f.kids.emplace_back();
  label_of.push_back(0);
  std::vector<std::pair<int, int>> stack;  // (flat id, tree vertex)
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    const auto [id, v] = stack.back();
    stack.pop_back();
    for (int c : kids[v]) {
      const int cid = f.size();
      f.parent.push_back(id);
      f.kids.emplace_back();
      f.kids[id].push_back(cid);
      label_of.push_back(c);
      stack.emplace_back(cid, c);
    }
  }
  const auto rows = detail::eta_inverse_rows(f);
  std::vector<int> cars(static_cast<std::size_t>(n), 0);
  for (int r = 1; r <= n; ++r) cars[r - 1] = label_of[rows.row_node[r]];
  return parking_function::make(from_area_sequence(area_sequence{rows.area}), std::move(cars));
}

}  // namespace qtcatalan
