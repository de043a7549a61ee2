#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtcatalan/error.hpp"
#include "qtcatalan/sequences.hpp"

namespace qtcatalan {

// A Dyck path of semilength n: a word over {N, E} with n of each letter in
// which every prefix contains at least as many N's as E's.  The step word is
// the single source of truth; area and depth sequences are derived views.
class dyck_path {
 public:
  dyck_path() = default;

  static dyck_path parse(std::string_view text) {
    int balance = 0;
    for (char c : text) {
      if (c == 'N') {
        ++balance;
      } else if (c == 'E') {
        --balance;
        if (balance < 0) raise(errc::below_diagonal, "prefix has more E's than N's");
      } else {
        raise(errc::bad_character, std::string("unexpected character '") + c + "'");
      }
    }
    if (balance != 0) raise(errc::unbalanced_steps, "step counts differ");
    return dyck_path(std::string(text), unchecked_tag{});
  }

  // Caller guarantees validity (used by enumerators and bijections whose
  // output is valid by construction).
  static dyck_path unchecked(std::string steps) {
    return dyck_path(std::move(steps), unchecked_tag{});
  }

  const std::string& steps() const noexcept { return steps_; }
  int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
  bool empty() const noexcept { return steps_.empty(); }

  friend bool operator==(const dyck_path&, const dyck_path&) = default;
  friend auto operator<=>(const dyck_path& a, const dyck_path& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  struct unchecked_tag {};
  dyck_path(std::string steps, unchecked_tag) : steps_(std::move(steps)) {}

  std::string steps_;
};

// Row-indexed vector (a_1, ..., a_n); a_i counts the full cells between the
// path and the diagonal in row i.  Valid iff a_1 = 0 and a_i <= a_{i-1} + 1.
struct area_sequence {
  std::vector<int> entries;
  friend bool operator==(const area_sequence&, const area_sequence&) = default;
  std::string to_string() const { return format_sequence(entries); }
};

struct depth_sequence {
  std::vector<int> entries;
  friend bool operator==(const depth_sequence&, const depth_sequence&) = default;
  std::string to_string() const { return format_sequence(entries); }
};

// Grid cell, 1-based: column i covers x in [i-1, i], row j covers y in [j-1, j].
// The cell directly right of a North step from (x, j-1) to (x, j) is (x+1, j).
struct cell {
  int column = 0;
  int row = 0;
  friend bool operator==(const cell&, const cell&) = default;
  friend auto operator<=>(const cell&, const cell&) = default;
};

// One entry per North step: the labelled cell directly right of it.
struct depth_labelling {
  struct entry {
    cell position;
    int label = 0;
    friend bool operator==(const entry&, const entry&) = default;
  };
  std::vector<entry> cells;  // sorted by (column, row)
  friend bool operator==(const depth_labelling&, const depth_labelling&) = default;
};

inline std::vector<int> area_entries(const dyck_path& p) {
  std::vector<int> a;
  a.reserve(p.semilength());
  int east = 0;
  int row = 0;
  for (char c : p.steps()) {
    if (c == 'N') {
      ++row;
      a.push_back(row - 1 - east);
    } else {
      ++east;
    }
  }
  return a;
}

struct area_stats_result {
  area_sequence sequence;
  long long area = 0;
};

inline area_stats_result area_stats(const dyck_path& p) {
  area_stats_result r;
  r.sequence.entries = area_entries(p);
  for (int v : r.sequence.entries) r.area += v;
  return r;
}

inline dyck_path from_area_sequence(const area_sequence& a) {
  const int n = static_cast<int>(a.entries.size());
  for (int i = 0; i < n; ++i) {
    const int v = a.entries[i];
    if (v < 0 || (i == 0 && v != 0) || (i > 0 && v > a.entries[i - 1] + 1)) {
      raise(errc::invalid_area_sequence,
            "entry " + std::to_string(i + 1) + " = " + std::to_string(v));
    }
  }
  std::string steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int east = 0;
  for (int i = 0; i < n; ++i) {
    const int target_east = i - a.entries[i];  // row i+1 sits at x = target_east
    steps.append(static_cast<std::size_t>(target_east - east), 'E');
    east = target_east;
    steps.push_back('N');
  }
  steps.append(static_cast<std::size_t>(n - east), 'E');
  return dyck_path::unchecked(std::move(steps));
}

// Pairs i < j with s_i = s_j or s_i = s_j + 1; shared by dinv and ddinv.
inline long long diagonal_inversion_pairs(const std::vector<int>& s) {
  long long count = 0;
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s[i] == s[j] || s[i] == s[j] + 1) ++count;
  return count;
}

inline long long dinv(const dyck_path& p) {
  return diagonal_inversion_pairs(area_entries(p));
}

struct bounce_result {
  std::vector<int> touch_points;  // diagonal points b_0 = 0 < ... < b_k = n
  long long bounce = 0;
};

inline bounce_result bounce(const dyck_path& p) {
  const int n = p.semilength();
  bounce_result r;
  r.touch_points.push_back(0);
  if (n == 0) return r;
  // north_before_east[k] = number of N steps preceding the (k+1)-th E step
  std::vector<int> north_before_east;
  north_before_east.reserve(n);
  int norths = 0;
  for (char c : p.steps()) {
    if (c == 'N') ++norths;
    else north_before_east.push_back(norths);
  }
  int b = 0;
  while (b < n) {
    b = north_before_east[b];  // rebound: north to the path, east to the diagonal
    r.touch_points.push_back(b);
  }
  for (std::size_t i = 1; i + 1 < r.touch_points.size(); ++i) {
    r.bounce += n - r.touch_points[i];
  }
  return r;
}

namespace detail {

// Per-column depth labels, derived by the Southwest walk.  Cells right of
// North steps in column c all carry column_label[c]; column 1 carries 0.
// The bottommost cell of any later column sits on the same diagonal as the
// first labelled cell reached walking (-1,-1), which is the last earlier row
// with the same area entry.
inline std::vector<int> column_depth_labels(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> column_label(static_cast<std::size_t>(n) + 1, -1);
  if (n == 0) return column_label;
  column_label[1] = 0;
  for (int r = 2; r <= n; ++r) {
    if (a[r - 1] == a[r - 2] + 1) continue;  // not the bottommost cell of its column
    const int col = r - a[r - 1];
    int parent = -1;
    for (int j = r - 1; j >= 1; --j) {
      if (a[j - 1] == a[r - 1]) {
        parent = j;
        break;
      }
    }
    if (parent == -1) {
      raise(errc::internal_invariant_violation,
            "southwest walk from column " + std::to_string(col) +
                " found no labelled cell");
    }
    column_label[col] = column_label[parent - a[parent - 1]] + 1;
  }
  return column_label;
}

}  // namespace detail

inline depth_labelling depth_labels(const dyck_path& p) {
  const std::vector<int> a = area_entries(p);
  const std::vector<int> column_label = detail::column_depth_labels(a);
  depth_labelling out;
  const int n = static_cast<int>(a.size());
  out.cells.reserve(a.size());
  for (int r = 1; r <= n; ++r) {
    const int col = r - a[r - 1];
    out.cells.push_back({{col, r}, column_label[col]});
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const auto& x, const auto& y) { return x.position < y.position; });
  return out;
}

struct depth_stats_result {
  depth_sequence sequence;
  long long depth = 0;
};

// Reads the depth labelling by the Northeast traversal.  When the walk dead
// ends, the backtrack candidates are the visited rows whose cell has an
// unvisited labelled cell directly above; the candidate with the largest
// label must be unique.
inline depth_stats_result depth_stats(const dyck_path& p) {
  depth_stats_result out;
  const int n = p.semilength();
  if (n == 0) return out;
  const std::vector<int> a = area_entries(p);
  const std::vector<int> column_label = detail::column_depth_labels(a);
  auto label_of_row = [&](int r) { return column_label[r - a[r - 1]]; };

  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  int cur = 1;
  visited[1] = 1;
  out.sequence.entries.push_back(label_of_row(1));
  while (static_cast<int>(out.sequence.entries.size()) < n) {
    // Northeast travel: cells on the ray from row cur share its diagonal, so
    // the first labelled cell is the next row with an equal area entry.
    int hit = 0;
    for (int r = cur + 1; r <= n; ++r) {
      if (a[r - 1] == a[cur - 1]) {
        hit = r;
        break;
      }
    }
    if (hit != 0 && !visited[hit]) {
      cur = hit;
    } else {
      int best = 0;
      bool tie = false;
      for (int r = 1; r < n; ++r) {
        // labelled cell directly above row r's cell = row r+1 in the same column
        if (!visited[r] || visited[r + 1] || a[r] != a[r - 1] + 1) continue;
        if (best == 0 || label_of_row(r) > label_of_row(best)) {
          best = r;
          tie = false;
        } else if (label_of_row(r) == label_of_row(best)) {
          tie = true;
        }
      }
      if (best == 0) {
        raise(errc::internal_invariant_violation, "depth traversal has no continuation");
      }
      if (tie) {
        raise(errc::ambiguous_backtrack,
              "two backtrack candidates share label " +
                  std::to_string(label_of_row(best)));
      }
      cur = best + 1;
    }
    visited[cur] = 1;
    out.sequence.entries.push_back(label_of_row(cur));
  }
  for (int v : out.sequence.entries) out.depth += v;
  return out;
}

inline long long ddinv(const dyck_path& p) {
  return diagonal_inversion_pairs(depth_stats(p).sequence.entries);
}

struct rise_return_result {
  int initial_rise = 0;  // length of the initial N run
  int returns = 0;       // diagonal touches after the origin
};

inline rise_return_result rise_return(const dyck_path& p) {
  if (p.empty()) raise(errc::empty_path, "rise/return need a first step");
  rise_return_result r;
  const std::string& s = p.steps();
  while (r.initial_rise < static_cast<int>(s.size()) && s[r.initial_rise] == 'N') {
    ++r.initial_rise;
  }
  int balance = 0;
  for (char c : s) {
    balance += (c == 'N') ? 1 : -1;
    if (balance == 0) ++r.returns;
  }
  return r;
}

// pi = N alpha E beta where (k, k) is the first diagonal touch and alpha has
// semilength k - 1.
inline std::pair<dyck_path, dyck_path> first_return_decompose(const dyck_path& p) {
  if (p.empty()) raise(errc::empty_path, "cannot decompose the empty path");
  const std::string& s = p.steps();
  int balance = 0;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    balance += (s[i] == 'N') ? 1 : -1;
    if (balance == 0) break;
  }
  return {dyck_path::unchecked(s.substr(1, i - 1)),
          dyck_path::unchecked(s.substr(i + 1))};
}

namespace detail {

template <class Fn>
void enumerate_paths_rec(std::string& buf, int norths, int easts, int n, Fn& fn) {
  if (static_cast<int>(buf.size()) == 2 * n) {
    fn(dyck_path::unchecked(buf));
    return;
  }
  if (norths < n) {
    buf.push_back('N');
    enumerate_paths_rec(buf, norths + 1, easts, n, fn);
    buf.pop_back();
  }
  if (easts < norths) {
    buf.push_back('E');
    enumerate_paths_rec(buf, norths, easts + 1, n, fn);
    buf.pop_back();
  }
}

}  // namespace detail

// Emits every Dyck path of semilength n exactly once, in lexicographic order
// of step words with N < E.  The order is a documented contract.
template <class Fn>
void for_each_dyck_path(int n, Fn&& fn) {
  if (n < 0) raise(errc::unsupported_size, "negative semilength");
  std::string buf;
  buf.reserve(2 * static_cast<std::size_t>(n));
  detail::enumerate_paths_rec(buf, 0, 0, n, fn);
}

// Same stream restricted to completions of a fixed step prefix; partitioning
// by prefix is the parallelisation contract for enumeration consumers.
template <class Fn>
void for_each_dyck_path_with_prefix(std::string_view prefix, int n, Fn&& fn) {
  int norths = 0, easts = 0;
  for (char c : prefix) {
    if (c == 'N') ++norths;
    else if (c == 'E') ++easts;
    else raise(errc::bad_character, "prefix may contain only N and E");
    if (easts > norths || norths > n) {
      raise(errc::below_diagonal, "prefix is not extendable to a Dyck path");
    }
  }
  std::string buf(prefix);
  buf.reserve(2 * static_cast<std::size_t>(n));
  detail::enumerate_paths_rec(buf, norths, easts, n, fn);
}

inline unsigned long long catalan_number(int n) {
  // (1/(n+1)) * binom(2n, n), exact in 64 bits for the sizes we enumerate
  unsigned long long binom = 1;
  for (int i = 1; i <= n; ++i) {
    binom = binom * static_cast<unsigned long long>(n + i) / static_cast<unsigned long long>(i);
  }
  return binom / static_cast<unsigned long long>(n + 1);
}

}  // namespace qtcatalan
