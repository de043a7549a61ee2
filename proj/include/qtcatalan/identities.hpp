#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qtcatalan/error.hpp"
#include "qtcatalan/labelled_graph.hpp"
#include "qtcatalan/labelled_tree.hpp"
#include "qtcatalan/parking.hpp"
#include "qtcatalan/polynomial.hpp"

namespace qtcatalan {

struct identity_report {
  std::string name;
  int n = 0;
  bool pass = false;
  std::string counterexample;  // empty when the identity holds
};

namespace detail {

// powers of (1 + q), grown on demand
class one_plus_q_powers {
 public:
  const bivariate_polynomial& get(int e) {
    while (static_cast<int>(cache_.size()) <= e) {
      bivariate_polynomial next = cache_.back();
      next += cache_.back() * bivariate_polynomial::term(1, 0);
      cache_.push_back(std::move(next));
    }
    return cache_[static_cast<std::size_t>(e)];
  }

 private:
  std::vector<bivariate_polynomial> cache_{bivariate_polynomial::constant(1)};
};

inline identity_report polynomial_sides(std::string name, int n, const bivariate_polynomial& lhs,
                                        const bivariate_polynomial& rhs) {
  identity_report r{std::move(name), n, lhs == rhs, ""};
  if (!r.pass) r.counterexample = "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
  return r;
}

// sum over connected graphs on m vertices of q^{#edges}
inline bivariate_polynomial graph_edge_polynomial(int m) {
  bivariate_polynomial total;
  for_each_connected_graph(m, [&](const labelled_graph& g) {
    total.add_term(g.edge_count(), 0, 1);
  });
  return total;
}

}  // namespace detail

// sum_{G} q^{e(G)} = q^{n-1} sum_{T} (1+q)^{coinv(T)} over graphs and trees
// on n vertices
inline identity_report check_gessel_wang(int n) {
  detail::one_plus_q_powers powers;
  bivariate_polynomial rhs;
  for_each_labelled_tree(n, [&](const labelled_tree& t) {
    rhs += powers.get(static_cast<int>(coinversions(t)));
  });
  rhs *= bivariate_polynomial::term(n - 1, 0);
  return detail::polynomial_sides("gessel_wang", n, detail::graph_edge_polynomial(n), rhs);
}

// sum_{T on n+1 vertices} q^{coinv(T)} = sum_{parking functions on n cars} q^{area}
inline identity_report check_kreweras(int n) {
  bivariate_polynomial lhs;
  for_each_labelled_tree(n + 1, [&](const labelled_tree& t) {
    lhs.add_term(static_cast<int>(coinversions(t)), 0, 1);
  });
  bivariate_polynomial rhs;
  for_each_parking_function(n, [&](const parking_function& p) {
    rhs.add_term(static_cast<int>(area(p)), 0, 1);
  });
  return detail::polynomial_sides("kreweras", n, lhs, rhs);
}

// q^n sum_{parking functions on n cars} (1+q)^{area} = sum_{connected graphs
// on n+1 vertices} q^{e(G)}
inline identity_report check_pf_graph_formula(int n) {
  detail::one_plus_q_powers powers;
  bivariate_polynomial lhs;
  for_each_parking_function(n, [&](const parking_function& p) {
    lhs += powers.get(static_cast<int>(area(p)));
  });
  lhs *= bivariate_polynomial::term(n, 0);
  return detail::polynomial_sides("pf_graph_formula", n, lhs, detail::graph_edge_polynomial(n + 1));
}

// sum_{parking functions on n cars} 2^{area} = number of connected graphs on
// n+1 vertices
inline identity_report check_two_to_area_count(int n) {
  bigint lhs = 0;
  for_each_parking_function(n, [&](const parking_function& p) {
    lhs += bigint(1) << static_cast<unsigned>(area(p));
  });
  const bigint rhs = connected_graph_count(n + 1);
  identity_report r{"two_to_area_count", n, lhs == rhs, ""};
  if (!r.pass) r.counterexample = "lhs = " + lhs.str() + "; rhs = " + rhs.str();
  return r;
}

// The graphs mapping to T under the spanning-tree extraction are exactly the
// unions of T with subsets of its addable edges.
inline identity_report check_gs_equals_ge(int n) {
  identity_report r{"GS_equals_GE", n, true, ""};
  for_each_labelled_tree(n, [&](const labelled_tree& t) {
    if (!r.pass) return;
    const labelled_graph base = labelled_graph::from_tree(t);
    std::uint64_t addable_mask = 0;
    for (const auto& [a, b] : addable_edges_all(t)) {
      addable_mask |= std::uint64_t(1) << labelled_graph::edge_index(a, b, n);
    }
    std::vector<int> free_bits;
    for (int k = 0; k < labelled_graph::pair_count(n); ++k) {
      if (!((base.edge_mask() >> k) & 1u)) free_bits.push_back(k);
    }
    std::vector<int> tree_parent(static_cast<std::size_t>(n));
    tree_parent[0] = -1;
    for (int v = 1; v < n; ++v) tree_parent[v] = t.parent_of(v);
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << free_bits.size()); ++pick) {
      std::uint64_t extra = 0;
      for (std::size_t b = 0; b < free_bits.size(); ++b) {
        if ((pick >> b) & 1u) extra |= std::uint64_t(1) << free_bits[b];
      }
      const labelled_graph g(n, base.edge_mask() | extra);
      const bool maps_back = detail::extract_spanning_parents(g.adjacency()) == tree_parent;
      const bool addable_subset = (extra & ~addable_mask) == 0;
      if (maps_back != addable_subset) {
        r.pass = false;
        r.counterexample = "tree " + t.to_string() + ", graph " + g.to_string();
        return;
      }
    }
  });
  return r;
}

// |addable edges of vertex i| equals the vertex statistic d~_i, for every tree
inline identity_report check_lemma_e_equals_dtilde(int n) {
  identity_report r{"lemma_E_equals_dtilde", n, true, ""};
  for_each_labelled_tree(n, [&](const labelled_tree& t) {
    if (!r.pass) return;
    const std::vector<int> d = d_tilde(t);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(addable_edges(t, i).size()) != d[i]) {
        r.pass = false;
        r.counterexample = "tree " + t.to_string() + ", vertex " + std::to_string(i);
        return;
      }
    }
  });
  return r;
}

// area pulled back through the parking-function bijection is equidistributed
// with coinv over labelled trees on n+1 vertices
inline identity_report check_coinv_equidistribution(int n) {
  bivariate_polynomial lhs, rhs;
  for_each_labelled_tree(n + 1, [&](const labelled_tree& t) {
    lhs.add_term(static_cast<int>(area(lambda_inv(t))), 0, 1);
    rhs.add_term(static_cast<int>(coinversions(t)), 0, 1);
  });
  return detail::polynomial_sides("coinv_equidistribution", n, lhs, rhs);
}

struct identity_spec {
  std::string_view name;
  int max_n;
  identity_report (*run)(int);
};

inline const std::vector<identity_spec>& identity_table() {
  static const std::vector<identity_spec> table{
      {"gessel_wang", 7, &check_gessel_wang},
      {"kreweras", 5, &check_kreweras},
      {"pf_graph_formula", 6, &check_pf_graph_formula},
      {"two_to_area_count", 6, &check_two_to_area_count},
      {"GS_equals_GE", 6, &check_gs_equals_ge},
      {"lemma_E_equals_dtilde", 7, &check_lemma_e_equals_dtilde},
      {"coinv_equidistribution", 5, &check_coinv_equidistribution},
  };
  return table;
}

inline identity_report check_identity(std::string_view name, int n) {
  for (const identity_spec& spec : identity_table()) {
    if (spec.name != name) continue;
    if (n < 1 || n > spec.max_n) {
      raise(errc::unsupported_size, std::string(name) + " supports 1 <= n <= " +
                                        std::to_string(spec.max_n));
    }
    return spec.run(n);
  }
  raise(errc::unknown_identity, std::string(name));
}

}  // namespace qtcatalan
