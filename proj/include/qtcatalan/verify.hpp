#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qtcatalan/bijections.hpp"
#include "qtcatalan/dyck_path.hpp"
#include "qtcatalan/error.hpp"
#include "qtcatalan/families.hpp"
#include "qtcatalan/identities.hpp"
#include "qtcatalan/labelled_graph.hpp"
#include "qtcatalan/labelled_tree.hpp"
#include "qtcatalan/parking.hpp"
#include "qtcatalan/plane_tree.hpp"
#include "qtcatalan/polynomial.hpp"
#include "qtcatalan/sequences.hpp"

namespace qtcatalan {

struct check_result {
  std::string name;
  int n = 0;  // effective size the check ran at
  bool pass = false;
  std::string detail;  // counterexample or failure note
};

struct check_def {
  std::string name;
  int default_max_n;  // semilength for path checks, vertex count for tree checks
  std::function<check_result(int)> run;
};

namespace detail {

inline check_result pass_check(std::string name, int n) {
  return {std::move(name), n, true, ""};
}

inline check_result fail_check(std::string name, int n, std::string why) {
  return {std::move(name), n, false, std::move(why)};
}

}  // namespace detail

inline const std::vector<check_def>& verification_checks() {
  static const std::vector<check_def> checks = [] {
    std::vector<check_def> defs;
    auto add = [&](std::string name, int max_n, std::function<check_result(int)> fn) {
      defs.push_back({std::move(name), max_n, std::move(fn)});
    };

    // ---- paths -----------------------------------------------------------

    add("path_count", 14, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        unsigned long long count = 0;
        for_each_dyck_path(n, [&](const dyck_path&) { ++count; });
        if (count != catalan_number(n)) {
          return detail::fail_check("path_count", cap,
                                    "n = " + std::to_string(n) + " gave " + std::to_string(count));
        }
      }
      return detail::pass_check("path_count", cap);
    });

    add("area_roundtrip", 12, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        check_result bad = detail::pass_check("area_roundtrip", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const auto st = area_stats(p);
          if (!st.sequence.entries.empty() && st.sequence.entries.front() != 0) {
            bad = detail::fail_check("area_roundtrip", cap, "a_1 != 0 on " + p.steps());
          } else if (from_area_sequence(st.sequence) != p) {
            bad = detail::fail_check("area_roundtrip", cap, "round trip failed on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("area_roundtrip", cap);
    });

    add("depth_well_defined", 12, [](int cap) {
      // never AmbiguousBacktrack, d_1 = 0, and the depth sum matches its sequence
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("depth_well_defined", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const auto st = depth_stats(p);
          long long total = 0;
          for (int v : st.sequence.entries) total += v;
          if (st.sequence.entries.front() != 0 || total != st.depth ||
              static_cast<int>(st.sequence.entries.size()) != n) {
            bad = detail::fail_check("depth_well_defined", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("depth_well_defined", cap);
    });

    add("depth_multiset", 10, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("depth_multiset", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          std::multiset<int> from_cells;
          for (const auto& e : depth_labels(p).cells) from_cells.insert(e.label);
          std::multiset<int> from_seq;
          for (int v : depth_stats(p).sequence.entries) from_seq.insert(v);
          if (from_cells != from_seq) {
            bad = detail::fail_check("depth_multiset", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("depth_multiset", cap);
    });

    add("bounce_deterministic", 12, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        check_result bad = detail::pass_check("bounce_deterministic", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const auto b1 = bounce(p);
          const auto b2 = bounce(p);
          if (b1.touch_points != b2.touch_points || b1.bounce != b2.bounce ||
              b1.touch_points.front() != 0 || b1.touch_points.back() != n) {
            bad = detail::fail_check("bounce_deterministic", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("bounce_deterministic", cap);
    });

    // ---- plane trees (parameter = vertex count) ---------------------------

    add("tree_count", 12, [](int cap) {
      for (int m = 1; m <= cap; ++m) {
        unsigned long long count = 0;
        for_each_plane_tree(m, [&](const plane_tree&) { ++count; });
        if (count != catalan_number(m - 1)) {
          return detail::fail_check("tree_count", cap, "m = " + std::to_string(m));
        }
      }
      return detail::pass_check("tree_count", cap);
    });

    add("dual_involution", 12, [](int cap) {
      for (int m = 1; m <= cap; ++m) {
        check_result bad = detail::pass_check("dual_involution", cap);
        for_each_plane_tree(m, [&](const plane_tree& t) {
          if (!bad.pass) return;
          if (dual(dual(t)) != t) {
            bad = detail::fail_check("dual_involution", cap, "on " + to_string(t));
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("dual_involution", cap);
    });

    add("dual_reading_words", 12, [](int cap) {
      for (int m = 1; m <= cap; ++m) {
        check_result bad = detail::pass_check("dual_reading_words", cap);
        for_each_plane_tree(m, [&](const plane_tree& t) {
          if (!bad.pass) return;
          const plane_tree d = dual(t);
          if (read_d(d) != read_a(t) || read_a(d) != read_d(t)) {
            bad = detail::fail_check("dual_reading_words", cap, "on " + to_string(t));
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("dual_reading_words", cap);
    });

    add("reading_multisets", 12, [](int cap) {
      for (int m = 2; m <= cap; ++m) {
        check_result bad = detail::pass_check("reading_multisets", cap);
        for_each_plane_tree(m, [&](const plane_tree& t) {
          if (!bad.pass) return;
          const auto la = label(t, labelling_kind::a).labels;
          const auto ld = label(t, labelling_kind::d).labels;
          std::multiset<int> a_nonroot(la.begin() + 1, la.end());
          std::multiset<int> d_nonroot(ld.begin() + 1, ld.end());
          const auto wa = read_a(t);
          const auto wd = read_d(t);
          if (std::multiset<int>(wa.begin(), wa.end()) != a_nonroot ||
              std::multiset<int>(wd.begin(), wd.end()) != d_nonroot) {
            bad = detail::fail_check("reading_multisets", cap, "on " + to_string(t));
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("reading_multisets", cap);
    });

    // ---- bijections -------------------------------------------------------

    auto roundtrip_check = [](std::string name, plane_tree (*fwd)(const dyck_path&),
                              dyck_path (*inv)(const plane_tree&)) {
      return [name, fwd, inv](int cap) {
        for (int n = 0; n <= cap; ++n) {
          check_result bad = detail::pass_check(name, cap);
          for_each_dyck_path(n, [&](const dyck_path& p) {
            if (!bad.pass) return;
            const plane_tree t = fwd(p);
            if (t.vertex_count() != n + 1 || inv(t) != p) {
              bad = detail::fail_check(name, cap, "path side failed on " + p.steps());
            }
          });
          if (!bad.pass) return bad;
        }
        for (int m = 1; m <= cap + 1; ++m) {
          check_result bad = detail::pass_check(name, cap);
          for_each_plane_tree(m, [&](const plane_tree& t) {
            if (!bad.pass) return;
            if (fwd(inv(t)) != t) {
              bad = detail::fail_check(name, cap, "tree side failed on " + to_string(t));
            }
          });
          if (!bad.pass) return bad;
        }
        return detail::pass_check(name, cap);
      };
    };
    add("sigma_roundtrip", 12, roundtrip_check("sigma_roundtrip", &sigma, &sigma_inv));
    add("eta_roundtrip", 12, roundtrip_check("eta_roundtrip", &eta, &eta_inv));
    add("beta_roundtrip", 12, roundtrip_check("beta_roundtrip", &beta, &beta_inv));

    add("sigma_reading_words", 10, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("sigma_reading_words", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const plane_tree t = sigma(p);
          if (read_d(t) != area_entries(p) || read_a(t) != depth_stats(p).sequence.entries) {
            bad = detail::fail_check("sigma_reading_words", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("sigma_reading_words", cap);
    });

    add("eta_reading_words", 10, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("eta_reading_words", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const plane_tree t = eta(p);
          if (read_a(t) != area_entries(p) || read_d(t) != depth_stats(p).sequence.entries) {
            bad = detail::fail_check("eta_reading_words", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("eta_reading_words", cap);
    });

    add("omega_involution", 12, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        check_result bad = detail::pass_check("omega_involution", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const dyck_path w = omega(p);
          if (omega(w) != p || area_entries(w) != depth_stats(p).sequence.entries ||
              depth_stats(w).sequence.entries != area_entries(p)) {
            bad = detail::fail_check("omega_involution", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("omega_involution", cap);
    });

    add("omega_equals_deutsch", 12, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        check_result bad = detail::pass_check("omega_equals_deutsch", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          if (omega(p) != deutsch(p)) {
            bad = detail::fail_check("omega_equals_deutsch", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("omega_equals_deutsch", cap);
    });

    add("omega_via_dual", 10, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        check_result bad = detail::pass_check("omega_via_dual", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const dyck_path w = omega(p);
          if (sigma_inv(dual(sigma(p))) != w || eta_inv(dual(eta(p))) != w) {
            bad = detail::fail_check("omega_via_dual", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("omega_via_dual", cap);
    });

    add("dual_eta_sigma", 11, [](int cap) {
      for (int m = 1; m <= cap; ++m) {
        check_result bad = detail::pass_check("dual_eta_sigma", cap);
        for_each_plane_tree(m, [&](const plane_tree& t) {
          if (!bad.pass) return;
          if (dual(t) != eta(sigma_inv(t))) {
            bad = detail::fail_check("dual_eta_sigma", cap, "on " + to_string(t));
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("dual_eta_sigma", cap);
    });

    add("commuting_diagram", 10, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        check_result bad = detail::pass_check("commuting_diagram", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const dyck_path w = deutsch(p);
          if (sigma(w) != dual(sigma(p)) || eta(w) != dual(eta(p))) {
            bad = detail::fail_check("commuting_diagram", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("commuting_diagram", cap);
    });

    add("zeta_transport", 12, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        check_result bad = detail::pass_check("zeta_transport", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const dyck_path z = zeta(p);
          if (area_stats(p).area != bounce(z).bounce || dinv(p) != area_stats(z).area) {
            bad = detail::fail_check("zeta_transport", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("zeta_transport", cap);
    });

    add("omega_swaps_rise_return", 12, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("omega_swaps_rise_return", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const auto rr = rise_return(p);
          const auto ws = rise_return(omega(p));
          if (rr.initial_rise != ws.returns || rr.returns != ws.initial_rise) {
            bad = detail::fail_check("omega_swaps_rise_return", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("omega_swaps_rise_return", cap);
    });

    add("speyer_commutation", 12, [](int cap) {
      // tau_inv(omega(pi)) = omega(tau(pi)); paths with one return have
      // omega image of initial rise one, which tau_inv fixes
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("speyer_commutation", cap);
        for_each_dyck_path(n, [&](const dyck_path& p) {
          if (!bad.pass) return;
          const dyck_path w = omega(p);
          const dyck_path rhs = omega(tau(p));
          const dyck_path lhs = rise_return(w).initial_rise == 1 ? w : tau_inv(w);
          if (lhs != rhs) {
            bad = detail::fail_check("speyer_commutation", cap, "on " + p.steps());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("speyer_commutation", cap);
    });

    add("stump", 10, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        if (!stump_check(n)) return detail::fail_check("stump", cap, "n = " + std::to_string(n));
      }
      return detail::pass_check("stump", cap);
    });

    // ---- polynomials ------------------------------------------------------

    auto family_equality = [](std::string name, poly_family a, poly_family b) {
      return [name, a, b](int cap) {
        for (int n = 1; n <= cap; ++n) {
          if (family_polynomial(a, n) != family_polynomial(b, n)) {
            return detail::fail_check(name, cap, "n = " + std::to_string(n));
          }
        }
        return detail::pass_check(name, cap);
      };
    };
    add("c_dinv_equals_c_bounce", 12,
        family_equality("c_dinv_equals_c_bounce", poly_family::c_dinv, poly_family::c_bounce));
    add("c_dinv_equals_c_depth_ddinv", 12,
        family_equality("c_dinv_equals_c_depth_ddinv", poly_family::c_dinv,
                        poly_family::c_depth_ddinv));

    auto family_symmetry = [](std::string name, poly_family fam) {
      return [name, fam](int cap) {
        for (int n = 1; n <= cap; ++n) {
          const auto rep = symmetry_report(family_polynomial(fam, n));
          if (!rep.symmetric) {
            return detail::fail_check(name, cap,
                                      "n = " + std::to_string(n) + ", witness q^" +
                                          std::to_string(rep.witness->q_exp) + "*t^" +
                                          std::to_string(rep.witness->t_exp));
          }
        }
        return detail::pass_check(name, cap);
      };
    };
    add("f_symmetry", 12, family_symmetry("f_symmetry", poly_family::f));
    add("g_symmetry", 12, family_symmetry("g_symmetry", poly_family::g));
    add("tutte_symmetry", 12, family_symmetry("tutte_symmetry", poly_family::tutte));

    add("f_recursion", 12, [](int cap) {
      for (int n = 0; n <= cap; ++n) {
        if (f_recursive(n) != family_polynomial(poly_family::f, n)) {
          return detail::fail_check("f_recursion", cap, "n = " + std::to_string(n));
        }
      }
      return detail::pass_check("f_recursion", cap);
    });

    add("catalan_evaluations", 12, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        const bigint cn = catalan_number(n);
        for (poly_family fam : {poly_family::c_dinv, poly_family::f, poly_family::g}) {
          if (family_polynomial(fam, n).evaluate(1, 1) != cn) {
            return detail::fail_check("catalan_evaluations", cap,
                                      std::string(family_name(fam)) + " at n = " +
                                          std::to_string(n));
          }
        }
      }
      return detail::pass_check("catalan_evaluations", cap);
    });

    add("m_values", 8, [](int cap) {
      // exact divisibility, plus the computed quotient values at (1,1);
      // their magnitudes 1, 14, 124, 888, ... start at n = 4
      const std::vector<long long> expected{0,    0,    0,      -1,     -14,
                                            -124, -888, -5615,  -32714, -179880};
      for (int n = 1; n <= cap && n <= 10; ++n) {
        const bivariate_polynomial m = m_polynomial(n);  // raises if not divisible
        if (m.evaluate(1, 1) != expected[static_cast<std::size_t>(n) - 1]) {
          return detail::fail_check("m_values", cap,
                                    "n = " + std::to_string(n) + " gave " +
                                        m.evaluate(1, 1).str());
        }
      }
      return detail::pass_check("m_values", cap);
    });

    add("small_tables", 4, [](int cap) {
      // frozen n <= 4 polynomial tables for C, F and G
      auto build = [](std::vector<std::array<int, 3>> triples) {
        bivariate_polynomial p;
        for (const auto& [qe, te, c] : triples) p.add_term(qe, te, c);
        return p;
      };
      struct row {
        poly_family fam;
        int n;
        bivariate_polynomial value;
      };
      const std::vector<row> rows{
          {poly_family::c_dinv, 1, build({{0, 0, 1}})},
          {poly_family::f, 1, build({{0, 0, 1}})},
          {poly_family::g, 1, build({{0, 0, 1}})},
          {poly_family::c_dinv, 2, build({{1, 0, 1}, {0, 1, 1}})},
          {poly_family::f, 2, build({{1, 0, 1}, {0, 1, 1}})},
          {poly_family::g, 2, build({{1, 0, 1}, {0, 1, 1}})},
          {poly_family::c_dinv, 3,
           build({{3, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 3, 1}, {1, 1, 1}})},
          {poly_family::f, 3, build({{3, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 3, 1}, {1, 1, 1}})},
          {poly_family::g, 3, build({{2, 2, 1}, {3, 0, 1}, {0, 3, 1}, {1, 1, 2}})},
          {poly_family::c_dinv, 4,
           build({{6, 0, 1}, {5, 1, 1}, {4, 2, 1}, {3, 3, 1}, {2, 4, 1}, {1, 5, 1}, {0, 6, 1},
                  {4, 1, 1}, {3, 2, 1}, {2, 3, 1}, {1, 4, 1}, {3, 1, 1}, {2, 2, 1}, {1, 3, 1}})},
          {poly_family::f, 4,
           build({{6, 0, 1}, {5, 1, 1}, {4, 2, 1}, {3, 3, 2}, {2, 4, 1}, {1, 5, 1}, {0, 6, 1},
                  {4, 1, 1}, {1, 4, 1}, {3, 1, 1}, {2, 2, 2}, {1, 3, 1}})},
          {poly_family::g, 4,
           build({{5, 2, 1}, {4, 3, 1}, {3, 4, 1}, {2, 5, 1}, {6, 0, 1}, {4, 2, 1}, {2, 4, 1},
                  {0, 6, 1}, {3, 1, 2}, {1, 3, 2}, {2, 1, 1}, {1, 2, 1}})},
      };
      for (const row& r : rows) {
        if (r.n > cap) continue;
        if (family_polynomial(r.fam, r.n) != r.value) {
          return detail::fail_check("small_tables", cap,
                                    std::string(family_name(r.fam)) + " at n = " +
                                        std::to_string(r.n));
        }
      }
      return detail::pass_check("small_tables", cap);
    });

    // ---- parking functions, labelled trees, graphs ------------------------

    for (const identity_spec& spec : identity_table()) {
      const std::string name(spec.name);
      auto run = spec.run;
      add(name, spec.max_n, [name, run](int cap) {
        for (int n = 1; n <= cap; ++n) {
          const identity_report rep = run(n);
          if (!rep.pass) return detail::fail_check(name, cap, rep.counterexample);
        }
        return detail::pass_check(name, cap);
      });
    }

    add("labelled_tree_count", 8, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        unsigned long long count = 0;
        for_each_labelled_tree(n, [&](const labelled_tree&) { ++count; });
        if (count != labelled_tree_count(n)) {
          return detail::fail_check("labelled_tree_count", cap, "n = " + std::to_string(n));
        }
      }
      return detail::pass_check("labelled_tree_count", cap);
    });

    add("parking_count", 6, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        unsigned long long count = 0;
        for_each_parking_function(n, [&](const parking_function&) { ++count; });
        if (count != parking_function_count(n)) {
          return detail::fail_check("parking_count", cap, "n = " + std::to_string(n));
        }
      }
      return detail::pass_check("parking_count", cap);
    });

    add("lambda_bijection", 5, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("lambda_bijection", cap);
        std::set<std::string> images;
        for_each_parking_function(n, [&](const parking_function& p) {
          if (!bad.pass) return;
          const labelled_tree t = lambda_map(p);
          images.insert(t.to_string());
          if (lambda_inv(t) != p) {
            bad = detail::fail_check("lambda_bijection", cap, "on " + p.to_string());
          }
        });
        if (!bad.pass) return bad;
        if (images.size() != parking_function_count(n)) {
          return detail::fail_check("lambda_bijection", cap,
                                    "images not distinct at n = " + std::to_string(n));
        }
      }
      return detail::pass_check("lambda_bijection", cap);
    });

    add("area_tree_sum", 5, [](int cap) {
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("area_tree_sum", cap);
        for_each_parking_function(n, [&](const parking_function& p) {
          if (!bad.pass) return;
          const std::vector<int> d = d_tilde(lambda_map(p));
          long long total = 0;
          for (int v : d) total += v;
          if (total != area(p)) {
            bad = detail::fail_check("area_tree_sum", cap, "on " + p.to_string());
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("area_tree_sum", cap);
    });

    add("spanning_tree_properties", 6, [](int cap) {
      // the extraction fixes trees and always returns a spanning tree
      for (int n = 1; n <= std::min(cap + 1, 7); ++n) {
        check_result bad = detail::pass_check("spanning_tree_properties", cap);
        for_each_labelled_tree(n, [&](const labelled_tree& t) {
          if (!bad.pass) return;
          if (spanning_tree_extract(labelled_graph::from_tree(t)) != t) {
            bad = detail::fail_check("spanning_tree_properties", cap, "tree " + t.to_string());
          }
        });
        if (!bad.pass) return bad;
      }
      for (int n = 1; n <= cap; ++n) {
        check_result bad = detail::pass_check("spanning_tree_properties", cap);
        for_each_connected_graph(n, [&](const labelled_graph& g) {
          if (!bad.pass) return;
          const labelled_tree t = spanning_tree_extract(g);
          for (const auto& [a, b] : t.edges()) {
            if (!g.has_edge(a, b)) {
              bad = detail::fail_check("spanning_tree_properties", cap,
                                       "non-subgraph tree for " + g.to_string());
              return;
            }
          }
        });
        if (!bad.pass) return bad;
      }
      return detail::pass_check("spanning_tree_properties", cap);
    });

    return defs;
  }();
  return checks;
}

inline const check_def* find_check(std::string_view name) {
  for (const check_def& c : verification_checks()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

// Runs one named check at min(default size, cap); cap <= 0 means default.
// A thrown error is a failed check, not a usage problem.
inline check_result run_check(const check_def& def, int cap) {
  const int effective = cap > 0 ? std::min(def.default_max_n, cap) : def.default_max_n;
  check_result r;
  try {
    r = def.run(effective);
  } catch (const error& e) {
    r = detail::fail_check(def.name, effective, e.what());
  }
  r.n = effective;
  return r;
}

}  // namespace qtcatalan
