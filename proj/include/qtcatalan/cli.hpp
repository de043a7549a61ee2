#pragma once

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qtcatalan/bijections.hpp"
#include "qtcatalan/error.hpp"
#include "qtcatalan/families.hpp"
#include "qtcatalan/parking.hpp"
#include "qtcatalan/sequences.hpp"
#include "qtcatalan/verify.hpp"

namespace qtcatalan::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size cap.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_size_cap = 3;

namespace detail {

inline int env_default_max_n() {
  if (const char* v = std::getenv("QTCATALAN_MAX_N")) {
    const int parsed = std::atoi(v);
    if (parsed > 0) return parsed;
  }
  return 0;  // 0 = per-check defaults
}

inline void print_stats(const dyck_path& p, bool structured, std::ostream& out) {
  const auto ar = area_stats(p);
  const auto de = depth_stats(p);
  const auto bo = bounce(p);
  const long long di = dinv(p);
  const long long dd = diagonal_inversion_pairs(de.sequence.entries);
  std::string ir = "-", ret = "-";
  if (!p.empty()) {
    const auto rr = rise_return(p);
    ir = std::to_string(rr.initial_rise);
    ret = std::to_string(rr.returns);
  }
  if (structured) {
    out << "path=" << p.steps() << " n=" << p.semilength() << " area=" << ar.area
        << " dinv=" << di << " bounce=" << bo.bounce << " depth=" << de.depth << " ddinv=" << dd
        << " ir=" << ir << " ret=" << ret << " area_seq=" << ar.sequence.to_string()
        << " depth_seq=" << de.sequence.to_string()
        << " bounce_touches=" << format_sequence(bo.touch_points) << "\n";
    return;
  }
  out << "path:           " << p.steps() << "\n";
  out << "semilength:     " << p.semilength() << "\n";
  out << "area:           " << ar.area << "\n";
  out << "dinv:           " << di << "\n";
  out << "bounce:         " << bo.bounce << "\n";
  out << "depth:          " << de.depth << "\n";
  out << "ddinv:          " << dd << "\n";
  out << "initial rise:   " << ir << "\n";
  out << "returns:        " << ret << "\n";
  out << "area sequence:  " << ar.sequence.to_string() << "\n";
  out << "depth sequence: " << de.sequence.to_string() << "\n";
  out << "bounce touches: " << format_sequence(bo.touch_points) << "\n";
}

inline int run_map(const std::string& name, const std::string& input, bool structured,
                   std::ostream& out) {
  std::string result;
  if (name == "sigma" || name == "eta" || name == "beta") {
    const dyck_path p = dyck_path::parse(input);
    const plane_tree t = name == "sigma" ? sigma(p) : name == "eta" ? eta(p) : beta(p);
    result = to_string(t);
  } else if (name == "sigma-inv" || name == "eta-inv" || name == "beta-inv" || name == "dual") {
    const plane_tree t = parse_tree(input);
    if (name == "dual") result = to_string(dual(t));
    else if (name == "sigma-inv") result = sigma_inv(t).steps();
    else if (name == "eta-inv") result = eta_inv(t).steps();
    else result = beta_inv(t).steps();
  } else if (name == "zeta" || name == "zeta-inv" || name == "omega" || name == "omega-inv" ||
             name == "deutsch" || name == "deutsch-inv" || name == "tau" || name == "tau-inv") {
    const dyck_path p = dyck_path::parse(input);
    // omega and deutsch are involutions, so their -inv variants are themselves
    const dyck_path q = name == "zeta"       ? zeta(p)
                        : name == "zeta-inv" ? zeta_inv(p)
                        : name == "tau"      ? tau(p)
                        : name == "tau-inv"  ? tau_inv(p)
                        : name == "deutsch" || name == "deutsch-inv" ? deutsch(p)
                                                                     : omega(p);
    result = q.steps();
  } else {
    raise(errc::unknown_identity, "no map named '" + name + "'");
  }
  if (structured) out << "map=" << name << " input=" << input << " output=" << result << "\n";
  else out << result << "\n";
  return exit_ok;
}

inline void print_poly(poly_family fam, int n, const bivariate_polynomial& p, bool structured,
                       std::ostream& out) {
  if (!structured) {
    out << p.to_string() << "\n";
    return;
  }
  out << "poly family=" << family_name(fam) << " n=" << n << " terms=" << p.term_count() << "\n";
  for (const auto& [m, c] : p.terms()) {
    out << "term q=" << m.q_exp << " t=" << m.t_exp << " c=" << c.str() << "\n";
  }
}

inline int run_enumerate(const std::string& objects, int n, bool count_only, std::ostream& out) {
  unsigned long long count = 0;
  auto emit = [&](const std::string& line) {
    ++count;
    if (!count_only) out << line << "\n";
  };
  if (objects == "paths") {
    for_each_dyck_path(n, [&](const dyck_path& p) { emit(p.steps()); });
  } else if (objects == "trees") {
    for_each_plane_tree(n, [&](const plane_tree& t) { emit(to_string(t)); });
  } else if (objects == "parking") {
    for_each_parking_function(n, [&](const parking_function& p) { emit(p.to_string()); });
  } else if (objects == "labelled-trees") {
    for_each_labelled_tree(n, [&](const labelled_tree& t) { emit(t.to_string()); });
  } else if (objects == "graphs") {
    for_each_connected_graph(n, [&](const labelled_graph& g) { emit(g.to_string()); });
  } else {
    raise(errc::unknown_identity, "no object family named '" + objects + "'");
  }
  if (count_only) out << "count=" << count << "\n";
  return exit_ok;
}

inline int run_verify(const std::string& name, int max_n, bool list_only, std::ostream& out) {
  if (list_only) {
    for (const check_def& def : verification_checks()) {
      out << "check=" << def.name << " default_max_n=" << def.default_max_n << "\n";
    }
    return exit_ok;
  }
  std::vector<const check_def*> selected;
  if (name == "all") {
    for (const check_def& def : verification_checks()) selected.push_back(&def);
  } else {
    const check_def* def = find_check(name);
    if (def == nullptr) raise(errc::unknown_identity, "no check named '" + name + "'");
    selected.push_back(def);
  }
  bool all_pass = true;
  for (const check_def* def : selected) {
    const check_result r = run_check(*def, max_n);
    out << "check=" << r.name << " n=" << r.n << " status=" << (r.pass ? "pass" : "fail");
    if (!r.pass) out << " counterexample=\"" << r.detail << "\"";
    out << "\n";
    all_pass &= r.pass;
  }
  return all_pass ? exit_ok : exit_verification_failed;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of Dyck paths, plane trees, parking functions and "
               "their q,t-polynomials"};
  app.require_subcommand(1);
  bool structured = false;
  app.add_flag("--structured", structured, "line-oriented machine-readable output");

  std::string stats_path;
  CLI::App* stats = app.add_subcommand("stats", "statistics of one Dyck path");
  stats->add_option("path", stats_path, "step word over N/E")->required();

  std::string map_name, map_input;
  CLI::App* map = app.add_subcommand("map", "apply a bijection");
  map->add_option("name", map_name,
                  "sigma|eta|beta|dual|zeta|omega|deutsch|tau (each with an -inv variant)")
      ->required();
  map->add_option("input", map_input, "path or tree, matching the map")->required();

  std::string poly_name;
  int poly_n = 0;
  int jobs = 1;
  CLI::App* poly = app.add_subcommand("poly", "polynomial of a family at one size");
  poly->add_option("family", poly_name, "C_dinv|C_bounce|C_depth_ddinv|F|G|Tutte|M")->required();
  poly->add_option("n", poly_n, "semilength")->required();
  poly->add_option("--jobs", jobs, "enumeration workers");

  std::string verify_name = "all";
  int verify_max_n = detail::env_default_max_n();
  bool verify_list = false;
  CLI::App* verify = app.add_subcommand("verify", "run consistency checks");
  verify->add_option("name", verify_name, "check name or 'all'");
  verify->add_option("--max-n", verify_max_n, "cap on the object size (0 = per-check default)");
  verify->add_flag("--list", verify_list, "list available checks");

  std::string enum_objects;
  int enum_n = 0;
  bool enum_count = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "stream or count objects");
  enumerate->add_option("objects", enum_objects, "paths|trees|parking|labelled-trees|graphs")
      ->required();
  enumerate->add_option("n", enum_n, "size")->required();
  enumerate->add_flag("--count", enum_count, "print only the count");

  std::vector<const char*> argv;
  argv.push_back("qtcat");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (stats->parsed()) {
      detail::print_stats(dyck_path::parse(stats_path), structured, out);
      return exit_ok;
    }
    if (map->parsed()) return detail::run_map(map_name, map_input, structured, out);
    if (poly->parsed()) {
      const auto fam = parse_family(poly_name);
      if (!fam) raise(errc::unknown_identity, "no family named '" + poly_name + "'");
      detail::print_poly(*fam, poly_n, family_polynomial(*fam, poly_n, jobs), structured, out);
      return exit_ok;
    }
    if (verify->parsed()) return detail::run_verify(verify_name, verify_max_n, verify_list, out);
    if (enumerate->parsed()) return detail::run_enumerate(enum_objects, enum_n, enum_count, out);
  } catch (const error& e) {
    err << e.what() << "\n";
    return e.code() == errc::unsupported_size ? exit_size_cap : exit_usage;
  }
  return exit_usage;
}

}  // namespace qtcatalan::cli
