#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qtcatalan/dyck_path.hpp"
#include "qtcatalan/error.hpp"
#include "qtcatalan/polynomial.hpp"

namespace qtcatalan {

inline constexpr int default_path_enumeration_cap = 14;

enum class poly_family { c_dinv, c_bounce, c_depth_ddinv, f, g, tutte, m };

inline const char* family_name(poly_family f) {
  switch (f) {
    case poly_family::c_dinv: return "C_dinv";
    case poly_family::c_bounce: return "C_bounce";
    case poly_family::c_depth_ddinv: return "C_depth_ddinv";
    case poly_family::f: return "F";
    case poly_family::g: return "G";
    case poly_family::tutte: return "Tutte";
    case poly_family::m: return "M";
  }
  return "?";
}

inline std::optional<poly_family> parse_family(std::string_view name) {
  if (name == "C_dinv") return poly_family::c_dinv;
  if (name == "C_bounce") return poly_family::c_bounce;
  if (name == "C_depth_ddinv") return poly_family::c_depth_ddinv;
  if (name == "F") return poly_family::f;
  if (name == "G") return poly_family::g;
  if (name == "Tutte") return poly_family::tutte;
  if (name == "M") return poly_family::m;
  return std::nullopt;
}

namespace detail {

// (q exponent, t exponent) of one path's monomial for the given family.
inline std::pair<int, int> family_exponents(poly_family fam, const dyck_path& p) {
  switch (fam) {
    case poly_family::c_dinv:
      return {static_cast<int>(area_stats(p).area), static_cast<int>(dinv(p))};
    case poly_family::c_bounce:
      return {static_cast<int>(area_stats(p).area), static_cast<int>(bounce(p).bounce)};
    case poly_family::c_depth_ddinv: {
      const auto d = depth_stats(p);
      return {static_cast<int>(d.depth),
              static_cast<int>(diagonal_inversion_pairs(d.sequence.entries))};
    }
    case poly_family::f:
      return {static_cast<int>(area_stats(p).area), static_cast<int>(depth_stats(p).depth)};
    case poly_family::g: {
      const auto d = depth_stats(p);
      return {static_cast<int>(dinv(p)),
              static_cast<int>(diagonal_inversion_pairs(d.sequence.entries))};
    }
    case poly_family::tutte: {
      const auto rr = rise_return(p);
      return {rr.initial_rise, rr.returns};
    }
    case poly_family::m:
      break;
  }
  raise(errc::internal_invariant_violation, "family has no per-path monomial");
}

// Enough prefixes to spread the enumeration over the workers; completions of
// distinct prefixes partition the path set, and the merged sum is independent
// of the partition because polynomial addition is commutative.
inline std::vector<std::string> dyck_prefixes(int n, int want) {
  std::vector<std::string> prefixes{""};
  while (static_cast<int>(prefixes.size()) < want) {
    std::vector<std::string> next;
    bool grew = false;
    for (const std::string& pre : prefixes) {
      if (static_cast<int>(pre.size()) == 2 * n) {
        next.push_back(pre);
        continue;
      }
      int norths = 0;
      for (char c : pre) norths += (c == 'N');
      const int easts = static_cast<int>(pre.size()) - norths;
      if (norths < n) {
        next.push_back(pre + 'N');
        grew = true;
      }
      if (easts < norths) {
        next.push_back(pre + 'E');
        grew = true;
      }
    }
    prefixes = std::move(next);
    if (!grew) break;
  }
  return prefixes;
}

}  // namespace detail

inline bivariate_polynomial m_polynomial(int n, int jobs, int cap);

// Sum over all Dyck paths of semilength n of the family's monomial.
inline bivariate_polynomial family_polynomial(poly_family fam, int n, int jobs = 1,
                                              int cap = default_path_enumeration_cap) {
  if (n > cap) {
    raise(errc::unsupported_size,
          "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
  if (n < 0) raise(errc::unsupported_size, "negative semilength");
  if (fam == poly_family::m) return m_polynomial(n, jobs, cap);
  if (n == 0) {
    if (fam == poly_family::tutte) {
      raise(errc::empty_path, "rise and return are undefined on the empty path");
    }
    return bivariate_polynomial::constant(1);
  }
  if (jobs <= 1) {
    bivariate_polynomial total;
    for_each_dyck_path(n, [&](const dyck_path& p) {
      const auto [qe, te] = detail::family_exponents(fam, p);
      total.add_term(qe, te, 1);
    });
    return total;
  }
  const std::vector<std::string> prefixes = detail::dyck_prefixes(n, 4 * jobs);
  std::vector<bivariate_polynomial> partial(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < prefixes.size();
           i += static_cast<std::size_t>(jobs)) {
        for_each_dyck_path_with_prefix(prefixes[i], n, [&](const dyck_path& p) {
          const auto [qe, te] = detail::family_exponents(fam, p);
          partial[static_cast<std::size_t>(w)].add_term(qe, te, 1);
        });
      }
    });
  }
  for (auto& t : workers) t.join();
  bivariate_polynomial total;
  for (const auto& part : partial) total += part;
  return total;
}

// F_0 = 1, F_n = sum_{k=1}^{n} q^{k-1} t^{n-k} F_{k-1} F_{n-k}.
inline bivariate_polynomial f_recursive(int n) {
  if (n < 0) raise(errc::unsupported_size, "negative semilength");
  std::vector<bivariate_polynomial> f;
  f.reserve(static_cast<std::size_t>(n) + 1);
  f.push_back(bivariate_polynomial::constant(1));
  for (int m = 1; m <= n; ++m) {
    bivariate_polynomial total;
    for (int k = 1; k <= m; ++k) {
      total += bivariate_polynomial::term(k - 1, m - k) * f[k - 1] * f[m - k];
    }
    f.push_back(std::move(total));
  }
  return f.back();
}

// Exact quotient (C_dinv - F) / ((1-q)(1-t)); the difference is divisible for
// every n, and a nonzero remainder is surfaced as a defect.
inline bivariate_polynomial m_polynomial(int n, int jobs = 1,
                                         int cap = default_path_enumeration_cap) {
  if (n < 1) raise(errc::empty_path, "defined for n >= 1");
  const bivariate_polynomial diff = family_polynomial(poly_family::c_dinv, n, jobs, cap) -
                                    family_polynomial(poly_family::f, n, jobs, cap);
  auto step1 = divide_exact_by_one_minus(diff, poly_variable::q);
  if (!step1) raise(errc::not_divisible, "difference is not divisible by (1-q)");
  auto step2 = divide_exact_by_one_minus(*step1, poly_variable::t);
  if (!step2) raise(errc::not_divisible, "difference is not divisible by (1-t)");
  return *step2;
}

struct symmetry_result {
  bool symmetric = true;
  std::optional<monomial> witness;  // first differing exponent pair in canonical order
};

inline symmetry_result symmetry_report(const bivariate_polynomial& p) {
  const bivariate_polynomial swapped = p.swap_qt();
  if (p == swapped) return {};
  for (const auto& [m, c] : p.terms()) {
    if (swapped.coefficient(m.q_exp, m.t_exp) != c) return {false, m};
  }
  for (const auto& [m, c] : swapped.terms()) {
    if (p.coefficient(m.q_exp, m.t_exp) != c) return {false, m};
  }
  raise(errc::internal_invariant_violation, "polynomials differ but no witness found");
}

// True iff all coefficients of the rise/return polynomial with equal exponent
// sum agree.
inline bool stump_check(int n, int cap = default_path_enumeration_cap) {
  if (n < 1) raise(errc::empty_path, "defined for n >= 1");
  const bivariate_polynomial tutte = family_polynomial(poly_family::tutte, n, 1, cap);
  std::map<int, bigint> seen;  // exponent sum -> common coefficient
  for (const auto& [m, c] : tutte.terms()) {
    auto [it, inserted] = seen.emplace(m.q_exp + m.t_exp, c);
    if (!inserted && it->second != c) return false;
  }
  return true;
}

}  // namespace qtcatalan
