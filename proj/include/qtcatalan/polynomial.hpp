#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtcatalan/error.hpp"

namespace qtcatalan {

using bigint = boost::multiprecision::cpp_int;

struct monomial {
  int q_exp = 0;
  int t_exp = 0;
  friend bool operator==(const monomial&, const monomial&) = default;
};

// Canonical term order: descending total degree, then descending q exponent.
// Serialization iterates the map directly, so golden output is stable.
struct term_order {
  bool operator()(const monomial& a, const monomial& b) const {
    const int da = a.q_exp + a.t_exp;
    const int db = b.q_exp + b.t_exp;
    if (da != db) return da > db;
    return a.q_exp > b.q_exp;
  }
};

// Sparse exact-integer polynomial in q and t.  Zero coefficients are never
// stored; all arithmetic is exact.
class bivariate_polynomial {
 public:
  using term_map = std::map<monomial, bigint, term_order>;

  bivariate_polynomial() = default;

  static bivariate_polynomial constant(bigint c) {
    bivariate_polynomial p;
    p.add_term(0, 0, std::move(c));
    return p;
  }

  static bivariate_polynomial term(int q_exp, int t_exp, bigint c = 1) {
    bivariate_polynomial p;
    p.add_term(q_exp, t_exp, std::move(c));
    return p;
  }

  void add_term(int q_exp, int t_exp, const bigint& c) {
    if (c == 0) return;
    const monomial m{q_exp, t_exp};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }

  bigint coefficient(int q_exp, int t_exp) const {
    auto it = terms_.find(monomial{q_exp, t_exp});
    return it == terms_.end() ? bigint(0) : it->second;
  }

  bivariate_polynomial& operator+=(const bivariate_polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.q_exp, m.t_exp, c);
    return *this;
  }

  bivariate_polynomial& operator-=(const bivariate_polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.q_exp, m.t_exp, -c);
    return *this;
  }

  friend bivariate_polynomial operator+(bivariate_polynomial a, const bivariate_polynomial& b) {
    a += b;
    return a;
  }

  friend bivariate_polynomial operator-(bivariate_polynomial a, const bivariate_polynomial& b) {
    a -= b;
    return a;
  }

  friend bivariate_polynomial operator*(const bivariate_polynomial& a,
                                        const bivariate_polynomial& b) {
    bivariate_polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        out.add_term(ma.q_exp + mb.q_exp, ma.t_exp + mb.t_exp, ca * cb);
      }
    }
    return out;
  }

  bivariate_polynomial& operator*=(const bivariate_polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend bool operator==(const bivariate_polynomial&, const bivariate_polynomial&) = default;

  bivariate_polynomial swap_qt() const {
    bivariate_polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(monomial{m.t_exp, m.q_exp}, c);
    return out;
  }

  bigint evaluate(const bigint& q0, const bigint& t0) const {
    bigint total = 0;
    for (const auto& [m, c] : terms_) {
      bigint v = c;
      for (int i = 0; i < m.q_exp; ++i) v *= q0;
      for (int i = 0; i < m.t_exp; ++i) v *= t0;
      total += v;
    }
    return total;
  }

  // Human-readable form in canonical term order, e.g. "q^3 + q^2*t + q*t".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bigint abs_c = c < 0 ? bigint(-c) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string factors;
      auto append_var = [&](const char* name, int e) {
        if (e == 0) return;
        if (!factors.empty()) factors += "*";
        factors += name;
        if (e > 1) factors += "^" + std::to_string(e);
      };
      append_var("q", m.q_exp);
      append_var("t", m.t_exp);
      if (factors.empty()) {
        out += abs_c.str();
      } else {
        if (abs_c != 1) out += abs_c.str() + "*";
        out += factors;
      }
    }
    return out;
  }

 private:
  term_map terms_;
};

enum class poly_variable { q, t };

// Quotient of p by (1 - q) or (1 - t) when the division is exact, done as
// univariate synthetic division at the root 1 with an explicit remainder
// check.  Returns nothing when the remainder is nonzero.
inline std::optional<bivariate_polynomial> divide_exact_by_one_minus(
    const bivariate_polynomial& p, poly_variable var) {
  if (p.is_zero()) return bivariate_polynomial{};
  // Group coefficients by the chosen variable's exponent.
  std::map<int, std::map<int, bigint>> by_exp;  // main exp -> (other exp -> coeff)
  int max_exp = 0;
  for (const auto& [m, c] : p.terms()) {
    const int main_e = var == poly_variable::q ? m.q_exp : m.t_exp;
    const int other_e = var == poly_variable::q ? m.t_exp : m.q_exp;
    by_exp[main_e][other_e] += c;
    max_exp = std::max(max_exp, main_e);
  }
  // p = (1 - x) r + rem with r_a determined from the top coefficient down:
  // r_{top-1} = -c_top, r_{a-1} = r_a - c_a, rem = c_0 - r_0.
  std::map<int, bigint> carry;  // r_{a-1} after processing exponent a
  bivariate_polynomial quotient;
  for (int a = max_exp; a >= 1; --a) {
    if (auto it = by_exp.find(a); it != by_exp.end()) {
      for (const auto& [e, c] : it->second) carry[e] -= c;
    }
    for (const auto& [e, c] : carry) {
      if (c == 0) continue;
      if (var == poly_variable::q) quotient.add_term(a - 1, e, c);
      else quotient.add_term(e, a - 1, c);
    }
  }
  // remainder = c_0 - r_0
  std::map<int, bigint> rem;
  if (auto it = by_exp.find(0); it != by_exp.end()) {
    for (const auto& [e, c] : it->second) rem[e] += c;
  }
  for (const auto& [e, c] : carry) rem[e] -= c;
  for (const auto& [e, c] : rem) {
    if (c != 0) return std::nullopt;
  }
  return quotient;
}

}  // namespace qtcatalan
