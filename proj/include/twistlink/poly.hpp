#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace twistlink {

using Integer = boost::multiprecision::cpp_int;

/// Exact polynomial in Z[A^{+-1}, M]. Terms are keyed by (a_exp, m_exp)
/// and zero coefficients are never stored, so equality is map equality.
class LaurentBipoly {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, Integer>;

  LaurentBipoly() = default;

  static LaurentBipoly constant(const Integer& c);
  static LaurentBipoly monomial(const Integer& c, int a_exp, int m_exp = 0);
  /// The loop value -A^-2 - A^2.
  static LaurentBipoly loop_value();

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_m_free() const;

  int min_a() const;
  int max_a() const;
  int max_m() const;

  Integer coeff(int a_exp, int m_exp = 0) const;
  void add_term(int a_exp, int m_exp, const Integer& c);

  LaurentBipoly& operator+=(const LaurentBipoly& o);
  LaurentBipoly& operator-=(const LaurentBipoly& o);
  friend LaurentBipoly operator+(LaurentBipoly p, const LaurentBipoly& q) { return p += q; }
  friend LaurentBipoly operator-(LaurentBipoly p, const LaurentBipoly& q) { return p -= q; }
  friend LaurentBipoly operator*(const LaurentBipoly& p, const LaurentBipoly& q);
  LaurentBipoly operator-() const;
  friend bool operator==(const LaurentBipoly&, const LaurentBipoly&) = default;

  LaurentBipoly pow(unsigned n) const;

  /// Canonical display, ascending (a_exp, m_exp): "-A^-2*M + A^2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

LaurentBipoly poly_mul(const LaurentBipoly& p, const LaurentBipoly& q);

/// r with q*r == p, or nullopt when p is not a multiple of q.
/// Throws std::domain_error when q is zero.
std::optional<LaurentBipoly> poly_div_exact(const LaurentBipoly& p, const LaurentBipoly& q);

/// Substitutes the M-free polynomial s for M.
LaurentBipoly poly_eval_M(const LaurentBipoly& p, const LaurentBipoly& s);

}  // namespace twistlink
