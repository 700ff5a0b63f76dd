#include "twistlink/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace twistlink {

LaurentBipoly LaurentBipoly::constant(const Integer& c) { return monomial(c, 0, 0); }

LaurentBipoly LaurentBipoly::monomial(const Integer& c, int a_exp, int m_exp) {
  if (m_exp < 0) throw std::invalid_argument("negative M exponent");
  LaurentBipoly p;
  p.add_term(a_exp, m_exp, c);
  return p;
}

LaurentBipoly LaurentBipoly::loop_value() {
  LaurentBipoly p;
  p.add_term(-2, 0, -1);
  p.add_term(2, 0, -1);
  return p;
}

bool LaurentBipoly::is_m_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.second == 0; });
}

int LaurentBipoly::min_a() const {
  int r = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) r = std::min(r, k.first);
  return r;
}

int LaurentBipoly::max_a() const {
  int r = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) r = std::max(r, k.first);
  return r;
}

int LaurentBipoly::max_m() const {
  int r = 0;
  for (const auto& [k, c] : terms_) r = std::max(r, k.second);
  return r;
}

Integer LaurentBipoly::coeff(int a_exp, int m_exp) const {
  auto it = terms_.find({a_exp, m_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentBipoly::add_term(int a_exp, int m_exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a_exp, m_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentBipoly& LaurentBipoly::operator+=(const LaurentBipoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

LaurentBipoly& LaurentBipoly::operator-=(const LaurentBipoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

LaurentBipoly LaurentBipoly::operator-() const {
  LaurentBipoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentBipoly operator*(const LaurentBipoly& p, const LaurentBipoly& q) {
  LaurentBipoly r;
  for (const auto& [kp, cp] : p.terms_)
    for (const auto& [kq, cq] : q.terms_)
      r.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
  return r;
}

LaurentBipoly LaurentBipoly::pow(unsigned n) const {
  LaurentBipoly result = constant(1);
  LaurentBipoly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::string LaurentBipoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const auto [a, m] = k;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;

    std::vector<std::string> factors;
    if (mag != 1 || (a == 0 && m == 0)) factors.push_back(mag.str());
    if (a == 1) {
      factors.emplace_back("A");
    } else if (a != 0) {
      factors.push_back("A^" + std::to_string(a));
    }
    if (m == 1) {
      factors.emplace_back("M");
    } else if (m > 1) {
      factors.push_back("M^" + std::to_string(m));
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

LaurentBipoly poly_mul(const LaurentBipoly& p, const LaurentBipoly& q) { return p * q; }

std::optional<LaurentBipoly> poly_div_exact(const LaurentBipoly& p, const LaurentBipoly& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return LaurentBipoly{};

  // Leading terms in the (m_exp, a_exp) lexicographic order, which is
  // compatible with multiplication. Any exact quotient r satisfies
  // min_a(r) = min_a(p) - min_a(q) and max_m(r) = max_m(p) - max_m(q),
  // which bounds the elimination loop.
  auto leading = [](const LaurentBipoly& x) {
    auto best = x.terms().begin();
    for (auto it = x.terms().begin(); it != x.terms().end(); ++it) {
      if (it->first.second > best->first.second ||
          (it->first.second == best->first.second && it->first.first > best->first.first))
        best = it;
    }
    return *best;
  };

  const int min_a_bound = p.min_a() - q.min_a();
  const int max_m_bound = p.max_m() - q.max_m();
  if (max_m_bound < 0) return std::nullopt;

  const auto [q_key, q_coeff] = leading(q);
  LaurentBipoly rem = p;
  LaurentBipoly quotient;
  while (!rem.is_zero()) {
    const auto [r_key, r_coeff] = leading(rem);
    const int a = r_key.first - q_key.first;
    const int m = r_key.second - q_key.second;
    if (m < 0 || m > max_m_bound || a < min_a_bound) return std::nullopt;
    if (r_coeff % q_coeff != 0) return std::nullopt;
    LaurentBipoly step = LaurentBipoly::monomial(r_coeff / q_coeff, a, m);
    quotient += step;
    rem -= step * q;
  }
  return quotient;
}

LaurentBipoly poly_eval_M(const LaurentBipoly& p, const LaurentBipoly& s) {
  if (!s.is_m_free()) throw std::invalid_argument("substituted value must be M-free");
  std::map<int, LaurentBipoly> powers;
  LaurentBipoly out;
  for (const auto& [k, c] : p.terms()) {
    auto it = powers.find(k.second);
    if (it == powers.end()) it = powers.emplace(k.second, s.pow(static_cast<unsigned>(k.second))).first;
    out += LaurentBipoly::monomial(c, k.first, 0) * it->second;
  }
  return out;
}

}  // namespace twistlink
