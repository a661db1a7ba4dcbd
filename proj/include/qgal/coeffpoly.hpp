#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgal/rational.hpp"

namespace qgal {

// Sparse multivariate polynomial over Q in the commuting indeterminates
//   a      -- deformation parameter, Laurent (negative exponents allowed)
//   alpha, beta, gamma -- character parameters
//   E      -- formal stand-in for e^{-2*a*beta}, an independent indeterminate
// Every coefficient in the engine lives here; arithmetic is exact.
class CoeffPoly {
 public:
  enum Var : int { A = 0, Alpha = 1, Beta = 2, Gamma = 3, E = 4 };
  static constexpr int kNumVars = 5;
  using Key = std::array<int, kNumVars>;

  CoeffPoly() = default;
  explicit CoeffPoly(const Rat& c) {
    if (!qgal::is_zero(c)) terms_[Key{}] = c;
  }
  CoeffPoly(long c) : CoeffPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static CoeffPoly var(Var v, int exp = 1) {
    CoeffPoly p;
    if (exp < 0 && v != A)
      throw std::invalid_argument(
          "negative exponent only permitted on the deformation parameter a");
    Key k{};
    k[v] = exp;
    p.terms_[k] = Rat(1);
    return p;
  }
  // Convenience: c * a^k.
  static CoeffPoly a_power(const Rat& c, int k) {
    CoeffPoly p;
    if (qgal::is_zero(c)) return p;
    Key key{};
    key[A] = k;
    p.terms_[key] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Key{});
  }
  // Value as a plain rational; throws if symbolic.
  Rat rational_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational())
      throw std::domain_error("coefficient is not a plain rational");
    return terms_.begin()->second;
  }

  const std::map<Key, Rat>& terms() const { return terms_; }

  CoeffPoly& operator+=(const CoeffPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  CoeffPoly& operator-=(const CoeffPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend CoeffPoly operator+(CoeffPoly l, const CoeffPoly& r) { return l += r; }
  friend CoeffPoly operator-(CoeffPoly l, const CoeffPoly& r) { return l -= r; }
  CoeffPoly operator-() const {
    CoeffPoly p;
    for (const auto& [k, c] : terms_) p.terms_[k] = -c;
    return p;
  }
  friend CoeffPoly operator*(const CoeffPoly& l, const CoeffPoly& r) {
    CoeffPoly p;
    for (const auto& [k1, c1] : l.terms_)
      for (const auto& [k2, c2] : r.terms_) {
        Key k{};
        for (int i = 0; i < kNumVars; ++i) k[i] = k1[i] + k2[i];
        p.add_term(k, c1 * c2);
      }
    return p;
  }
  CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }
  CoeffPoly& operator*=(const Rat& c) {
    if (qgal::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend CoeffPoly operator*(CoeffPoly l, const Rat& c) { return l *= c; }
  friend CoeffPoly operator*(const Rat& c, CoeffPoly r) { return r *= c; }

  CoeffPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    CoeffPoly r(Rat(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool operator==(const CoeffPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const CoeffPoly& o) const { return !(*this == o); }

  // Least / greatest exponent of a appearing; nullopt when zero.
  std::optional<int> a_min_degree() const {
    std::optional<int> m;
    for (const auto& [k, c] : terms_)
      if (!m || k[A] < *m) m = k[A];
    return m;
  }
  std::optional<int> a_max_degree() const {
    std::optional<int> m;
    for (const auto& [k, c] : terms_)
      if (!m || k[A] > *m) m = k[A];
    return m;
  }
  bool has_negative_a() const {
    auto m = a_min_degree();
    return m && *m < 0;
  }

  // Drops every term whose a-exponent exceeds k (working modulo a^{k+1}).
  CoeffPoly truncate_a(int k) const {
    CoeffPoly p;
    for (const auto& [key, c] : terms_)
      if (key[A] <= k) p.terms_[key] = c;
    return p;
  }

  // Multiplies by a^k (k may be negative: exact Laurent shift).
  CoeffPoly shift_a(int k) const {
    CoeffPoly p;
    for (const auto& [key, c] : terms_) {
      Key nk = key;
      nk[A] += k;
      p.terms_[nk] = c;
    }
    return p;
  }

  // Substitutes a rational value for one indeterminate.
  CoeffPoly substitute(Var v, const Rat& value) const {
    CoeffPoly p;
    for (const auto& [key, c] : terms_) {
      Rat factor = c;
      if (key[v] != 0) {
        if (key[v] < 0) {
          if (qgal::is_zero(value))
            throw std::domain_error("substituting 0 into a negative power");
          Rat inv = Rat(1) / value;
          for (int i = 0; i < -key[v]; ++i) factor *= inv;
        } else {
          for (int i = 0; i < key[v]; ++i) factor *= value;
        }
      }
      Key nk = key;
      nk[v] = 0;
      p.add_term(nk, factor);
    }
    return p;
  }

  // Largest exponent with which one indeterminate occurs (0 when absent).
  int max_exponent(Var v) const {
    int m = 0;
    for (const auto& [key, c] : terms_)
      if (key[v] > m) m = key[v];
    return m;
  }

  // Substitutes a polynomial for one indeterminate (which must occur with
  // nonnegative exponents only, and must not occur in the replacement).
  CoeffPoly substitute_poly(Var v, const CoeffPoly& value) const {
    std::vector<CoeffPoly> powers{CoeffPoly(Rat(1))};
    const int m = max_exponent(v);
    powers.reserve(static_cast<std::size_t>(m) + 1);
    for (int e = 1; e <= m; ++e) powers.push_back(powers.back() * value);
    return substitute_poly(v, powers);
  }

  // Same substitution with powers[e] = value^e supplied by the caller, which
  // lets one table serve many polynomials.  The table must cover every
  // occurring exponent.
  CoeffPoly substitute_poly(Var v, const std::vector<CoeffPoly>& powers) const {
    int hi = 0;
    for (const auto& [key, c] : terms_) {
      if (key[v] < 0)
        throw std::domain_error(
            "substituting a polynomial into a negative power");
      if (key[v] > hi) hi = key[v];
    }
    if (hi == 0) return *this;
    CoeffPoly p;
    for (const auto& [key, c] : terms_) {
      Key nk = key;
      nk[v] = 0;
      CoeffPoly term;
      term.terms_[nk] = c;
      p += term * powers.at(static_cast<std::size_t>(key[v]));
    }
    return p;
  }

  // Extracts the sub-polynomial whose a-exponent equals k (a stripped).
  CoeffPoly a_coefficient(int k) const {
    CoeffPoly p;
    for (const auto& [key, c] : terms_)
      if (key[A] == k) {
        Key nk = key;
        nk[A] = 0;
        p.terms_[nk] = c;
      }
    return p;
  }

  // True when a printed form needs parentheses inside a product.
  bool needs_parens() const {
    if (terms_.size() > 1) return true;
    if (terms_.empty()) return false;
    return sgn(terms_.begin()->second) < 0;
  }

  // Canonical text. Terms appear in the fixed key order; the sign of each
  // non-leading term is folded into the joining " + " / " - ".
  std::string to_string(bool unicode = false) const;

 private:
  void add_term(const Key& k, const Rat& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!qgal::is_zero(c)) terms_[k] = c;
    } else {
      it->second += c;
      if (qgal::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::map<Key, Rat> terms_;
};

}  // namespace qgal
