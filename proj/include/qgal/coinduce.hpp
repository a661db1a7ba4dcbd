#pragma once

#include <optional>
#include <vector>

#include "qgal/ncelement.hpp"
#include "qgal/presentation.hpp"
#include "qgal/report.hpp"

namespace qgal {

/// A one-dimensional character of the non-boost subalgebra, assigning values
/// to the three commuting generators.  Absent entries stay symbolic (the
/// corresponding coefficient symbols alpha, beta, gamma are carried along).
/// The symbol E abbreviates the grouplike exponential of beta; it substitutes
/// to 1 exactly when beta is set to 0.
struct Character {
  std::optional<Rat> alpha;
  std::optional<Rat> beta;
  std::optional<Rat> gamma;
};

/// Truncated power series in the boost coordinate v: coefficients for
/// degrees 0..order.
class VSeries {
 public:
  explicit VSeries(int order);

  static VSeries basis(int order, int k);  // v^k
  static VSeries constant(int order, const CoeffPoly& c);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const CoeffPoly& coeff(int k) const { return c_.at(k); }
  void set_coeff(int k, const CoeffPoly& c) { c_.at(k) = c; }
  bool is_zero() const;

  VSeries& operator+=(const VSeries& o);
  VSeries& operator-=(const VSeries& o);
  friend VSeries operator+(VSeries l, const VSeries& r) { return l += r; }
  friend VSeries operator-(VSeries l, const VSeries& r) { return l -= r; }
  VSeries operator-() const;
  VSeries operator*(const VSeries& o) const;  // truncating convolution
  VSeries& scale(const CoeffPoly& c);
  VSeries derivative() const;
  VSeries truncated(int new_order) const;
  /// Truncates every coefficient's a-degree.
  VSeries truncate_a(int k) const;
  /// Substitutes a value for one coefficient symbol in every coefficient.
  VSeries substitute(CoeffPoly::Var var, const Rat& value) const;

  bool operator==(const VSeries& o) const;
  bool operator!=(const VSeries& o) const { return !(*this == o); }

  std::string to_string(bool unicode = false) const;

 private:
  std::vector<CoeffPoly> c_;
};

/// The coinduced representation of the enveloping algebra on v-series
/// truncated at the given order: the three non-boost generators act by
/// multiplication operators, the boost generator by d/dv.
class CoinducedRep {
 public:
  CoinducedRep(const Presentation& uq, Character chi, int order);

  const Presentation& uq() const { return *uq_; }
  const Character& chi() const { return chi_; }
  int order() const { return order_; }

  /// Multiplier series of a multiplicative generator (I, P or H).
  const VSeries& multiplier(int gen) const;
  /// Exact closed-form multiplier of the grouplike exponential of -2aP.
  const VSeries& grouplike_multiplier() const { return exp_m2ap_; }

  VSeries act_gen(int gen, const VSeries& s) const;
  VSeries act(const NCElement& u, const VSeries& s) const;

  VSeries one() const { return VSeries::basis(order_, 0); }

 private:
  const Presentation* uq_;
  Character chi_;
  int order_;
  VSeries mult_i_, mult_p_, mult_h_, exp_m2ap_;
};

CoinducedRep build_coinduced(const Presentation& uq, const Character& chi,
                             int order);

/// Verifies, on the truncated carrier: every rewrite rule as an operator
/// identity (modulo the a-truncation), the exact closed forms of the boost
/// commutators, commutativity of the multiplicative operators, the character
/// read off at v = 0, confinement of Laurent coefficients to their sanctioned
/// slots, compatibility of products with operator composition, and coherence
/// across carrier orders.
Report check_rep_relations(const Presentation& uq, const Character& chi,
                           int order);

/// Confirms the E -> 1, a -> 0 degeneration of the operators to the
/// classical coinduced action.
Report check_coinduced_classical_limit(const Presentation& uq, int order);

}  // namespace qgal
