#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgal/coeffpoly.hpp"

namespace qgal {

class Presentation;

// PBW monomial: exponent vector over a presentation's ordered generators.
// The normal form g_1^{e_1} * ... * g_n^{e_n} lists generators in ascending
// order, so an exponent vector determines the word.
using Monomial = std::vector<int>;

int mono_degree(const Monomial& m);
std::string mono_to_string(const Monomial& m, const Presentation& pres,
                           bool unicode = false);

// Canonical term order: total degree descending, then exponent vector
// lexicographically descending. Map iteration order equals print order.
struct MonoLess {
  bool operator()(const Monomial& l, const Monomial& r) const;
};

// All exponent vectors of the given width with degree in [min_deg, max_deg],
// listed by ascending degree then ascending lex (stable sweep order).
std::vector<Monomial> enumerate_monomials(int num_gens, int max_deg,
                                          int min_deg = 0);

// All monomials whose weight under the presentation's grading is at most
// max_weight. Requires every generator weight to be positive.
std::vector<Monomial> enumerate_monomials_weighted(const Presentation& pres,
                                                   int max_weight);

// Element of the algebra presented by `pres`, kept in PBW normal form.
// With a finite a-truncation order K on the presentation, every coefficient
// is maintained with a-degree <= K (arithmetic works modulo a^{K+1}).
class NCElement {
 public:
  NCElement() : pres_(nullptr) {}
  explicit NCElement(const Presentation* pres) : pres_(pres) {}

  static NCElement zero(const Presentation& pres);
  static NCElement unit(const Presentation& pres);
  static NCElement gen(const Presentation& pres, int index);
  static NCElement monomial(const Presentation& pres, const Monomial& m,
                            const CoeffPoly& c = CoeffPoly(Rat(1)));
  // Normalizes an arbitrary word (sequence of generator indices).
  static NCElement word(const Presentation& pres,
                        const std::vector<int>& letters,
                        const CoeffPoly& c = CoeffPoly(Rat(1)));

  const Presentation* pres() const { return pres_; }
  const std::map<Monomial, CoeffPoly, MonoLess>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max monomial degree; -1 for zero
  CoeffPoly coefficient(const Monomial& m) const;
  CoeffPoly unit_coefficient() const;

  void add_term(const Monomial& m, const CoeffPoly& c);

  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  friend NCElement operator+(NCElement l, const NCElement& r) {
    return l += r;
  }
  friend NCElement operator-(NCElement l, const NCElement& r) {
    return l -= r;
  }
  NCElement operator-() const;
  NCElement operator*(const NCElement& o) const;
  NCElement& operator*=(const NCElement& o) { return *this = *this * o; }
  friend NCElement operator*(const CoeffPoly& c, NCElement e) {
    return e.scale(c);
  }
  NCElement& scale(const CoeffPoly& c);
  NCElement pow(int e) const;

  bool operator==(const NCElement& o) const;
  bool operator!=(const NCElement& o) const { return !(*this == o); }

  // Maximum a-degree over all coefficients; nullopt for the zero element.
  std::optional<int> a_max_degree() const;

  std::string to_string(bool unicode = false) const;

 private:
  const Presentation* pres_;
  std::map<Monomial, CoeffPoly, MonoLess> terms_;
};

// Drops every term whose coefficient carries a-degree > k.
NCElement truncate_a(const NCElement& e, int k);
CoeffPoly truncate_a(const CoeffPoly& c, int k);

// Weight of a monomial under the presentation's grading.
int mono_weight(const Presentation& pres, const Monomial& m);
// Total weight of a (coefficient-term, monomial) pair, counting the
// presentation's a-weight for each power of a. Returns the common weight if
// the element is homogeneous, nullopt otherwise (zero counts as weight 0).
std::optional<int> homogeneous_weight(const NCElement& e);

struct Mono2Less {
  bool operator()(const std::pair<Monomial, Monomial>& l,
                  const std::pair<Monomial, Monomial>& r) const;
};
struct Mono3Less {
  bool operator()(const std::array<Monomial, 3>& l,
                  const std::array<Monomial, 3>& r) const;
};

// Rank-2 tensor over one presentation (both slots in the same algebra).
class Tensor2 {
 public:
  Tensor2() : pres_(nullptr) {}
  explicit Tensor2(const Presentation* pres) : pres_(pres) {}

  static Tensor2 zero(const Presentation& pres);
  static Tensor2 unit(const Presentation& pres);  // 1 (x) 1
  static Tensor2 simple(const NCElement& l, const NCElement& r);

  const Presentation* pres() const { return pres_; }
  const std::map<std::pair<Monomial, Monomial>, CoeffPoly, Mono2Less>& terms()
      const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m1, const Monomial& m2, const CoeffPoly& c);

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend Tensor2 operator+(Tensor2 l, const Tensor2& r) { return l += r; }
  friend Tensor2 operator-(Tensor2 l, const Tensor2& r) { return l -= r; }
  Tensor2 operator-() const;
  // Slotwise product with normalization in each slot.
  Tensor2 operator*(const Tensor2& o) const;
  Tensor2& scale(const CoeffPoly& c);
  Tensor2 pow(int e) const;

  // Swaps the two slots (the twist map).
  Tensor2 twist() const;

  bool operator==(const Tensor2& o) const;
  bool operator!=(const Tensor2& o) const { return !(*this == o); }

  std::string to_string(bool unicode = false) const;

 private:
  const Presentation* pres_;
  std::map<std::pair<Monomial, Monomial>, CoeffPoly, Mono2Less> terms_;
};

Tensor2 truncate_a(const Tensor2& t, int k);

// Rank-3 tensor, used by the coassociativity check.
class Tensor3 {
 public:
  Tensor3() : pres_(nullptr) {}
  explicit Tensor3(const Presentation* pres) : pres_(pres) {}

  static Tensor3 zero(const Presentation& pres) { return Tensor3(&pres); }

  const Presentation* pres() const { return pres_; }
  const std::map<std::array<Monomial, 3>, CoeffPoly, Mono3Less>& terms()
      const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::array<Monomial, 3>& key, const CoeffPoly& c);
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  bool operator==(const Tensor3& o) const;
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

  std::string to_string(bool unicode = false) const;

 private:
  const Presentation* pres_;
  std::map<std::array<Monomial, 3>, CoeffPoly, Mono3Less> terms_;
};

}  // namespace qgal
