#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qgal/rational.hpp"
#include "qgal/report.hpp"

namespace qgal {

/// Gaussian rational: re + im * i.
struct GaussQ {
  Rat re, im;

  GaussQ() : re(0), im(0) {}
  GaussQ(Rat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussQ i() { return GaussQ(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussQ conj() const { return GaussQ(re, -im); }

  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  friend GaussQ operator+(GaussQ l, const GaussQ& r) { return l += r; }
  friend GaussQ operator-(GaussQ l, const GaussQ& r) { return l -= r; }
  GaussQ operator-() const { return GaussQ(-re, -im); }
  GaussQ operator*(const GaussQ& o) const;
  GaussQ inverse() const;  // throws on zero
  GaussQ operator/(const GaussQ& o) const { return *this * o.inverse(); }
  bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussQ& o) const { return !(*this == o); }

  std::string to_string() const;
};

/// Finite group given by its multiplication table (elements 0..n-1).
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n);       // 2 <= n <= 12
  static FiniteGroup symmetric3();        // one-line permutations, lex order
  static FiniteGroup dihedral4();         // e, r, r2, r3, s, sr, sr2, sr3
  static FiniteGroup quaternion8();       // 1, -1, i, -i, j, -j, k, -k
  /// Text format: first line n, then n rows of n 1-based indices.
  static FiniteGroup from_file(const std::string& path);
  static FiniteGroup from_table(std::string name,
                                std::vector<std::vector<int>> table,
                                std::vector<std::string> element_names);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_.at(a).at(b); }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_.at(a); }
  const std::string& element_name(int a) const { return names_.at(a); }

  /// Throws std::invalid_argument unless the table is a group.
  void validate() const;

 private:
  FiniteGroup() = default;
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Smallest subgroup containing the given elements (sorted).
std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& gens);

/// Every subgroup, found by saturating closures under single-element
/// extensions; ordered by size, then lexicographically.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

/// Right coset space K\G with canonical (smallest-index) representatives.
struct CosetSpace {
  std::vector<int> subgroup;     // sorted elements of K
  std::vector<int> reps;         // one per coset, ascending
  std::vector<int> coset_index;  // element -> index into reps
  int size() const { return static_cast<int>(reps.size()); }
};
CosetSpace right_cosets(const FiniteGroup& g, const std::vector<int>& k);

using Matrix = std::vector<std::vector<GaussQ>>;
Matrix identity_matrix(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
GaussQ mat_trace(const Matrix& a);
bool mat_eq(const Matrix& a, const Matrix& b);

/// Matrix representation of a subgroup (or the whole group), validated at
/// construction: domain closure, identity image, multiplicativity.
class FiniteRep {
 public:
  FiniteRep(const FiniteGroup& g, std::vector<int> domain, int dim,
            std::map<int, Matrix> mats);

  const FiniteGroup& group() const { return *group_; }
  const std::vector<int>& domain() const { return domain_; }
  int dim() const { return dim_; }
  const Matrix& at(int elem) const { return mats_.at(elem); }

 private:
  const FiniteGroup* group_;
  std::vector<int> domain_;
  int dim_;
  std::map<int, Matrix> mats_;
};

/// Characters (and general class functions): element -> value over a stated
/// domain (its key set).
using GroupChar = std::map<int, GaussQ>;

GaussQ char_inner(const GroupChar& a, const GroupChar& b);
GroupChar rep_character(const FiniteRep& rep);
GroupChar restrict_char(const GroupChar& chi, const std::vector<int>& k);
/// Induced character by the representative formula.
GroupChar induce_character(const FiniteGroup& g, const CosetSpace& cs,
                           const GroupChar& chi);

/// All homomorphisms from the subgroup into the fourth roots of unity
/// (the one-dimensional characters expressible over the Gaussian rationals).
std::vector<GroupChar> one_dim_characters(const FiniteGroup& g,
                                          const std::vector<int>& k);

/// Known-complete irreducible character sets for the groups whose tables are
/// Gaussian-rational: the order-2 and order-4 cyclic groups and the order-6
/// symmetric, order-8 dihedral and quaternion groups.  Each set is validated
/// against the orthogonality and dimension identities before being returned;
/// empty for other groups.
std::vector<std::pair<std::string, GroupChar>> irreducible_characters(
    const FiniteGroup& g);

/// One-dimensional representation attached to a character of a subgroup.
FiniteRep char_rep(const FiniteGroup& g, const std::vector<int>& k,
                   const GroupChar& chi);
/// Permutation representation of G on a right coset space.
FiniteRep permutation_rep(const FiniteGroup& g, const CosetSpace& cs);
/// Induction of a subgroup representation to the whole group, in blocks
/// indexed by coset representatives.
FiniteRep induce_rep(const FiniteRep& k_rep, const CosetSpace& cs);

/// Dimension of the nullspace of a matrix over the Gaussian rationals.
int nullspace_dim(Matrix m);

using StarFn = std::function<int(const FiniteGroup&, int)>;

/// Checks the adjointness of the star element action under the uniform inner
/// product; the default star is group inversion.
bool rep_is_unitary(const FiniteRep& rep, const StarFn& star,
                    std::string* witness);

/// Validates the built-in groups and irreducible tables.
Report check_group_builtins();

/// Frobenius reciprocity across the stock induction settings.
Report check_frobenius();

/// Existence, normalisation, invariance and uniqueness of the invariant
/// integral on coset carriers.
Report check_invariant_integral();

/// Unitarity under the inverse star, and the expected failure of a mutated
/// identity star.
Report check_unitarity_suite();

/// The function-space model of induction: carrier dimension, equivariance,
/// and agreement with block induction.
Report check_function_model_suite();

/// Comodule form of induction: coaction counit/coassociativity laws and
/// dualisation back to the induced representation.
Report check_comodule_suite();

/// All finite-group checks merged.
Report check_finite_all();

}  // namespace qgal
