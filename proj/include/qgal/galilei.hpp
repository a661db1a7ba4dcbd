#pragma once

#include <stdexcept>

#include "qgal/ncelement.hpp"
#include "qgal/presentation.hpp"
#include "qgal/report.hpp"

namespace qgal {

/// Raised when an expression that must be divisible by a power of a is not.
struct DivisibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Formal partial derivative in one generator of the PBW exponent basis.
NCElement pderiv(const NCElement& f, int gen);

/// Multiplication by one coordinate of the PBW exponent basis.  This is the
/// commutative coordinate action (it increments the exponent), not algebra
/// multiplication by the generator.
NCElement barmul(const NCElement& f, int gen);

/// Substitution gen -> gen + delta (finite binomial expansion; delta is a
/// scalar coefficient).  Realises shift operators of exp(delta d/dgen) type.
NCElement shift_gen(const NCElement& f, int gen, const CoeffPoly& delta);

/// Divides every coefficient by denom * a^k, throwing DivisibilityError when
/// any term has a-degree below k.
NCElement div_exact_a(const NCElement& f, int k, const Rat& denom);

/// Closed-form left action of the enveloping generator with the given index
/// (ordered I, P, H, N) on a function-algebra element, exact in a.
NCElement act_left_closed(const NCElement& f, int uq_gen);

/// Closed-form right action, exact in a.
NCElement act_right_closed(const NCElement& f, int uq_gen);

/// Compares both closed-form actions against the pairing-defined dual
/// actions, modulo the given a-truncation order, on all function monomials
/// up to max_degree; also confirms the commuting of the shift/derivative/
/// coordinate factors the closed forms are built from.
Report check_differential_realization(int a_order, int max_degree);

/// Confirms the a -> 0 limits of the closed-form actions coincide with the
/// classical vector-field formulas, on all monomials up to max_degree.
Report check_classical_limit(int max_degree);

}  // namespace qgal
