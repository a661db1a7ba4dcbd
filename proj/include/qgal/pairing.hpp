#pragma once

#include <functional>

#include "qgal/ncelement.hpp"
#include "qgal/presentation.hpp"
#include "qgal/report.hpp"

namespace qgal {

/// Dual pairing between the enveloping-side algebra (first argument) and the
/// function-side algebra (second argument).  On basis monomials it is
/// diagonal: monomials with equal exponent vectors pair to the product of
/// exponent factorials, all other pairs vanish.  With a finite a-truncation
/// order K on the enveloping side, every pairing value is reported modulo
/// a^{K+1}.
class PairingContext {
 public:
  using NormFn = std::function<Rat(const Monomial&)>;

  /// Requires matching generator counts and weights, and weight-homogeneous
  /// rewrite rules on both sides (the grading drives all support bounds).
  PairingContext(const Presentation& uq, const Presentation& fq);

  const Presentation& uq() const { return *uq_; }
  const Presentation& fq() const { return *fq_; }

  /// Product of exponent factorials of a basis monomial.
  Rat norm(const Monomial& m) const;
  /// Replaces the norm (fault-injection hook); pass nullptr to restore.
  void set_norm_override(NormFn f) { norm_override_ = std::move(f); }

  CoeffPoly pair_mono(const Monomial& u, const Monomial& f) const;
  CoeffPoly pair(const NCElement& u, const NCElement& f) const;
  /// Slotwise pairing of two-fold tensors.
  CoeffPoly pair(const Tensor2& u, const Tensor2& f) const;

  /// Truncates a coefficient to the enveloping side's a-order.
  CoeffPoly clip(CoeffPoly c) const;

 private:
  const Presentation* uq_;
  const Presentation* fq_;
  NormFn norm_override_;
};

/// Throws std::logic_error unless every rewrite rule (and structure map, when
/// present) of the presentation is weight-homogeneous under its grading.
void validate_homogeneity(const Presentation& p);

/// Coproduct of one enveloping generator, recovered coefficient-by-
/// coefficient from pairings against products on the function side.
Tensor2 derive_gen_coproduct(const PairingContext& ctx, int gen);

/// Counit of one enveloping generator: its pairing with the function unit.
CoeffPoly derive_gen_counit(const PairingContext& ctx, int gen);

/// Antipode of one enveloping generator, recovered from pairings against
/// function-side antipodes.
NCElement derive_gen_antipode(const PairingContext& ctx, int gen);

/// Derives all three structure maps for every generator of `uq` from the
/// pairing against `fq` and installs them on `uq`.
void derive_uq_structure(Presentation& uq, const Presentation& fq);

/// Function-side product reconstructed through the pairing and the derived
/// enveloping coproduct; independent cross-check of the rewrite engine.
NCElement product_via_pairing(const PairingContext& ctx, const NCElement& f,
                              const NCElement& g);

/// Enveloping-side product reconstructed through the pairing and the
/// function-side coproduct: the coefficient of each basis monomial b in u*v
/// is the pairing of u (x) v against the coproduct of b's dual, divided by
/// the norm of b.  Requires a finite a-order; values carry its truncation.
NCElement uq_product_via_pairing(const PairingContext& ctx, const NCElement& u,
                                 const NCElement& v);

/// Left dual action: u acts on f through the right coproduct slot.
NCElement act_left(const PairingContext& ctx, const NCElement& u,
                   const NCElement& f);

/// Right dual action: u acts on f through the left coproduct slot.
NCElement act_right(const PairingContext& ctx, const NCElement& f,
                    const NCElement& u);

/// Verifies the five pairing axioms (multiplication against coproduct in
/// both directions, unit against counit in both directions, antipode
/// compatibility) plus basis nondegeneracy, over bounded monomial sweeps.
Report verify_pairing_axioms(const PairingContext& ctx, int max_degree);

/// Verifies every enveloping rewrite rule against the pairing: the two-slot
/// functional of the rule's left-hand side agrees with the right-hand side
/// on all function monomials in the relevant weight window.
Report verify_uq_relations_via_pairing(const PairingContext& ctx);

/// Verifies module laws of the dual actions (associativity, unit action,
/// module-algebra compatibility, and commuting of the two sides).
Report check_module_laws(const PairingContext& ctx, int max_degree);

/// Examines the grouplike-dressed combinations exp(-aP)*I and exp(aP)*N
/// against their stated coproduct/counit/antipode lines, the literal reading
/// exp(-aP) alone, and a sign-flipped negative control.
Report reconcile_mk(const Presentation& uq);

}  // namespace qgal
