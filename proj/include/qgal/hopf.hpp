#pragma once

#include <string>

#include "qgal/ncelement.hpp"
#include "qgal/presentation.hpp"
#include "qgal/report.hpp"

namespace qgal {

/// Coproduct extended multiplicatively from the generators to normal forms.
Tensor2 coproduct(const NCElement& e);

/// Counit extended multiplicatively.
CoeffPoly counit(const NCElement& e);

/// Antipode extended anti-multiplicatively.
NCElement antipode(const NCElement& e);

/// (coproduct @ id) applied slotwise to a two-fold tensor.
Tensor3 coproduct_left(const Tensor2& t);

/// (id @ coproduct) applied slotwise to a two-fold tensor.
Tensor3 coproduct_right(const Tensor2& t);

/// Convolution mult(antipode @ id)(coproduct e).
NCElement convolve_antipode_left(const NCElement& e);

/// Convolution mult(id @ antipode)(coproduct e).
NCElement convolve_antipode_right(const NCElement& e);

/// Verifies coassociativity, both counit laws, both antipode laws, and that
/// each structure map respects every rewrite rule, over all normal-form
/// monomials of total degree <= max_degree.
Report check_hopf_axioms(const Presentation& p, int max_degree);

struct CocommutativityResult {
  bool cocommutative = true;
  std::string witness;  ///< monomial whose coproduct is not twist-symmetric
};

/// Searches monomials of degree <= max_degree for a twist-asymmetric
/// coproduct.
CocommutativityResult check_cocommutativity(const Presentation& p,
                                            int max_degree);

}  // namespace qgal
