#pragma once

#include <memory>

#include "qgal/presentation.hpp"

namespace qgal {

/// Fresh function-algebra presentation (generators mu < x < t < v) with
/// exact coefficients and full Hopf structure maps.  The returned object is
/// independently owned, so tests may override individual maps.
std::unique_ptr<Presentation> make_fq_presentation();

/// Fresh enveloping-algebra presentation (generators I < P < H < N) with all
/// series-valued rewrite rules materialised at the given a-truncation order.
/// No structure maps are attached; they are derived from the pairing.
std::unique_ptr<Presentation> make_uq_presentation_bare(int a_order);

/// Shared, pinned function-algebra presentation.
const Presentation& fq_presentation();

/// Shared, pinned enveloping-algebra presentation at the given truncation
/// order, with structure maps derived from the dual pairing at construction.
const Presentation& uq_presentation(int a_order = 4);

/// The grouplike-style series exp(s * a * P) on an enveloping-algebra
/// presentation, materialised up to its a-truncation order.
NCElement exp_aP(const Presentation& uq, const Rat& s);

}  // namespace qgal
