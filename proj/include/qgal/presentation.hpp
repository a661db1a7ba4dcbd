#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgal/ncelement.hpp"

namespace qgal {

// A PBW presentation of an algebra with ordered generators g_0 < ... < g_{n-1}
// and, for every pair j > i, a rewrite rule  g_j * g_i -> rules[{j,i}]  whose
// right-hand side is in normal form. Together with the structure maps on
// generators it carries the full Hopf data; the maps may be absent until they
// are filled in (the dually-presented algebra derives them from the pairing).
//
// Instances are pinned in memory: elements hold a pointer to their
// presentation, so Presentation is neither copyable nor movable.
class Presentation {
 public:
  Presentation(std::string name, std::vector<std::string> gen_names,
               std::vector<std::string> gen_names_unicode,
               std::vector<int> gen_weights, std::optional<int> a_order);

  Presentation(const Presentation&) = delete;
  Presentation& operator=(const Presentation&) = delete;

  const std::string& name() const { return name_; }
  int num_gens() const { return static_cast<int>(gen_names_.size()); }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  const std::string& gen_name(int i, bool unicode = false) const {
    return unicode ? gen_names_unicode_[i] : gen_names_[i];
  }
  int gen_index(const std::string& name) const;  // -1 when unknown

  // Finite a-truncation order K (coefficients kept modulo a^{K+1});
  // nullopt means exact coefficients.
  std::optional<int> a_order() const { return a_order_; }

  int gen_weight(int i) const { return gen_weights_[i]; }
  // Weight of the deformation parameter under this presentation's grading.
  // The two dually-paired algebras grade `a` with opposite signs.
  int a_weight() const { return a_weight_; }
  void set_a_weight(int w) { a_weight_ = w; }

  void set_rule(int j, int i, const NCElement& rhs);
  const NCElement& rule(int j, int i) const;
  const std::map<std::pair<int, int>, NCElement>& rules() const {
    return rules_;
  }

  void set_structure_maps(std::vector<Tensor2> coproducts,
                          std::vector<CoeffPoly> counits,
                          std::vector<NCElement> antipodes);
  bool has_structure_maps() const { return has_structure_maps_; }
  const Tensor2& gen_coproduct(int i) const;
  const CoeffPoly& gen_counit(int i) const;
  const NCElement& gen_antipode(int i) const;

  // Requires one rule for every pair j > i, each right-hand side obeying the
  // truncation invariant. Throws std::logic_error on violation.
  void validate() const;

  // Canonical structured-text document (see parse_presentation).
  std::string to_text() const;

  // Straightening cache:  normal(monomial * g).
  const std::map<Monomial, CoeffPoly, MonoLess>& mul_mono_gen(
      const Monomial& m, int g) const;

 private:
  std::string name_;
  std::vector<std::string> gen_names_;
  std::vector<std::string> gen_names_unicode_;
  std::vector<int> gen_weights_;
  std::optional<int> a_order_;
  int a_weight_ = 2;
  std::map<std::pair<int, int>, NCElement> rules_;
  std::vector<Tensor2> coproducts_;
  std::vector<CoeffPoly> counits_;
  std::vector<NCElement> antipodes_;
  bool has_structure_maps_ = false;

  mutable std::map<std::pair<Monomial, int>,
                   std::map<Monomial, CoeffPoly, MonoLess>>
      straighten_cache_;
};

// Parses the canonical presentation document produced by
// Presentation::to_text. Throws std::invalid_argument on malformed input.
std::unique_ptr<Presentation> parse_presentation(const std::string& text);

}  // namespace qgal
