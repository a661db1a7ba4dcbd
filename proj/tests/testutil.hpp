#pragma once

// Shared helpers for the test suites: an independent word rewriter that can
// choose its reduction position, used to probe confluence of the engine's
// normal ordering from outside.

#include <utility>
#include <vector>

#include "qgal/ncelement.hpp"
#include "qgal/presentation.hpp"

namespace testutil {

// Rewrites an arbitrary word to PBW normal form, resolving each descent
// either at the first position (pick_last = false) or at the last
// (pick_last = true).  Deliberately independent of the engine's own
// straightening path; a confluent system must agree on both.
inline qgal::NCElement reduce_word_choosing(const qgal::Presentation& p,
                                            const std::vector<int>& word,
                                            const qgal::CoeffPoly& coeff,
                                            bool pick_last) {
  using qgal::CoeffPoly;
  using qgal::NCElement;
  NCElement out = NCElement::zero(p);
  std::vector<std::pair<std::vector<int>, CoeffPoly>> work;
  work.emplace_back(word, coeff);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (p.a_order()) c = qgal::truncate_a(c, *p.a_order());
    if (c.is_zero()) continue;
    int pos = -1;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
      if (w[i] > w[i + 1]) {
        pos = i;
        if (!pick_last) break;
      }
    if (pos < 0) {
      qgal::Monomial m(p.num_gens(), 0);
      for (int g : w) ++m[g];
      out.add_term(m, c);
      continue;
    }
    const NCElement& rhs = p.rule(w[pos], w[pos + 1]);
    for (const auto& [m, rc] : rhs.terms()) {
      std::vector<int> nw(w.begin(), w.begin() + pos);
      for (int g = 0; g < static_cast<int>(m.size()); ++g)
        for (int e = 0; e < m[g]; ++e) nw.push_back(g);
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(nw), c * rc);
    }
  }
  return out;
}

// All words of exactly the given length over an alphabet of n generators.
inline std::vector<std::vector<int>> all_words(int n, int length) {
  std::vector<std::vector<int>> out{{}};
  for (int l = 0; l < length; ++l) {
    std::vector<std::vector<int>> next;
    next.reserve(out.size() * n);
    for (const auto& w : out)
      for (int g = 0; g < n; ++g) {
        auto nw = w;
        nw.push_back(g);
        next.push_back(std::move(nw));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace testutil
