#include "qgal/hopf.hpp"

#include <map>

namespace qgal {

namespace {

int last_gen(const Monomial& m) {
  for (int g = static_cast<int>(m.size()) - 1; g >= 0; --g)
    if (m[g] > 0) return g;
  return -1;
}

std::string clip(std::string s) {
  if (s.size() > 160) {
    s.resize(157);
    s += "...";
  }
  return s;
}

const Tensor2& mono_coproduct(const Presentation& p, const Monomial& m) {
  static std::map<const Presentation*, std::map<Monomial, Tensor2, MonoLess>>
      cache;
  auto& pc = cache[&p];
  auto it = pc.find(m);
  if (it != pc.end()) return it->second;
  Tensor2 result = Tensor2::unit(p);
  int g = last_gen(m);
  if (g >= 0) {
    Monomial head = m;
    head[g] -= 1;
    result = mono_coproduct(p, head) * p.gen_coproduct(g);
  }
  return cache[&p].emplace(m, std::move(result)).first->second;
}

const NCElement& mono_antipode(const Presentation& p, const Monomial& m) {
  static std::map<const Presentation*, std::map<Monomial, NCElement, MonoLess>>
      cache;
  auto& pc = cache[&p];
  auto it = pc.find(m);
  if (it != pc.end()) return it->second;
  NCElement result = NCElement::unit(p);
  int g = last_gen(m);
  if (g >= 0) {
    Monomial head = m;
    head[g] -= 1;
    result = p.gen_antipode(g) * mono_antipode(p, head);
  }
  return cache[&p].emplace(m, std::move(result)).first->second;
}

}  // namespace

Tensor2 coproduct(const NCElement& e) {
  const Presentation& p = *e.pres();
  Tensor2 out = Tensor2::zero(p);
  for (const auto& [m, c] : e.terms()) {
    Tensor2 d = mono_coproduct(p, m);
    d.scale(c);
    out += d;
  }
  return out;
}

CoeffPoly counit(const NCElement& e) {
  const Presentation& p = *e.pres();
  CoeffPoly total(0);
  for (const auto& [m, c] : e.terms()) {
    CoeffPoly f(1);
    for (int g = 0; g < p.num_gens() && !f.is_zero(); ++g)
      for (int k = 0; k < m[g] && !f.is_zero(); ++k)
        f = f * p.gen_counit(g);
    total += c * f;
  }
  if (p.a_order()) total = total.truncate_a(*p.a_order());
  return total;
}

NCElement antipode(const NCElement& e) {
  const Presentation& p = *e.pres();
  NCElement out = NCElement::zero(p);
  for (const auto& [m, c] : e.terms()) {
    NCElement s = mono_antipode(p, m);
    s.scale(c);
    out += s;
  }
  return out;
}

Tensor3 coproduct_left(const Tensor2& t) {
  const Presentation& p = *t.pres();
  Tensor3 out = Tensor3::zero(p);
  for (const auto& [mm, c] : t.terms()) {
    const Tensor2& d = mono_coproduct(p, mm.first);
    for (const auto& [nn, e] : d.terms())
      out.add_term({nn.first, nn.second, mm.second}, c * e);
  }
  return out;
}

Tensor3 coproduct_right(const Tensor2& t) {
  const Presentation& p = *t.pres();
  Tensor3 out = Tensor3::zero(p);
  for (const auto& [mm, c] : t.terms()) {
    const Tensor2& d = mono_coproduct(p, mm.second);
    for (const auto& [nn, e] : d.terms())
      out.add_term({mm.first, nn.first, nn.second}, c * e);
  }
  return out;
}

NCElement convolve_antipode_left(const NCElement& e) {
  const Presentation& p = *e.pres();
  Tensor2 d = coproduct(e);
  NCElement out = NCElement::zero(p);
  for (const auto& [mm, c] : d.terms()) {
    NCElement prod = mono_antipode(p, mm.first) *
                     NCElement::monomial(p, mm.second);
    prod.scale(c);
    out += prod;
  }
  return out;
}

NCElement convolve_antipode_right(const NCElement& e) {
  const Presentation& p = *e.pres();
  Tensor2 d = coproduct(e);
  NCElement out = NCElement::zero(p);
  for (const auto& [mm, c] : d.terms()) {
    NCElement prod = NCElement::monomial(p, mm.first) *
                     mono_antipode(p, mm.second);
    prod.scale(c);
    out += prod;
  }
  return out;
}

Report check_hopf_axioms(const Presentation& p, int max_degree) {
  Report r("hopf axioms on " + p.name());
  auto monos = enumerate_monomials(p.num_gens(), max_degree);

  {
    bool ok = true;
    std::string detail;
    for (const auto& m : monos) {
      const Tensor2& d = mono_coproduct(p, m);
      if (!(coproduct_left(d) == coproduct_right(d))) {
        ok = false;
        detail = "witness " + NCElement::monomial(p, m).to_string();
        break;
      }
    }
    r.add("coassociativity", ok, static_cast<long>(monos.size()), detail);
  }

  for (int side = 0; side < 2; ++side) {
    bool ok = true;
    std::string detail;
    for (const auto& m : monos) {
      const Tensor2& d = mono_coproduct(p, m);
      NCElement folded = NCElement::zero(p);
      for (const auto& [mm, c] : d.terms()) {
        const Monomial& scalar_slot = (side == 0) ? mm.first : mm.second;
        const Monomial& keep_slot = (side == 0) ? mm.second : mm.first;
        CoeffPoly eps = counit(NCElement::monomial(p, scalar_slot));
        folded += NCElement::monomial(p, keep_slot).scale(c * eps);
      }
      if (!(folded == NCElement::monomial(p, m))) {
        ok = false;
        detail = "witness " + NCElement::monomial(p, m).to_string();
        break;
      }
    }
    r.add(side == 0 ? "counit law (left)" : "counit law (right)", ok,
          static_cast<long>(monos.size()), detail);
  }

  for (int side = 0; side < 2; ++side) {
    bool ok = true;
    std::string detail;
    for (const auto& m : monos) {
      NCElement mono = NCElement::monomial(p, m);
      NCElement conv = (side == 0) ? convolve_antipode_left(mono)
                                   : convolve_antipode_right(mono);
      NCElement expect = NCElement::unit(p).scale(counit(mono));
      if (!(conv == expect)) {
        ok = false;
        detail = "witness " + mono.to_string() + ", got " +
                 clip(conv.to_string());
        break;
      }
    }
    r.add(side == 0 ? "antipode law (left)" : "antipode law (right)", ok,
          static_cast<long>(monos.size()), detail);
  }

  {
    bool dok = true, eok = true, sok = true;
    std::string ddet, edet, sdet;
    long pairs = 0;
    for (int j = 0; j < p.num_gens(); ++j)
      for (int i = 0; i < j; ++i) {
        ++pairs;
        const NCElement& rhs = p.rule(j, i);
        std::string pair_name =
            p.gen_name(j) + "*" + p.gen_name(i);
        Tensor2 lhs_d = p.gen_coproduct(j) * p.gen_coproduct(i);
        if (dok && !(lhs_d == coproduct(rhs))) {
          dok = false;
          ddet = "rule " + pair_name;
        }
        CoeffPoly lhs_e = p.gen_counit(j) * p.gen_counit(i);
        if (p.a_order()) lhs_e = lhs_e.truncate_a(*p.a_order());
        if (eok && !(lhs_e == counit(rhs))) {
          eok = false;
          edet = "rule " + pair_name;
        }
        NCElement lhs_s = p.gen_antipode(i) * p.gen_antipode(j);
        if (sok && !(lhs_s == antipode(rhs))) {
          sok = false;
          sdet = "rule " + pair_name;
        }
      }
    r.add("coproduct respects rewrite rules", dok, pairs, ddet);
    r.add("counit respects rewrite rules", eok, pairs, edet);
    r.add("antipode respects rewrite rules", sok, pairs, sdet);
  }

  return r;
}

CocommutativityResult check_cocommutativity(const Presentation& p,
                                            int max_degree) {
  auto monos = enumerate_monomials(p.num_gens(), max_degree, 1);
  for (const auto& m : monos) {
    const Tensor2& d = mono_coproduct(p, m);
    if (!(d == d.twist()))
      return {false, NCElement::monomial(p, m).to_string()};
  }
  return {true, ""};
}

}  // namespace qgal
