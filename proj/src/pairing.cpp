#include "qgal/pairing.hpp"

#include <stdexcept>

#include "qgal/builtin.hpp"
#include "qgal/hopf.hpp"

namespace qgal {

namespace {

Monomial gen_mono(const Presentation& p, int g) {
  Monomial m(p.num_gens(), 0);
  m[g] = 1;
  return m;
}

// Largest weight carried by any (coefficient-term, monomial) pair.
int element_max_weight(const NCElement& e) {
  int w = 0;
  for (const auto& [m, c] : e.terms()) {
    int base = mono_weight(*e.pres(), m);
    for (const auto& [key, r] : c.terms())
      w = std::max(w, base + e.pres()->a_weight() * key[CoeffPoly::A]);
  }
  return w;
}

std::string witness(const std::string& label, const NCElement& e) {
  return label + " = " + e.to_string();
}

}  // namespace

void validate_homogeneity(const Presentation& p) {
  auto check_elem = [&](const NCElement& e, int expected,
                        const std::string& what) {
    if (e.is_zero()) return;
    auto w = homogeneous_weight(e);
    if (!w || *w != expected)
      throw std::logic_error("inhomogeneous " + what + " in presentation " +
                             p.name());
  };
  for (const auto& [key, rhs] : p.rules())
    check_elem(rhs, p.gen_weight(key.first) + p.gen_weight(key.second),
               "rewrite rule " + p.gen_name(key.first) + "*" +
                   p.gen_name(key.second));
  if (!p.has_structure_maps()) return;
  for (int g = 0; g < p.num_gens(); ++g) {
    int wg = p.gen_weight(g);
    for (const auto& [mm, c] : p.gen_coproduct(g).terms()) {
      int base = mono_weight(p, mm.first) + mono_weight(p, mm.second);
      for (const auto& [key, r] : c.terms())
        if (base + p.a_weight() * key[CoeffPoly::A] != wg)
          throw std::logic_error("inhomogeneous coproduct of " +
                                 p.gen_name(g));
    }
    for (const auto& [key, r] : p.gen_counit(g).terms())
      if (p.a_weight() * key[CoeffPoly::A] != wg)
        throw std::logic_error("inhomogeneous counit of " + p.gen_name(g));
    check_elem(p.gen_antipode(g), wg, "antipode of " + p.gen_name(g));
  }
}

PairingContext::PairingContext(const Presentation& uq, const Presentation& fq)
    : uq_(&uq), fq_(&fq) {
  if (uq.num_gens() != fq.num_gens())
    throw std::invalid_argument("pairing needs equally many generators");
  for (int g = 0; g < uq.num_gens(); ++g)
    if (uq.gen_weight(g) != fq.gen_weight(g))
      throw std::invalid_argument("pairing needs matching generator weights");
  validate_homogeneity(uq);
  validate_homogeneity(fq);
}

Rat PairingContext::norm(const Monomial& m) const {
  if (norm_override_) return norm_override_(m);
  Rat n = 1;
  for (int e : m) n *= factorial(e);
  return n;
}

CoeffPoly PairingContext::clip(CoeffPoly c) const {
  if (uq_->a_order()) c = c.truncate_a(*uq_->a_order());
  return c;
}

CoeffPoly PairingContext::pair_mono(const Monomial& u,
                                    const Monomial& f) const {
  if (u != f) return CoeffPoly(0);
  return CoeffPoly(norm(u));
}

CoeffPoly PairingContext::pair(const NCElement& u, const NCElement& f) const {
  CoeffPoly total(0);
  const auto& ft = f.terms();
  for (const auto& [m, cu] : u.terms()) {
    auto it = ft.find(m);
    if (it == ft.end()) continue;
    CoeffPoly term = cu * it->second;
    term *= norm(m);
    total += term;
  }
  return clip(total);
}

CoeffPoly PairingContext::pair(const Tensor2& u, const Tensor2& f) const {
  CoeffPoly total(0);
  const auto& ft = f.terms();
  for (const auto& [mm, cu] : u.terms()) {
    auto it = ft.find(mm);
    if (it == ft.end()) continue;
    CoeffPoly term = cu * it->second;
    term *= norm(mm.first) * norm(mm.second);
    total += term;
  }
  return clip(total);
}

Tensor2 derive_gen_coproduct(const PairingContext& ctx, int gen) {
  const Presentation& uq = ctx.uq();
  const Presentation& fq = ctx.fq();
  if (!uq.a_order())
    throw std::logic_error("structure derivation needs a finite a-order");
  int bound = uq.gen_weight(gen) + 2 * *uq.a_order();
  auto cands = enumerate_monomials_weighted(uq, bound);
  Monomial target = gen_mono(fq, gen);
  Tensor2 d = Tensor2::zero(uq);
  for (const auto& u1 : cands) {
    int w1 = mono_weight(uq, u1);
    NCElement f1 = NCElement::monomial(fq, u1);
    for (const auto& u2 : cands) {
      if (w1 + mono_weight(uq, u2) > bound) continue;
      NCElement prod = f1 * NCElement::monomial(fq, u2);
      CoeffPoly c = prod.coefficient(target);
      if (c.is_zero()) continue;
      c *= Rat(1) / (ctx.norm(u1) * ctx.norm(u2));
      d.add_term(u1, u2, c);
    }
  }
  return d;
}

CoeffPoly derive_gen_counit(const PairingContext& ctx, int gen) {
  return ctx.pair(NCElement::gen(ctx.uq(), gen),
                  NCElement::unit(ctx.fq()));
}

NCElement derive_gen_antipode(const PairingContext& ctx, int gen) {
  const Presentation& uq = ctx.uq();
  const Presentation& fq = ctx.fq();
  if (!uq.a_order())
    throw std::logic_error("structure derivation needs a finite a-order");
  int bound = uq.gen_weight(gen) + 2 * *uq.a_order();
  auto cands = enumerate_monomials_weighted(uq, bound);
  NCElement u = NCElement::gen(uq, gen);
  NCElement out = NCElement::zero(uq);
  for (const auto& b : cands) {
    NCElement sb = antipode(NCElement::monomial(fq, b));
    CoeffPoly c = ctx.pair(u, sb);
    if (c.is_zero()) continue;
    c *= Rat(1) / ctx.norm(b);
    out.add_term(b, c);
  }
  return out;
}

void derive_uq_structure(Presentation& uq, const Presentation& fq) {
  PairingContext ctx(uq, fq);
  std::vector<Tensor2> cops;
  std::vector<CoeffPoly> counits;
  std::vector<NCElement> antipodes;
  for (int g = 0; g < uq.num_gens(); ++g) {
    cops.push_back(derive_gen_coproduct(ctx, g));
    counits.push_back(derive_gen_counit(ctx, g));
    antipodes.push_back(derive_gen_antipode(ctx, g));
  }
  uq.set_structure_maps(std::move(cops), std::move(counits),
                        std::move(antipodes));
}

NCElement product_via_pairing(const PairingContext& ctx, const NCElement& f,
                              const NCElement& g) {
  const Presentation& uq = ctx.uq();
  const Presentation& fq = ctx.fq();
  int bound = element_max_weight(f) + element_max_weight(g);
  auto cands = enumerate_monomials_weighted(fq, bound);
  Tensor2 fxg = Tensor2::simple(f, g);
  NCElement out = NCElement::zero(fq);
  for (const auto& b : cands) {
    Tensor2 du = coproduct(NCElement::monomial(uq, b));
    CoeffPoly c = ctx.pair(du, fxg);
    if (c.is_zero()) continue;
    c *= Rat(1) / ctx.norm(b);
    out.add_term(b, c);
  }
  return out;
}

NCElement uq_product_via_pairing(const PairingContext& ctx, const NCElement& u,
                                 const NCElement& v) {
  const Presentation& uq = ctx.uq();
  const Presentation& fq = ctx.fq();
  if (!uq.a_order())
    throw std::logic_error(
        "enveloping product reconstruction needs a finite a-order");
  // Negative a-weight means a-dressed monomials of higher bare weight share
  // the product's degree, so the candidate window widens by two per a-order.
  int bound =
      element_max_weight(u) + element_max_weight(v) + 2 * *uq.a_order();
  auto cands = enumerate_monomials_weighted(uq, bound);
  Tensor2 uxv = Tensor2::simple(u, v);
  NCElement out = NCElement::zero(uq);
  for (const auto& b : cands) {
    Tensor2 df = coproduct(NCElement::monomial(fq, b));
    CoeffPoly c = ctx.pair(uxv, df);
    if (c.is_zero()) continue;
    c *= Rat(1) / ctx.norm(b);
    out.add_term(b, c);
  }
  return out;
}

NCElement act_left(const PairingContext& ctx, const NCElement& u,
                   const NCElement& f) {
  const Presentation& fq = ctx.fq();
  Tensor2 df = coproduct(f);
  NCElement out = NCElement::zero(fq);
  for (const auto& [mm, c] : df.terms()) {
    CoeffPoly val = ctx.pair(u, NCElement::monomial(fq, mm.second));
    if (val.is_zero()) continue;
    out.add_term(mm.first, ctx.clip(c * val));
  }
  return out;
}

NCElement act_right(const PairingContext& ctx, const NCElement& f,
                    const NCElement& u) {
  const Presentation& fq = ctx.fq();
  Tensor2 df = coproduct(f);
  NCElement out = NCElement::zero(fq);
  for (const auto& [mm, c] : df.terms()) {
    CoeffPoly val = ctx.pair(u, NCElement::monomial(fq, mm.first));
    if (val.is_zero()) continue;
    out.add_term(mm.second, ctx.clip(c * val));
  }
  return out;
}

Report verify_pairing_axioms(const PairingContext& ctx, int max_degree) {
  Report r("pairing axioms");
  const Presentation& uq = ctx.uq();
  const Presentation& fq = ctx.fq();
  auto umonos = enumerate_monomials(uq.num_gens(), max_degree);
  auto fmonos = enumerate_monomials(fq.num_gens(), max_degree);
  int md2 = std::max(1, max_degree - 1);
  auto umonos2 = enumerate_monomials(uq.num_gens(), md2);
  auto fmonos2 = enumerate_monomials(fq.num_gens(), md2);

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& u : umonos2) {
      NCElement ue = NCElement::monomial(uq, u);
      for (const auto& v : umonos2) {
        NCElement ve = NCElement::monomial(uq, v);
        NCElement uv = ue * ve;
        Tensor2 uxv = Tensor2::simple(ue, ve);
        for (const auto& f : fmonos) {
          ++cases;
          NCElement fe = NCElement::monomial(fq, f);
          if (!(ctx.pair(uv, fe) == ctx.pair(uxv, coproduct(fe)))) {
            ok = false;
            det = witness("u", ue) + ", " + witness("v", ve) + ", " +
                  witness("f", fe);
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    r.add("enveloping product pairs as the function coproduct", ok, cases,
          det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& f : fmonos2) {
      NCElement fe = NCElement::monomial(fq, f);
      for (const auto& g : fmonos2) {
        NCElement ge = NCElement::monomial(fq, g);
        NCElement fg = fe * ge;
        Tensor2 fxg = Tensor2::simple(fe, ge);
        for (const auto& u : umonos) {
          ++cases;
          NCElement uel = NCElement::monomial(uq, u);
          if (!(ctx.pair(uel, fg) == ctx.pair(coproduct(uel), fxg))) {
            ok = false;
            det = witness("u", uel) + ", " + witness("f", fe) + ", " +
                  witness("g", ge);
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    r.add("function product pairs as the enveloping coproduct", ok, cases,
          det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    NCElement one_u = NCElement::unit(uq);
    for (const auto& f : fmonos) {
      ++cases;
      NCElement fe = NCElement::monomial(fq, f);
      if (!(ctx.pair(one_u, fe) == ctx.clip(counit(fe)))) {
        ok = false;
        det = witness("f", fe);
        break;
      }
    }
    r.add("enveloping unit pairs as the function counit", ok, cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    NCElement one_f = NCElement::unit(fq);
    for (const auto& u : umonos) {
      ++cases;
      NCElement ue = NCElement::monomial(uq, u);
      if (!(ctx.pair(ue, one_f) == ctx.clip(counit(ue)))) {
        ok = false;
        det = witness("u", ue);
        break;
      }
    }
    r.add("function unit pairs as the enveloping counit", ok, cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& u : umonos) {
      NCElement ue = NCElement::monomial(uq, u);
      NCElement su = antipode(ue);
      for (const auto& f : fmonos) {
        ++cases;
        NCElement fe = NCElement::monomial(fq, f);
        if (!(ctx.pair(su, fe) == ctx.pair(ue, antipode(fe)))) {
          ok = false;
          det = witness("u", ue) + ", " + witness("f", fe);
          break;
        }
      }
      if (!ok) break;
    }
    r.add("antipodes are adjoint under the pairing", ok, cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& u : umonos) {
      ++cases;
      if (ctx.norm(u) == 0) {
        ok = false;
        det = witness("u", NCElement::monomial(uq, u));
        break;
      }
    }
    r.add("basis norms are nonzero (nondegeneracy)", ok, cases, det);
  }

  return r;
}

Report verify_uq_relations_via_pairing(const PairingContext& ctx) {
  Report r("enveloping relations under the pairing");
  const Presentation& uq = ctx.uq();
  const Presentation& fq = ctx.fq();
  if (!uq.a_order())
    throw std::logic_error("relation sweep needs a finite a-order");
  int K = *uq.a_order();
  for (int j = 0; j < uq.num_gens(); ++j)
    for (int i = 0; i < j; ++i) {
      int w = uq.gen_weight(j) + uq.gen_weight(i);
      auto fmonos = enumerate_monomials_weighted(fq, w + 2 * K);
      const NCElement& rhs = uq.rule(j, i);
      Tensor2 lhs_t = Tensor2::simple(NCElement::gen(uq, j),
                                      NCElement::gen(uq, i));
      bool ok = true;
      std::string det;
      long cases = 0;
      for (const auto& f : fmonos) {
        ++cases;
        NCElement fe = NCElement::monomial(fq, f);
        if (!(ctx.pair(lhs_t, coproduct(fe)) == ctx.pair(rhs, fe))) {
          ok = false;
          det = witness("f", fe);
          break;
        }
      }
      r.add("rule " + uq.gen_name(j) + "*" + uq.gen_name(i) +
                " agrees with its pairing functional",
            ok, cases, det);
    }
  return r;
}

Report check_module_laws(const PairingContext& ctx, int max_degree) {
  Report r("dual action module laws");
  const Presentation& uq = ctx.uq();
  const Presentation& fq = ctx.fq();
  auto umonos = enumerate_monomials(uq.num_gens(), max_degree);
  auto fmonos = enumerate_monomials(fq.num_gens(), max_degree);

  auto elem_u = [&](const Monomial& m) { return NCElement::monomial(uq, m); };
  auto elem_f = [&](const Monomial& m) { return NCElement::monomial(fq, m); };
  auto clip_elem = [&](const NCElement& e) {
    return uq.a_order() ? truncate_a(e, *uq.a_order()) : e;
  };

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& u : umonos)
      for (const auto& v : umonos) {
        NCElement uv = elem_u(u) * elem_u(v);
        for (const auto& f : fmonos) {
          ++cases;
          NCElement nested = act_left(ctx, elem_u(u),
                                      act_left(ctx, elem_u(v), elem_f(f)));
          if (!(nested == act_left(ctx, uv, elem_f(f)))) {
            ok = false;
            det = witness("u", elem_u(u)) + ", " + witness("v", elem_u(v)) +
                  ", " + witness("f", elem_f(f));
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    r.add("left action is associative", ok, cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& f : fmonos) {
      ++cases;
      if (!(act_left(ctx, NCElement::unit(uq), elem_f(f)) == elem_f(f)) ||
          !(act_right(ctx, elem_f(f), NCElement::unit(uq)) == elem_f(f))) {
        ok = false;
        det = witness("f", elem_f(f));
        break;
      }
    }
    r.add("unit acts as the identity on both sides", ok, cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& u : umonos) {
      Tensor2 du = coproduct(elem_u(u));
      for (const auto& f : fmonos) {
        for (const auto& g : fmonos) {
          ++cases;
          NCElement lhs = act_left(ctx, elem_u(u), elem_f(f) * elem_f(g));
          NCElement rhs = NCElement::zero(fq);
          for (const auto& [mm, c] : du.terms()) {
            NCElement piece =
                act_left(ctx, NCElement::monomial(uq, mm.first), elem_f(f)) *
                act_left(ctx, NCElement::monomial(uq, mm.second), elem_f(g));
            piece.scale(c);
            rhs += piece;
          }
          if (!(lhs == clip_elem(rhs))) {
            ok = false;
            det = witness("u", elem_u(u)) + ", " + witness("f", elem_f(f)) +
                  ", " + witness("g", elem_f(g));
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    r.add("left action respects the function product", ok, cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& u : umonos)
      for (const auto& v : umonos) {
        NCElement uv = elem_u(u) * elem_u(v);
        for (const auto& f : fmonos) {
          ++cases;
          NCElement nested = act_right(
              ctx, act_right(ctx, elem_f(f), elem_u(u)), elem_u(v));
          if (!(nested == act_right(ctx, elem_f(f), uv))) {
            ok = false;
            det = witness("u", elem_u(u)) + ", " + witness("v", elem_u(v)) +
                  ", " + witness("f", elem_f(f));
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    r.add("right action is associative", ok, cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& u : umonos) {
      Tensor2 du = coproduct(elem_u(u));
      for (const auto& f : fmonos) {
        for (const auto& g : fmonos) {
          ++cases;
          NCElement lhs = act_right(ctx, elem_f(f) * elem_f(g), elem_u(u));
          NCElement rhs = NCElement::zero(fq);
          for (const auto& [mm, c] : du.terms()) {
            NCElement piece =
                act_right(ctx, elem_f(f), NCElement::monomial(uq, mm.first)) *
                act_right(ctx, elem_f(g), NCElement::monomial(uq, mm.second));
            piece.scale(c);
            rhs += piece;
          }
          if (!(lhs == clip_elem(rhs))) {
            ok = false;
            det = witness("u", elem_u(u)) + ", " + witness("f", elem_f(f)) +
                  ", " + witness("g", elem_f(g));
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    r.add("right action respects the function product", ok, cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& u : umonos)
      for (const auto& v : umonos)
        for (const auto& f : fmonos) {
          ++cases;
          NCElement lr =
              act_right(ctx, act_left(ctx, elem_u(u), elem_f(f)), elem_u(v));
          NCElement rl =
              act_left(ctx, elem_u(u), act_right(ctx, elem_f(f), elem_u(v)));
          if (!(lr == rl)) {
            ok = false;
            det = witness("u", elem_u(u)) + ", " + witness("v", elem_u(v)) +
                  ", " + witness("f", elem_f(f));
            break;
          }
        }
    r.add("left and right actions commute", ok, cases, det);
  }

  return r;
}

Report reconcile_mk(const Presentation& uq) {
  Report r("grouplike-dressed generators");
  NCElement em = exp_aP(uq, -1);
  NCElement ep = exp_aP(uq, 1);
  NCElement gi = NCElement::gen(uq, uq.gen_index("I"));
  NCElement gn = NCElement::gen(uq, uq.gen_index("N"));
  NCElement m = em * gi;
  NCElement k = ep * gn;
  NCElement m_lit = em;
  NCElement m_ctrl = ep * gi;

  auto dressed = [&](const NCElement& z) {
    return Tensor2::simple(z, em) + Tensor2::simple(ep, z);
  };

  r.add("M = exp(-aP)*I matches its coproduct line",
        coproduct(m) == dressed(m), 1);
  r.add("M = exp(-aP)*I has counit 0", counit(m).is_zero(), 1);
  r.add("M = exp(-aP)*I has antipode -M", antipode(m) == -m, 1);

  r.add("K = exp(aP)*N matches its coproduct line",
        coproduct(k) == dressed(k), 1);
  r.add("K = exp(aP)*N has counit 0", counit(k).is_zero(), 1);
  {
    NCElement am = m;
    am.scale(CoeffPoly::a_power(1, 1));
    r.add("K = exp(aP)*N has antipode -K - a*M", antipode(k) == -k - am, 1);
  }

  r.add("literal M = exp(-aP) violates the coproduct line",
        !(coproduct(m_lit) == dressed(m_lit)), 1);
  r.add("literal M = exp(-aP) violates the counit line",
        !counit(m_lit).is_zero(), 1);
  r.add("literal M = exp(-aP) violates the antipode line",
        !(antipode(m_lit) == -m_lit), 1);
  r.add("sign-flipped control exp(aP)*I violates the coproduct line",
        !(coproduct(m_ctrl) == dressed(m_ctrl)), 1);

  return r;
}

}  // namespace qgal
