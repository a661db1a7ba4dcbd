#include "qgal/galilei.hpp"

#include "qgal/builtin.hpp"
#include "qgal/pairing.hpp"
#include "qgal/rational.hpp"

namespace qgal {

namespace {

// Function-algebra coordinate indices.
constexpr int kMu = 0;
constexpr int kX = 1;
constexpr int kT = 2;
constexpr int kV = 3;

// Enveloping generator indices.
constexpr int kI = 0;
constexpr int kP = 1;
constexpr int kH = 2;
constexpr int kN = 3;

// exp(-2a d/dx): x^q -> (x - 2a)^q.
NCElement shift_x(const NCElement& f) {
  return shift_gen(f, kX, CoeffPoly::a_power(-2, 1));
}

// X = a vbar (d/dmu) exp(-2a d/dx); locally nilpotent (drops mu-degree).
NCElement apply_x_op(const NCElement& f) {
  NCElement g = barmul(pderiv(shift_x(f), kMu), kV);
  g.scale(CoeffPoly::a_power(1, 1));
  return g;
}

// ln(1 + X) f, term by term until X^k f vanishes.
NCElement ln1p_x_op(const NCElement& f) {
  NCElement total = NCElement::zero(*f.pres());
  NCElement xk = f;
  for (int k = 1;; ++k) {
    xk = apply_x_op(xk);
    if (xk.is_zero()) break;
    NCElement term = xk;
    term.scale(CoeffPoly(rat(k % 2 == 1 ? 1 : -1, k)));
    total += term;
  }
  return total;
}

// (1 + X)^{-1} f = sum (-X)^k f.
NCElement inv1p_x_op(const NCElement& f) {
  NCElement total = f;
  NCElement xk = f;
  for (int k = 1;; ++k) {
    xk = apply_x_op(xk);
    if (xk.is_zero()) break;
    NCElement term = xk;
    if (k % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

NCElement pderiv(const NCElement& f, int gen) {
  NCElement out = NCElement::zero(*f.pres());
  for (const auto& [m, c] : f.terms()) {
    if (m[gen] == 0) continue;
    Monomial n = m;
    n[gen] -= 1;
    CoeffPoly d = c;
    d *= Rat(m[gen]);
    out.add_term(n, d);
  }
  return out;
}

NCElement barmul(const NCElement& f, int gen) {
  NCElement out = NCElement::zero(*f.pres());
  for (const auto& [m, c] : f.terms()) {
    Monomial n = m;
    n[gen] += 1;
    out.add_term(n, c);
  }
  return out;
}

NCElement shift_gen(const NCElement& f, int gen, const CoeffPoly& delta) {
  NCElement out = NCElement::zero(*f.pres());
  for (const auto& [m, c] : f.terms()) {
    int q = m[gen];
    for (int j = 0; j <= q; ++j) {
      Monomial n = m;
      n[gen] = j;
      CoeffPoly d = c * delta.pow(q - j);
      d *= binomial(q, j);
      out.add_term(n, d);
    }
  }
  return out;
}

NCElement div_exact_a(const NCElement& f, int k, const Rat& denom) {
  NCElement out = NCElement::zero(*f.pres());
  for (const auto& [m, c] : f.terms()) {
    CoeffPoly d = c.shift_a(-k);
    if (d.has_negative_a())
      throw DivisibilityError("expression not divisible by a^" +
                              std::to_string(k));
    d *= Rat(1) / denom;
    out.add_term(m, d);
  }
  return out;
}

NCElement act_left_closed(const NCElement& f, int uq_gen) {
  switch (uq_gen) {
    case kI: {
      NCElement d = pderiv(f, kMu);
      return d + apply_x_op(d);
    }
    case kP:
      return pderiv(f, kX) + div_exact_a(ln1p_x_op(f), 1, 1);
    case kH: {
      NCElement inner = f - shift_x(inv1p_x_op(f));
      return pderiv(f, kT) + barmul(div_exact_a(inner, 1, 2), kV);
    }
    case kN:
      return pderiv(f, kV);
    default:
      throw std::invalid_argument("unknown enveloping generator index");
  }
}

NCElement act_right_closed(const NCElement& f, int uq_gen) {
  switch (uq_gen) {
    case kI:
      return pderiv(f, kMu);
    case kP:
      return pderiv(f, kX);
    case kH:
      return pderiv(f, kT);
    case kN: {
      NCElement d1 = pderiv(f, kMu);
      NCElement d2 = pderiv(d1, kMu);
      NCElement term1 = barmul(shift_x(d2), kMu);
      term1.scale(CoeffPoly::a_power(1, 1));
      NCElement term2 = barmul(shift_x(d1), kX);
      NCElement term3 = barmul(div_exact_a(f - shift_x(f), 1, 2), kT);
      return pderiv(f, kV) + term1 + term2 + term3;
    }
    default:
      throw std::invalid_argument("unknown enveloping generator index");
  }
}

Report check_differential_realization(int a_order, int max_degree) {
  Report r("closed-form actions against the pairing");
  const Presentation& fq = fq_presentation();
  const Presentation& uq = uq_presentation(a_order);
  PairingContext ctx(uq, fq);
  auto monos = enumerate_monomials(fq.num_gens(), max_degree);

  for (int g = 0; g < uq.num_gens(); ++g) {
    NCElement ug = NCElement::gen(uq, g);
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& m : monos) {
      ++cases;
      NCElement f = NCElement::monomial(fq, m);
      NCElement closed = truncate_a(act_left_closed(f, g), a_order);
      if (!(closed == act_left(ctx, ug, f))) {
        ok = false;
        det = "f = " + f.to_string();
        break;
      }
    }
    r.add("left action of " + uq.gen_name(g) + " matches the pairing", ok,
          cases, det);
  }

  for (int g = 0; g < uq.num_gens(); ++g) {
    NCElement ug = NCElement::gen(uq, g);
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& m : monos) {
      ++cases;
      NCElement f = NCElement::monomial(fq, m);
      NCElement closed = truncate_a(act_right_closed(f, g), a_order);
      if (!(closed == act_right(ctx, f, ug))) {
        ok = false;
        det = "f = " + f.to_string();
        break;
      }
    }
    r.add("right action of " + uq.gen_name(g) + " matches the pairing", ok,
          cases, det);
  }

  {
    bool ok = true;
    std::string det;
    long cases = 0;
    auto deep = enumerate_monomials(fq.num_gens(), max_degree + 2);
    for (const auto& m : deep) {
      ++cases;
      NCElement f = NCElement::monomial(fq, m);
      NCElement ab = barmul(pderiv(shift_x(f), kMu), kV);
      NCElement ba = shift_x(pderiv(barmul(f, kV), kMu));
      NCElement ca = pderiv(shift_x(barmul(f, kV)), kMu);
      if (!(ab == ba) || !(ab == ca)) {
        ok = false;
        det = "f = " + f.to_string();
        break;
      }
    }
    r.add("shift, derivative and coordinate factors commute", ok, cases, det);
  }

  return r;
}

Report check_classical_limit(int max_degree) {
  Report r("classical limits of the closed-form actions");
  const Presentation& fq = fq_presentation();
  auto monos = enumerate_monomials(fq.num_gens(), max_degree);

  auto at_zero = [&](const NCElement& e) {
    NCElement out = NCElement::zero(fq);
    for (const auto& [m, c] : e.terms())
      out.add_term(m, c.substitute(CoeffPoly::A, 0));
    return out;
  };

  // Classical left vector fields.
  auto classical_left = [&](const NCElement& f, int g) {
    switch (g) {
      case kI:
        return pderiv(f, kMu);
      case kP:
        return pderiv(f, kX) + barmul(pderiv(f, kMu), kV);
      case kH: {
        NCElement half_vv = barmul(barmul(pderiv(f, kMu), kV), kV);
        half_vv.scale(CoeffPoly(rat(1, 2)));
        return pderiv(f, kT) + barmul(pderiv(f, kX), kV) + half_vv;
      }
      default:
        return pderiv(f, kV);
    }
  };
  // Classical right vector fields.
  auto classical_right = [&](const NCElement& f, int g) {
    switch (g) {
      case kI:
        return pderiv(f, kMu);
      case kP:
        return pderiv(f, kX);
      case kH:
        return pderiv(f, kT);
      default:
        return pderiv(f, kV) + barmul(pderiv(f, kMu), kX) +
               barmul(pderiv(f, kX), kT);
    }
  };

  const Presentation& uq = uq_presentation();
  for (int g = 0; g < 4; ++g) {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& m : monos) {
      ++cases;
      NCElement f = NCElement::monomial(fq, m);
      if (!(at_zero(act_left_closed(f, g)) == classical_left(f, g))) {
        ok = false;
        det = "f = " + f.to_string();
        break;
      }
    }
    r.add("left action of " + uq.gen_name(g) +
              " degenerates to its classical vector field",
          ok, cases, det);
  }
  for (int g = 0; g < 4; ++g) {
    bool ok = true;
    std::string det;
    long cases = 0;
    for (const auto& m : monos) {
      ++cases;
      NCElement f = NCElement::monomial(fq, m);
      if (!(at_zero(act_right_closed(f, g)) == classical_right(f, g))) {
        ok = false;
        det = "f = " + f.to_string();
        break;
      }
    }
    r.add("right action of " + uq.gen_name(g) +
              " degenerates to its classical vector field",
          ok, cases, det);
  }

  return r;
}

}  // namespace qgal
