#include "qgal/builtin.hpp"

#include <map>
#include <mutex>

#include "qgal/pairing.hpp"
#include "qgal/rational.hpp"

namespace qgal {

namespace {

Monomial mono4(int e0, int e1, int e2, int e3) { return {e0, e1, e2, e3}; }

}  // namespace

std::unique_ptr<Presentation> make_fq_presentation() {
  auto p = std::make_unique<Presentation>(
      "Fq", std::vector<std::string>{"mu", "x", "t", "v"},
      std::vector<std::string>{"μ", "x", "t", "v"},
      std::vector<int>{3, 2, 1, 1}, std::nullopt);
  Presentation& pr = *p;

  auto mono = [&](int a, int b, int c, int d) {
    return NCElement::monomial(pr, mono4(a, b, c, d));
  };

  // x*mu -> mu*x + 2a mu
  {
    NCElement rhs = mono(1, 1, 0, 0);
    rhs += mono(1, 0, 0, 0).scale(CoeffPoly::a_power(2, 1));
    pr.set_rule(1, 0, rhs);
  }
  // t*mu -> mu*t
  pr.set_rule(2, 0, mono(1, 0, 1, 0));
  // t*x -> x*t
  pr.set_rule(2, 1, mono(0, 1, 1, 0));
  // v*mu -> mu*v - a v^2
  {
    NCElement rhs = mono(1, 0, 0, 1);
    rhs += mono(0, 0, 0, 2).scale(CoeffPoly::a_power(-1, 1));
    pr.set_rule(3, 0, rhs);
  }
  // v*x -> x*v - 2a v
  {
    NCElement rhs = mono(0, 1, 0, 1);
    rhs += mono(0, 0, 0, 1).scale(CoeffPoly::a_power(-2, 1));
    pr.set_rule(3, 1, rhs);
  }
  // v*t -> t*v
  pr.set_rule(3, 2, mono(0, 0, 1, 1));

  std::vector<Tensor2> cops;
  // coproduct(mu) = mu@1 + 1@mu + v@x + 1/2 v^2@t
  {
    Tensor2 d = Tensor2::zero(pr);
    d.add_term(mono4(1, 0, 0, 0), mono4(0, 0, 0, 0), CoeffPoly(1));
    d.add_term(mono4(0, 0, 0, 0), mono4(1, 0, 0, 0), CoeffPoly(1));
    d.add_term(mono4(0, 0, 0, 1), mono4(0, 1, 0, 0), CoeffPoly(1));
    d.add_term(mono4(0, 0, 0, 2), mono4(0, 0, 1, 0), CoeffPoly(rat(1, 2)));
    cops.push_back(d);
  }
  // coproduct(x) = x@1 + 1@x + v@t
  {
    Tensor2 d = Tensor2::zero(pr);
    d.add_term(mono4(0, 1, 0, 0), mono4(0, 0, 0, 0), CoeffPoly(1));
    d.add_term(mono4(0, 0, 0, 0), mono4(0, 1, 0, 0), CoeffPoly(1));
    d.add_term(mono4(0, 0, 0, 1), mono4(0, 0, 1, 0), CoeffPoly(1));
    cops.push_back(d);
  }
  // coproduct(t) = t@1 + 1@t, coproduct(v) = v@1 + 1@v
  for (int g : {2, 3}) {
    Tensor2 d = Tensor2::zero(pr);
    Monomial e(4, 0);
    e[g] = 1;
    d.add_term(e, mono4(0, 0, 0, 0), CoeffPoly(1));
    d.add_term(mono4(0, 0, 0, 0), e, CoeffPoly(1));
    cops.push_back(d);
  }

  std::vector<CoeffPoly> counits(4, CoeffPoly(0));

  std::vector<NCElement> antipodes;
  // antipode(mu) = -mu + x*v - 2a v - 1/2 t*v^2
  {
    NCElement s = -mono(1, 0, 0, 0);
    s += mono(0, 1, 0, 1);
    s += mono(0, 0, 0, 1).scale(CoeffPoly::a_power(-2, 1));
    s += mono(0, 0, 1, 2).scale(CoeffPoly(rat(-1, 2)));
    antipodes.push_back(s);
  }
  // antipode(x) = -x + t*v
  {
    NCElement s = -mono(0, 1, 0, 0);
    s += mono(0, 0, 1, 1);
    antipodes.push_back(s);
  }
  antipodes.push_back(-mono(0, 0, 1, 0));  // antipode(t) = -t
  antipodes.push_back(-mono(0, 0, 0, 1));  // antipode(v) = -v

  pr.set_structure_maps(std::move(cops), std::move(counits),
                        std::move(antipodes));
  pr.validate();
  return p;
}

std::unique_ptr<Presentation> make_uq_presentation_bare(int a_order) {
  if (a_order < 1)
    throw std::invalid_argument("enveloping algebra needs a-order >= 1");
  auto p = std::make_unique<Presentation>(
      "Uq", std::vector<std::string>{"I", "P", "H", "N"},
      std::vector<std::string>{"I", "P", "H", "N"},
      std::vector<int>{3, 2, 1, 1}, a_order);
  Presentation& pr = *p;
  pr.set_a_weight(-2);

  auto mono = [&](int a, int b, int c, int d) {
    return NCElement::monomial(pr, mono4(a, b, c, d));
  };

  // P*I -> I*P, H*I -> I*H, H*P -> P*H
  pr.set_rule(1, 0, mono(1, 1, 0, 0));
  pr.set_rule(2, 0, mono(1, 0, 1, 0));
  pr.set_rule(2, 1, mono(0, 1, 1, 0));

  // N*I -> I*N + a exp(-2aP) I^2
  //   series term k >= 0: a (-2a)^k / k! * I^2 P^k  (a-degree k+1 <= K).
  {
    NCElement rhs = mono(1, 0, 0, 1);
    for (int k = 0; k + 1 <= a_order; ++k) {
      Rat c = rat((k % 2 == 0) ? 1 : -1, 1);
      c *= Rat(mpz_class(1) << k);  // 2^k
      c /= factorial(k);
      rhs += mono(2, k, 0, 0).scale(CoeffPoly::a_power(c, k + 1));
    }
    pr.set_rule(3, 0, rhs);
  }
  // N*P -> P*N + exp(-2aP) I
  //   series term k >= 0: (-2a)^k / k! * I P^k.
  {
    NCElement rhs = mono(0, 1, 0, 1);
    for (int k = 0; k <= a_order; ++k) {
      Rat c = rat((k % 2 == 0) ? 1 : -1, 1);
      c *= Rat(mpz_class(1) << k);
      c /= factorial(k);
      rhs += mono(1, k, 0, 0).scale(CoeffPoly::a_power(c, k));
    }
    pr.set_rule(3, 1, rhs);
  }
  // N*H -> H*N + (1 - exp(-2aP)) / (2a)
  //   series term k >= 1: (-1)^{k+1} 2^{k-1} a^{k-1} / k! * P^k.
  {
    NCElement rhs = mono(0, 0, 1, 1);
    for (int k = 1; k - 1 <= a_order; ++k) {
      Rat c = rat((k % 2 == 1) ? 1 : -1, 1);
      c *= Rat(mpz_class(1) << (k - 1));
      c /= factorial(k);
      rhs += mono(0, k, 0, 0).scale(CoeffPoly::a_power(c, k - 1));
    }
    pr.set_rule(3, 2, rhs);
  }

  pr.validate();
  return p;
}

NCElement exp_aP(const Presentation& uq, const Rat& s) {
  if (!uq.a_order())
    throw std::invalid_argument("exp(s a P) needs a finite a-order");
  int gen_p = uq.gen_index("P");
  if (gen_p < 0) throw std::invalid_argument("presentation has no P");
  NCElement out = NCElement::zero(uq);
  for (int k = 0; k <= *uq.a_order(); ++k) {
    Monomial m(uq.num_gens(), 0);
    m[gen_p] = k;
    Rat c = 1;
    for (int i = 0; i < k; ++i) c *= s;
    c /= factorial(k);
    out.add_term(m, CoeffPoly::a_power(c, k));
  }
  return out;
}

const Presentation& fq_presentation() {
  static std::unique_ptr<Presentation> p = make_fq_presentation();
  return *p;
}

const Presentation& uq_presentation(int a_order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Presentation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(a_order);
  if (it == cache.end()) {
    auto p = make_uq_presentation_bare(a_order);
    derive_uq_structure(*p, fq_presentation());
    it = cache.emplace(a_order, std::move(p)).first;
  }
  return *it->second;
}

}  // namespace qgal
