#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgal/builtin.hpp"
#include "qgal/hopf.hpp"

using qgal::CoeffPoly;
using qgal::NCElement;
using qgal::Presentation;
using qgal::Rat;
using qgal::rat;
using qgal::Tensor2;

namespace {

constexpr int kMu = 0, kX = 1, kT = 2, kV = 3;
constexpr int kI = 0, kP = 1, kH = 2, kN = 3;

Tensor2 primitive(const Presentation& p, int gen) {
  NCElement g = NCElement::gen(p, gen);
  NCElement one = NCElement::unit(p);
  return Tensor2::simple(g, one) + Tensor2::simple(one, g);
}

}  // namespace

TEST_CASE("function-side coproducts match their closed forms") {
  const Presentation& fq = qgal::fq_presentation();
  NCElement one = NCElement::unit(fq);
  NCElement mu = NCElement::gen(fq, kMu);
  NCElement x = NCElement::gen(fq, kX);
  NCElement t = NCElement::gen(fq, kT);
  NCElement v = NCElement::gen(fq, kV);

  CHECK(fq.gen_coproduct(kT) == primitive(fq, kT));
  CHECK(fq.gen_coproduct(kV) == primitive(fq, kV));

  Tensor2 dx = primitive(fq, kX) + Tensor2::simple(v, t);
  CHECK(fq.gen_coproduct(kX) == dx);

  Tensor2 dmu = primitive(fq, kMu) + Tensor2::simple(v, x);
  Tensor2 half_vvt = Tensor2::simple(v * v, t);
  half_vvt.scale(CoeffPoly(rat(1, 2)));
  dmu += half_vvt;
  CHECK(fq.gen_coproduct(kMu) == dmu);

  // Counits vanish on all generators.
  for (int g = 0; g < 4; ++g) CHECK(fq.gen_counit(g).is_zero());

  // Antipodes.
  CHECK(fq.gen_antipode(kT) == -t);
  CHECK(fq.gen_antipode(kV) == -v);
  CHECK(fq.gen_antipode(kX) == -x + t * v);
  NCElement smu = -mu + x * v - CoeffPoly::a_power(2, 1) * v -
                  CoeffPoly(rat(1, 2)) * (t * v * v);
  CHECK(fq.gen_antipode(kMu) == smu);

  // Multiplicative extension: counit of the unit is 1, coproduct of 1.
  CHECK(qgal::counit(one) == CoeffPoly(1));
  CHECK(qgal::coproduct(one) == Tensor2::unit(fq));
  CHECK(qgal::antipode(one) == one);
}

TEST_CASE("coproduct is an algebra morphism on a deformed product") {
  const Presentation& fq = qgal::fq_presentation();
  NCElement mu = NCElement::gen(fq, kMu);
  NCElement x = NCElement::gen(fq, kX);
  // Delta(x * mu) = Delta(x) * Delta(mu), straightened slotwise.
  CHECK(qgal::coproduct(x * mu) == qgal::coproduct(x) * qgal::coproduct(mu));
}

TEST_CASE("antipode convolutions collapse to the counit on samples") {
  const Presentation& fq = qgal::fq_presentation();
  for (int g = 0; g < 4; ++g) {
    NCElement e = NCElement::gen(fq, g);
    // Generators have counit 0.
    CHECK(qgal::convolve_antipode_left(e).is_zero());
    CHECK(qgal::convolve_antipode_right(e).is_zero());
  }
  NCElement mu2 = NCElement::gen(fq, kMu).pow(2);
  CHECK(qgal::convolve_antipode_left(mu2).is_zero());
}

TEST_CASE("full axiom battery on the function side, degree 4, exact") {
  const Presentation& fq = qgal::fq_presentation();
  REQUIRE(!fq.a_order());  // exact coefficients
  auto rep = qgal::check_hopf_axioms(fq, 4);
  CHECK(rep.all_pass());
  INFO(rep.to_text());
}

TEST_CASE("derived enveloping structure matches its closed forms") {
  const Presentation& uq = qgal::uq_presentation(4);
  REQUIRE(uq.has_structure_maps());
  NCElement one = NCElement::unit(uq);
  NCElement i_el = NCElement::gen(uq, kI);
  NCElement n_el = NCElement::gen(uq, kN);

  // P and H stay primitive even after deformation.
  CHECK(uq.gen_coproduct(kP) == primitive(uq, kP));
  CHECK(uq.gen_coproduct(kH) == primitive(uq, kH));

  // Delta I = I (x) 1 + exp(2aP) (x) I.
  Tensor2 di = Tensor2::simple(i_el, one) +
               Tensor2::simple(qgal::exp_aP(uq, Rat(2)), i_el);
  CHECK(uq.gen_coproduct(kI) == di);

  // Delta N = 1 (x) N + N (x) exp(-2aP).
  Tensor2 dn = Tensor2::simple(one, n_el) +
               Tensor2::simple(n_el, qgal::exp_aP(uq, Rat(-2)));
  CHECK(uq.gen_coproduct(kN) == dn);

  for (int g = 0; g < 4; ++g) CHECK(uq.gen_counit(g).is_zero());

  // S(I) = -exp(-2aP) I, S(P) = -P, S(H) = -H,
  // S(N) = -exp(2aP) N - 2a I.
  CHECK(uq.gen_antipode(kP) == -NCElement::gen(uq, kP));
  CHECK(uq.gen_antipode(kH) == -NCElement::gen(uq, kH));
  CHECK(uq.gen_antipode(kI) == -(qgal::exp_aP(uq, Rat(-2)) * i_el));
  CHECK(uq.gen_antipode(kN) ==
        -(qgal::exp_aP(uq, Rat(2)) * n_el) -
            CoeffPoly::a_power(2, 1) * i_el);
}

TEST_CASE("full axiom battery on the enveloping side, degree 3, mod a^5") {
  const Presentation& uq = qgal::uq_presentation(4);
  auto rep = qgal::check_hopf_axioms(uq, 3);
  CHECK(rep.all_pass());
  INFO(rep.to_text());
}

TEST_CASE("cocommutativity probe finds the deformation witnesses") {
  const Presentation& fq = qgal::fq_presentation();
  auto res = qgal::check_cocommutativity(fq, 1);
  CHECK(!res.cocommutative);
  CHECK(!res.witness.empty());

  const Presentation& uq = qgal::uq_presentation(4);
  auto res2 = qgal::check_cocommutativity(uq, 1);
  CHECK(!res2.cocommutative);
}

TEST_CASE("a mutated coproduct is caught by the axiom battery") {
  auto fq = qgal::make_fq_presentation();
  std::vector<Tensor2> cops;
  std::vector<CoeffPoly> cous;
  std::vector<NCElement> antis;
  for (int g = 0; g < 4; ++g) {
    cops.push_back(fq->gen_coproduct(g));
    cous.push_back(fq->gen_counit(g));
    antis.push_back(fq->gen_antipode(g));
  }
  // Drop the v (x) t tail of Delta x.
  cops[kX] = primitive(*fq, kX);
  fq->set_structure_maps(cops, cous, antis);

  auto rep = qgal::check_hopf_axioms(*fq, 2);
  CHECK(!rep.all_pass());
  bool antipode_failed = false;
  for (const auto& c : rep.checks())
    if (!c.pass && c.name.find("antipode") != std::string::npos)
      antipode_failed = true;
  CHECK(antipode_failed);
}
