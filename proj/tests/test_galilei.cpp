#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgal/builtin.hpp"
#include "qgal/galilei.hpp"
#include "qgal/pairing.hpp"

using qgal::CoeffPoly;
using qgal::NCElement;
using qgal::PairingContext;
using qgal::Presentation;
using qgal::Rat;
using qgal::rat;

namespace {

constexpr int kMu = 0, kX = 1, kT = 2, kV = 3;
constexpr int kI = 0, kP = 1, kH = 2, kN = 3;

}  // namespace

TEST_CASE("formal derivative, coordinate, and shift building blocks") {
  const Presentation& fq = qgal::fq_presentation();
  NCElement f = NCElement::monomial(fq, {0, 2, 0, 1});  // x^2 v

  CHECK(qgal::pderiv(f, kX) ==
        CoeffPoly(2) * NCElement::monomial(fq, {0, 1, 0, 1}));
  CHECK(qgal::pderiv(f, kT).is_zero());
  CHECK(qgal::barmul(f, kT) == NCElement::monomial(fq, {0, 2, 1, 1}));

  // shift x -> x + c expands binomially.
  NCElement shifted = qgal::shift_gen(f, kX, CoeffPoly(Rat(3)));
  NCElement expect = NCElement::monomial(fq, {0, 2, 0, 1}) +
                     CoeffPoly(6) * NCElement::monomial(fq, {0, 1, 0, 1}) +
                     CoeffPoly(9) * NCElement::monomial(fq, {0, 0, 0, 1});
  CHECK(shifted == expect);
  // Shifting back is the inverse.
  CHECK(qgal::shift_gen(shifted, kX, CoeffPoly(Rat(-3))) == f);
}

TEST_CASE("exact division by powers of a") {
  const Presentation& fq = qgal::fq_presentation();
  NCElement f = CoeffPoly::a_power(4, 2) * NCElement::gen(fq, kV);
  NCElement g = qgal::div_exact_a(f, 1, Rat(2));
  CHECK(g == CoeffPoly::a_power(2, 1) * NCElement::gen(fq, kV));
  CHECK_THROWS_AS(qgal::div_exact_a(NCElement::gen(fq, kV), 1, Rat(1)),
                  qgal::DivisibilityError);
  CHECK_THROWS_AS(qgal::div_exact_a(g, 2, Rat(1)), qgal::DivisibilityError);
}

TEST_CASE("closed-form actions on the lowest monomials") {
  const Presentation& fq = qgal::fq_presentation();
  NCElement mu = NCElement::gen(fq, kMu);
  NCElement x = NCElement::gen(fq, kX);
  NCElement one = NCElement::unit(fq);

  // Left action oracles.
  CHECK(qgal::act_left_closed(mu, kI) == one);
  CHECK(qgal::act_left_closed(mu, kP) == NCElement::gen(fq, kV));
  CHECK(qgal::act_left_closed(mu, kH) ==
        CoeffPoly(rat(1, 2)) * NCElement::monomial(fq, {0, 0, 0, 2}));
  CHECK(qgal::act_left_closed(x, kP) == one);
  CHECK(qgal::act_left_closed(one, kI).is_zero());
  CHECK(qgal::act_left_closed(one, kN).is_zero());

  // Right action oracle: x acted on by N from the right gives t.
  CHECK(qgal::act_right_closed(x, kN) == NCElement::gen(fq, kT));
  CHECK(qgal::act_right_closed(mu, kI) == one);
}

TEST_CASE("left actions compose like the opposite product") {
  // (u w) acting from the left equals u acting after w on a sample where the
  // deformation matters.
  const Presentation& fq = qgal::fq_presentation();
  const Presentation& uq = qgal::uq_presentation(4);
  PairingContext ctx(uq, qgal::fq_presentation());
  NCElement mu2 = NCElement::monomial(fq, {2, 0, 0, 0});
  NCElement n_el = NCElement::gen(uq, kN);
  NCElement p_el = NCElement::gen(uq, kP);
  NCElement lhs = qgal::act_left(ctx, n_el * p_el, mu2);
  NCElement rhs = qgal::act_left(ctx, n_el, qgal::act_left(ctx, p_el, mu2));
  CHECK(lhs == rhs);
}

TEST_CASE("closed forms agree with the pairing-defined actions") {
  // a-order 6 on degree <= 3 makes the truncation vacuous: the comparison is
  // exact over the polynomial ring in a.
  auto rep = qgal::check_differential_realization(6, 3);
  CHECK(rep.all_pass());
  INFO(rep.to_text());

  // And again at the default working order.
  CHECK(qgal::check_differential_realization(4, 2).all_pass());
}

TEST_CASE("classical limit of the closed-form actions") {
  auto rep = qgal::check_classical_limit(3);
  CHECK(rep.all_pass());
  INFO(rep.to_text());
}

TEST_CASE("deformation visibly enters the left actions") {
  const Presentation& fq = qgal::fq_presentation();
  NCElement mu2 = NCElement::monomial(fq, {2, 0, 0, 0});

  // Classically P acts on mu^2 as 2*mu*v; straightening v past mu injects the
  // quantum correction -a*v^2.
  NCElement expect = CoeffPoly(2) * NCElement::monomial(fq, {1, 0, 0, 1}) -
                     CoeffPoly::a_power(1, 1) * NCElement::monomial(fq, {0, 0, 0, 2});
  CHECK(qgal::act_left_closed(mu2, kP) == expect);

  // N acts from the left as the plain v-derivative, so no a appears there.
  NCElement nv2 = qgal::act_left_closed(NCElement::monomial(fq, {0, 0, 0, 2}), kN);
  CHECK(nv2 == CoeffPoly(2) * NCElement::gen(fq, kV));
  CHECK(qgal::act_left_closed(NCElement::gen(fq, kV), kN) == NCElement::unit(fq));
}
