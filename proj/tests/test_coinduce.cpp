#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgal/builtin.hpp"
#include "qgal/coinduce.hpp"

using qgal::Character;
using qgal::CoeffPoly;
using qgal::CoinducedRep;
using qgal::NCElement;
using qgal::Presentation;
using qgal::Rat;
using qgal::rat;
using qgal::VSeries;

namespace {

constexpr int kI = 0, kP = 1, kH = 2, kN = 3;

CoeffPoly apow(long num, long den, int k) {
  return CoeffPoly::a_power(rat(num, den), k);
}

VSeries series(int order, std::vector<CoeffPoly> coeffs) {
  VSeries s(order);
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
    s.set_coeff(k, coeffs[k]);
  return s;
}

}  // namespace

TEST_CASE("truncated v-series arithmetic") {
  VSeries b = VSeries::basis(3, 1);
  CHECK(b.order() == 3);
  CHECK(b.coeff(0).is_zero());
  CHECK(b.coeff(1) == CoeffPoly(1));
  CHECK(!b.is_zero());
  CHECK(VSeries(3).is_zero());

  VSeries one = VSeries::basis(3, 0);
  VSeries s = one + b;            // 1 + v
  VSeries sq = s * s;             // 1 + 2v + v^2
  CHECK(sq.coeff(0) == CoeffPoly(1));
  CHECK(sq.coeff(1) == CoeffPoly(2));
  CHECK(sq.coeff(2) == CoeffPoly(1));
  CHECK(sq.coeff(3).is_zero());

  // The convolution truncates: at order 1 the v^2 term is clipped.
  VSeries s1 = s.truncated(1);
  VSeries sq1 = s1 * s1;
  CHECK(sq1.order() == 1);
  CHECK(sq1.coeff(1) == CoeffPoly(2));

  CHECK((sq - sq).is_zero());
  CHECK((-b + b).is_zero());

  VSeries cubed = VSeries::basis(3, 3);
  VSeries d = cubed.derivative();  // 3 v^2, same order
  CHECK(d.order() == 3);
  CHECK(d.coeff(2) == CoeffPoly(3));
  CHECK(d.coeff(3).is_zero());

  VSeries scaled = VSeries::constant(2, CoeffPoly(1) + apow(1, 1, 1));
  scaled.scale(apow(2, 1, 1));
  CHECK(scaled.coeff(0) == apow(2, 1, 1) + apow(2, 1, 2));
  CHECK(scaled.truncate_a(1).coeff(0) == apow(2, 1, 1));

  VSeries sym = VSeries::constant(1, CoeffPoly::var(CoeffPoly::Alpha, 2));
  CHECK(sym.substitute(CoeffPoly::Alpha, Rat(3)).coeff(0) == CoeffPoly(9));
}

TEST_CASE("numeric multipliers at alpha=2, beta=0, gamma=3") {
  auto uq = qgal::make_uq_presentation_bare(6);
  CoinducedRep rep =
      qgal::build_coinduced(*uq, Character{Rat(2), Rat(0), Rat(3)}, 4);

  CHECK(rep.multiplier(kI) ==
        series(4, {CoeffPoly(2), apow(4, 1, 1)}));
  CHECK(rep.multiplier(kP) ==
        series(4, {CoeffPoly(0), CoeffPoly(2), apow(-2, 1, 1), apow(8, 3, 2),
                   apow(-4, 1, 3)}));
  CHECK(rep.multiplier(kH) ==
        series(4, {CoeffPoly(3), CoeffPoly(0), CoeffPoly(1), apow(-2, 1, 1),
                   apow(4, 1, 2)}));
  CHECK(rep.grouplike_multiplier() ==
        series(4, {CoeffPoly(1), apow(-4, 1, 1), apow(12, 1, 2),
                   apow(-32, 1, 3), apow(80, 1, 4)}));

  // The boost generator acts as d/dv; the others multiply.
  VSeries v2 = VSeries::basis(4, 2);
  CHECK(rep.act_gen(kN, v2) == VSeries::basis(4, 1) + VSeries::basis(4, 1));
  CHECK(rep.act_gen(kH, rep.one()) == rep.multiplier(kH));

  // The character is read off at v = 0.
  CHECK(rep.multiplier(kI).coeff(0) == CoeffPoly(2));
  CHECK(rep.multiplier(kP).coeff(0) == CoeffPoly(0));
  CHECK(rep.multiplier(kH).coeff(0) == CoeffPoly(3));
}

TEST_CASE("symbolic multiplier slot formulas") {
  auto uq = qgal::make_uq_presentation_bare(6);
  CoinducedRep rep = qgal::build_coinduced(*uq, Character{}, 4);

  auto al = [](int n) { return CoeffPoly::var(CoeffPoly::Alpha, n); };
  auto ee = [](int n) { return CoeffPoly::var(CoeffPoly::E, n); };

  // I: alpha + a alpha^2 E v.
  CHECK(rep.multiplier(kI).coeff(0) == al(1));
  CHECK(rep.multiplier(kI).coeff(1) == apow(1, 1, 1) * al(2) * ee(1));
  for (int n = 2; n <= 4; ++n) CHECK(rep.multiplier(kI).coeff(n).is_zero());

  // P: beta at slot 0, then (-1)^(n+1) a^(n-1) alpha^n E^n / n.
  CHECK(rep.multiplier(kP).coeff(0) == CoeffPoly::var(CoeffPoly::Beta, 1));
  for (int n = 1; n <= 4; ++n) {
    long sign = (n % 2 == 0) ? -1 : 1;
    CHECK(rep.multiplier(kP).coeff(n) == apow(sign, n, n - 1) * al(n) * ee(n));
  }

  // H: gamma, the lone Laurent slot (1-E)/(2a), then
  // (-1)^n a^(n-2) alpha^(n-1) E^n / 2.
  CHECK(rep.multiplier(kH).coeff(0) == CoeffPoly::var(CoeffPoly::Gamma, 1));
  CHECK(rep.multiplier(kH).coeff(1) ==
        apow(1, 2, -1) - apow(1, 2, -1) * ee(1));
  for (int n = 2; n <= 4; ++n) {
    long sign = (n % 2 == 0) ? 1 : -1;
    CHECK(rep.multiplier(kH).coeff(n) ==
          apow(sign, 2, n - 2) * al(n - 1) * ee(n));
  }

  // Grouplike exponential of -2aP: slot n is (n+1)(-1)^n a^n alpha^n E^(n+1).
  for (int n = 0; n <= 4; ++n) {
    long sign = (n % 2 == 0) ? 1 : -1;
    CHECK(rep.grouplike_multiplier().coeff(n) ==
          apow(sign * (n + 1), 1, n) * al(n) * ee(n + 1));
  }
}

TEST_CASE("numeric multipliers are the symbolic ones specialized") {
  auto uq = qgal::make_uq_presentation_bare(6);
  CoinducedRep sym = qgal::build_coinduced(*uq, Character{}, 4);
  CoinducedRep num =
      qgal::build_coinduced(*uq, Character{Rat(2), Rat(0), Rat(3)}, 4);

  auto specialize = [](const VSeries& s) {
    // beta = 0 makes the grouplike symbol E collapse to 1 exactly.
    return s.substitute(CoeffPoly::Alpha, Rat(2))
        .substitute(CoeffPoly::Beta, Rat(0))
        .substitute(CoeffPoly::Gamma, Rat(3))
        .substitute(CoeffPoly::E, Rat(1));
  };
  for (int g : {kI, kP, kH})
    CHECK(specialize(sym.multiplier(g)) == num.multiplier(g));
  CHECK(specialize(sym.grouplike_multiplier()) == num.grouplike_multiplier());
}

TEST_CASE("nonzero beta keeps E symbolic; eliminating it tames the Laurent slot") {
  auto uq = qgal::make_uq_presentation_bare(7);
  CoinducedRep rep =
      qgal::build_coinduced(*uq, Character{Rat(1), rat(1, 2), Rat(-1)}, 3);

  // E abbreviates exp(-2a*beta); it is substituted away only at beta = 0, so
  // here it survives: slot 0 of the grouplike multiplier is the bare symbol.
  CHECK(rep.grouplike_multiplier().coeff(0) == CoeffPoly::var(CoeffPoly::E, 1));

  // Slot 1 of H is (1-E)/(2a), formally Laurent.  Feeding in the exponential
  // for E (here exp(-a), since beta = 1/2) cancels the pole and leaves the
  // genuine power series sum_{k>=1} (-1)^(k+1) a^(k-1) / (2 k!).
  CoeffPoly eseries(1);
  CoeffPoly expect;
  Rat fact(1);
  for (int k = 1; k <= 8; ++k) {
    fact *= k;
    eseries += apow((k % 2 == 0) ? 1 : -1, 1, k) * CoeffPoly(Rat(1) / fact);
    expect += apow((k % 2 == 0) ? -1 : 1, 1, k - 1) * CoeffPoly(Rat(1) / (2 * fact));
  }
  CoeffPoly slot = rep.multiplier(kH).coeff(1);
  CHECK(slot.has_negative_a());
  CoeffPoly tamed = slot.substitute_poly(CoeffPoly::E, eseries);
  CHECK(!tamed.has_negative_a());
  CHECK(tamed == expect);
}

TEST_CASE("operator relations hold at every order, symbolically") {
  for (int order = 2; order <= 5; ++order) {
    auto uq = qgal::make_uq_presentation_bare(order + 2);
    auto rep = qgal::check_rep_relations(*uq, Character{}, order);
    INFO("order ", order, "\n", rep.to_text());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("operator relations hold for numeric characters") {
  auto uq = qgal::make_uq_presentation_bare(7);
  for (const Character& chi :
       {Character{Rat(2), Rat(0), Rat(3)}, Character{Rat(1), rat(1, 2), Rat(-1)}}) {
    auto rep = qgal::check_rep_relations(*uq, chi, 5);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("classical degeneration of the coinduced action") {
  auto uq = qgal::make_uq_presentation_bare(6);
  auto rep = qgal::check_coinduced_classical_limit(*uq, 4);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}

TEST_CASE("acting with a product matches acting twice") {
  auto uq = qgal::make_uq_presentation_bare(6);
  CoinducedRep rep =
      qgal::build_coinduced(*uq, Character{Rat(2), Rat(0), Rat(3)}, 4);
  NCElement n_el = NCElement::gen(*uq, kN);
  NCElement p_el = NCElement::gen(*uq, kP);
  VSeries s = rep.one();
  // N*P normal-orders to P*N + I - 2a I P + ...; both routes must agree
  // below the top v-slot (the derivative cannot see past the truncation)
  // and below the a-order of the presentation.
  VSeries lhs = rep.act(n_el * p_el, s);
  VSeries rhs = rep.act_gen(kN, rep.act_gen(kP, s));
  CHECK(lhs.truncated(3).truncate_a(6) == rhs.truncated(3).truncate_a(6));
}
