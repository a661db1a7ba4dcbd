#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgal/builtin.hpp"
#include "qgal/ncelement.hpp"
#include "qgal/presentation.hpp"
#include "testutil.hpp"

using qgal::CoeffPoly;
using qgal::Monomial;
using qgal::NCElement;
using qgal::Presentation;
using qgal::Rat;
using qgal::rat;

namespace {

constexpr int kMu = 0, kX = 1, kT = 2, kV = 3;
constexpr int kI = 0, kP = 1, kH = 2, kN = 3;

CoeffPoly apow(const Rat& c, int k) { return CoeffPoly::a_power(c, k); }

}  // namespace

TEST_CASE("monomial order and enumeration") {
  // Graded order: higher total degree first.
  qgal::MonoLess less;
  CHECK(less(Monomial{2, 0, 0, 0}, Monomial{1, 0, 0, 0}));
  CHECK(!less(Monomial{1, 0, 0, 0}, Monomial{2, 0, 0, 0}));

  auto monos = qgal::enumerate_monomials(4, 4);
  CHECK(monos.size() == 70);  // all degrees 0..4 in four generators
  CHECK(qgal::enumerate_monomials(4, 4, 1).size() == 69);
  CHECK(qgal::enumerate_monomials(4, 3).size() == 35);
  CHECK(qgal::enumerate_monomials(4, 3, 1).size() == 34);
  for (const auto& m : monos) CHECK(qgal::mono_degree(m) <= 4);
}

TEST_CASE("weighted enumeration respects the grading") {
  const Presentation& fq = qgal::fq_presentation();
  auto weighted = qgal::enumerate_monomials_weighted(fq, 3);
  // Weights (mu, x, t, v) = (3, 2, 1, 1): weight <= 3 admits
  // 1; t; v; t^2; t*v; v^2; t^3; t^2 v; t v^2; v^3; x; x*t; x*v; mu.
  CHECK(weighted.size() == 14);
  for (const auto& m : weighted) CHECK(qgal::mono_weight(fq, m) <= 3);
}

TEST_CASE("function-side straightening rules") {
  const Presentation& fq = qgal::fq_presentation();

  // x * mu = mu x + 2a mu.
  NCElement xmu = NCElement::gen(fq, kX) * NCElement::gen(fq, kMu);
  NCElement expect = NCElement::monomial(fq, {1, 1, 0, 0}) +
                     NCElement::monomial(fq, {1, 0, 0, 0}, apow(2, 1));
  CHECK(xmu == expect);

  // v * mu = mu v - a v^2.
  NCElement vmu = NCElement::gen(fq, kV) * NCElement::gen(fq, kMu);
  CHECK(vmu == NCElement::monomial(fq, {1, 0, 0, 1}) +
                   NCElement::monomial(fq, {0, 0, 0, 2}, apow(-1, 1)));

  // v * x = x v - 2a v.
  NCElement vx = NCElement::gen(fq, kV) * NCElement::gen(fq, kX);
  CHECK(vx == NCElement::monomial(fq, {0, 1, 0, 1}) +
                  NCElement::monomial(fq, {0, 0, 0, 1}, apow(-2, 1)));

  // t is central: t * mu = mu t, t * x = x t, v * t = t v.
  CHECK(NCElement::gen(fq, kT) * NCElement::gen(fq, kMu) ==
        NCElement::monomial(fq, {1, 0, 1, 0}));
  CHECK(NCElement::gen(fq, kT) * NCElement::gen(fq, kX) ==
        NCElement::monomial(fq, {0, 1, 1, 0}));
  CHECK(NCElement::gen(fq, kV) * NCElement::gen(fq, kT) ==
        NCElement::monomial(fq, {0, 0, 1, 1}));
}

TEST_CASE("enveloping-side straightening rules carry the deformation series") {
  auto uq = qgal::make_uq_presentation_bare(3);

  // N * P = P N + exp(-2aP) I  with the series truncated at a^3.
  NCElement np = NCElement::gen(*uq, kN) * NCElement::gen(*uq, kP);
  NCElement expect = NCElement::monomial(*uq, {0, 1, 0, 1});
  expect += NCElement::monomial(*uq, {1, 0, 0, 0});             // I
  expect += NCElement::monomial(*uq, {1, 1, 0, 0}, apow(-2, 1));  // -2a I P
  expect += NCElement::monomial(*uq, {1, 2, 0, 0}, apow(2, 2));   // 2a^2 I P^2
  expect +=
      NCElement::monomial(*uq, {1, 3, 0, 0}, apow(rat(-4, 3), 3));
  CHECK(np == expect);

  // N * I = I N + a exp(-2aP) I^2.
  NCElement ni = NCElement::gen(*uq, kN) * NCElement::gen(*uq, kI);
  NCElement expect2 = NCElement::monomial(*uq, {1, 0, 0, 1});
  expect2 += NCElement::monomial(*uq, {2, 0, 0, 0}, apow(1, 1));
  expect2 += NCElement::monomial(*uq, {2, 1, 0, 0}, apow(-2, 2));
  expect2 += NCElement::monomial(*uq, {2, 2, 0, 0}, apow(2, 3));
  CHECK(ni == expect2);

  // N * H = H N + (1 - exp(-2aP)) / (2a).
  NCElement nh = NCElement::gen(*uq, kN) * NCElement::gen(*uq, kH);
  NCElement expect3 = NCElement::monomial(*uq, {0, 0, 1, 1});
  expect3 += NCElement::monomial(*uq, {0, 1, 0, 0});             // P
  expect3 += NCElement::monomial(*uq, {0, 2, 0, 0}, apow(-1, 1));  // -a P^2
  expect3 +=
      NCElement::monomial(*uq, {0, 3, 0, 0}, apow(rat(2, 3), 2));
  // The series lags one a-power behind the P-exponent, so a-order 3 still
  // admits the P^4 term.
  expect3 +=
      NCElement::monomial(*uq, {0, 4, 0, 0}, apow(rat(-1, 3), 3));
  CHECK(nh == expect3);

  // I, P, H commute among themselves.
  for (int j : {kP, kH})
    for (int i = 0; i < j; ++i) {
      Monomial m(4, 0);
      ++m[i];
      ++m[j];
      CHECK(NCElement::gen(*uq, j) * NCElement::gen(*uq, i) ==
            NCElement::monomial(*uq, m));
    }

  // The truncation invariant holds on every straightened product.
  CHECK(np.a_max_degree() <= 3);
}

TEST_CASE("every rewrite rule is weight-homogeneous") {
  const Presentation& fq = qgal::fq_presentation();
  const Presentation& uq = qgal::uq_presentation(4);
  for (const Presentation* p : {&fq, &uq})
    for (const auto& [ji, rhs] : p->rules()) {
      auto w = qgal::homogeneous_weight(rhs);
      REQUIRE(w.has_value());
      CHECK(*w == p->gen_weight(ji.first) + p->gen_weight(ji.second));
    }
}

TEST_CASE("confluence: reduction position never changes the normal form") {
  const Presentation& fq = qgal::fq_presentation();
  auto uq = qgal::make_uq_presentation_bare(3);
  for (const Presentation* p :
       {&fq, static_cast<const Presentation*>(uq.get())}) {
    long checked = 0;
    for (int len = 2; len <= 4; ++len)
      for (const auto& w : testutil::all_words(p->num_gens(), len)) {
        NCElement first =
            testutil::reduce_word_choosing(*p, w, CoeffPoly(1), false);
        NCElement last =
            testutil::reduce_word_choosing(*p, w, CoeffPoly(1), true);
        NCElement engine = NCElement::word(*p, w);
        CHECK(first == last);
        CHECK(first == engine);
        ++checked;
      }
    CHECK(checked == 16 + 64 + 256);
  }
}

TEST_CASE("associativity of the straightened product") {
  auto uq = qgal::make_uq_presentation_bare(2);
  auto gens = qgal::enumerate_monomials(4, 1, 1);
  for (const auto& am : gens)
    for (const auto& bm : gens)
      for (const auto& cm : gens) {
        NCElement x = NCElement::monomial(*uq, am);
        NCElement y = NCElement::monomial(*uq, bm);
        NCElement z = NCElement::monomial(*uq, cm);
        CHECK((x * y) * z == x * (y * z));
      }
}

TEST_CASE("element arithmetic and helpers") {
  const Presentation& fq = qgal::fq_presentation();
  NCElement u = NCElement::unit(fq);
  NCElement x = NCElement::gen(fq, kX);

  CHECK(u * x == x);
  CHECK(x * u == x);
  CHECK((x - x).is_zero());
  CHECK(x.pow(0) == u);
  CHECK(x.pow(3) == NCElement::monomial(fq, {0, 3, 0, 0}));
  CHECK(x.degree() == 1);
  CHECK(NCElement::zero(fq).degree() == -1);
  CHECK(x.coefficient({0, 1, 0, 0}) == CoeffPoly(1));
  CHECK(x.coefficient({1, 0, 0, 0}).is_zero());
  CHECK(u.unit_coefficient() == CoeffPoly(1));

  NCElement scaled = apow(3, 2) * x;
  CHECK(scaled.coefficient({0, 1, 0, 0}) == apow(3, 2));

  CHECK(qgal::truncate_a(scaled, 1).is_zero());
  CHECK(qgal::truncate_a(scaled, 2) == scaled);
}

TEST_CASE("normal forms print in canonical descending order") {
  const Presentation& fq = qgal::fq_presentation();
  NCElement e = NCElement::gen(fq, kX) * NCElement::gen(fq, kMu);
  CHECK(e.to_string() == "mu*x + 2*a * mu");
  CHECK(NCElement::zero(fq).to_string() == "0");
  CHECK(NCElement::unit(fq).to_string() == "1");
  CHECK(NCElement::monomial(fq, {0, 2, 1, 0}).to_string() == "x^2*t");
}

TEST_CASE("presentation document round-trips through the parser") {
  const Presentation& fq = qgal::fq_presentation();
  auto reparsed = qgal::parse_presentation(fq.to_text());
  CHECK(reparsed->to_text() == fq.to_text());

  const Presentation& uq = qgal::uq_presentation(4);
  auto reparsed2 = qgal::parse_presentation(uq.to_text());
  CHECK(reparsed2->to_text() == uq.to_text());
  CHECK(reparsed2->a_order() == 4);
  CHECK(reparsed2->a_weight() == uq.a_weight());
}
