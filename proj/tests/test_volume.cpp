#include "twistkit/volume.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "twistkit/cocycle.hpp"
#include "twistkit/mapping_class.hpp"
#include "twistkit/rng.hpp"
#include "twistkit/winding.hpp"

using namespace tk;

namespace {

NumChar random_character(Rng& rng, const Surface& s) {
  std::vector<Rat> vals;
  for (int k = 0; k < s.hrank(); ++k) {
    Rat v;
    do {
      v = make_rat(rng.range(-6, 6), rng.range(1, 4));
    } while (v == 0 || v == 1);
    vals.push_back(v);
  }
  return make_numeric_character(s, vals);
}

HVec det_exponent(const GenTable& t, const MappingClass& f) {
  SymChar chi = standard_symbolic_character(t.s);
  SymDetValue d = determinant_cocycle(f, chi);
  REQUIRE(d.monomial);
  REQUIRE(d.monomial->coeff == 1);
  return exponent_class(d.monomial->exps, t.s);
}

std::pair<MappingClass, HVec> gen_with_exponent(const GenTable& t, const std::string& text) {
  MappingClass f = compose(t, parse_twist_word(text, t.s));
  HVec e = det_exponent(t, f);
  return {f, e};
}

} // namespace

TEST_CASE("omega coefficient values") {
  Surface s{2, 0, 1};
  // chi with chi(a2) = 2: the b2 chart coefficient is (1-2)^-1 = -1
  NumChar chi = make_numeric_character(s, {Rat(3), Rat(5), Rat(2), Rat(7)});
  NumFiberForm f = omega_chart(s, chi, s.b(2));
  CHECK(f.coefficient == Rat(-1));
  CHECK(f.chart == s.b(2));
  CHECK(f.ordered_basis == std::vector<Gen>{s.a(1), s.b(1), s.a(2)});

  // chi(dual(b2)) = chi(a2) = 1 is inadmissible
  NumChar bad = make_numeric_character(s, {Rat(3), Rat(5), Rat(1), Rat(7)});
  CHECK_THROWS_AS(omega_chart(s, bad, s.b(2)), Error);
}

TEST_CASE("omega appends arc functionals") {
  Surface s{2, 0, 3};
  NumChar chi = make_numeric_character(s, {Rat(3), Rat(5), Rat(2), Rat(7)});
  NumFiberForm f = omega_chart(s, chi, s.b(2));
  REQUIRE((int)f.ordered_basis.size() == s.relrank() - 1);
  CHECK(f.ordered_basis[f.ordered_basis.size() - 2] == s.arc(1));
  CHECK(f.ordered_basis.back() == s.arc(2));
}

TEST_CASE("chart change determinant by hand") {
  Surface s{2, 0, 1};
  Rng rng{60};
  for (int trial = 0; trial < 20; ++trial) {
    NumChar chi = random_character(rng, s);
    if (!chart_admissible(chi, s.b(2)) || !chart_admissible(chi, s.a(2))) continue;
    NumBasis bc = standard_basis(s, chi, s.b(2));
    NumBasis bt = standard_basis(s, chi, s.a(2));
    QMat m(3, QRow(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m[i][j] = evaluate_cocycle(bt.basis[j], Word{{bc.retained[i]}});
    // the only nonidentity column solves the a2 value of the b2 dual
    Rat x2 = chi.on_letter(s.a(2));
    Rat y2 = chi.on_letter(s.b(2));
    CHECK(q_det(m) == (1 - x2) / (1 - y2));
    CHECK(chart_consistency(s, chi, s.b(2), s.a(2)));
  }
}

TEST_CASE("chart consistency across all admissible pairs") {
  for (int g : {2, 3}) {
    Surface s{g, 0, 1};
    Rng rng{61 + (unsigned)g};
    int chars = g == 2 ? 8 : 5;
    for (int trial = 0; trial < chars; ++trial) {
      NumChar chi = random_character(rng, s);
      std::vector<Gen> charts;
      for (Gen x = 1; x <= s.loop_letters(); ++x)
        if (chart_admissible(chi, x)) charts.push_back(x);
      REQUIRE(charts.size() >= 2);
      for (Gen c : charts)
        for (Gen t : charts) CHECK(chart_consistency(s, chi, c, t));
    }
  }
}

TEST_CASE("chart consistency symbolically") {
  Surface s{2, 0, 1};
  SymChar chi = standard_symbolic_character(s);
  CHECK(chart_consistency(s, chi, s.b(2), s.a(2)));
  CHECK(chart_consistency(s, chi, s.b(1), s.b(2)));
  CHECK(chart_consistency(s, chi, s.a(1), s.a(1)));
}

TEST_CASE("chart consistency with arcs present") {
  Surface s{2, 0, 2};
  Rng rng{62};
  for (int trial = 0; trial < 5; ++trial) {
    NumChar chi = random_character(rng, s);
    if (!chart_admissible(chi, s.b(2)) || !chart_admissible(chi, s.a(2))) continue;
    CHECK(chart_consistency(s, chi, s.b(2), s.a(2)));
  }
}

TEST_CASE("separating twists solve trivially") {
  for (int g : {2, 3}) {
    Surface s{g, 0, 1};
    GenTable t = generator_table(s);
    std::vector<std::pair<MappingClass, HVec>> gens;
    gens.push_back(gen_with_exponent(t, "Ts1"));
    CoboundaryResult r = coboundary_solve(s, gens);
    REQUIRE(r.certificate);
    CHECK(r.certificate->n == 1);
    for (const Rat& x : r.certificate->v) CHECK(x == 0);
  }
}

TEST_CASE("zero-winding twists certify with v = 0") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  std::vector<std::pair<MappingClass, HVec>> gens;
  std::vector<MappingClass> classes;
  for (const std::string& name : {"Ta1", "Tb1", "Ta2", "Tb2", "Ts1"}) {
    auto p = gen_with_exponent(t, name);
    classes.push_back(p.first);
    gens.push_back(std::move(p));
  }
  CoboundaryResult r = coboundary_solve(s, gens);
  REQUIRE(r.certificate);
  for (const Rat& x : r.certificate->v) CHECK(x == 0);
  WindingClass out = n_framing_extract(*r.certificate, w, classes);
  CHECK(out.zeta == 1);
  for (const MappingClass& f : classes) CHECK(framed_membership(out, f));
}

TEST_CASE("a lone neck twist is a coboundary translate") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  std::vector<std::pair<MappingClass, HVec>> gens;
  gens.push_back(gen_with_exponent(t, "Te1"));
  gens.push_back(gen_with_exponent(t, "Ta1"));
  CoboundaryResult r = coboundary_solve(s, gens);
  REQUIRE(r.certificate);
  const QRow& v = r.certificate->v;
  // v([e1]) = v(a2) - v(a1) must cancel the winding 1
  CHECK(v[2] - v[0] == Rat(-1));
  CHECK(v[0] == 0);
  WindingClass out = n_framing_extract(*r.certificate, w, {gens[0].first, gens[1].first});
  CHECK(framed_membership(out, gens[0].first));
  CHECK(framed_membership(out, gens[1].first));
  CHECK(out.value("e1") == 0);
}

TEST_CASE("the full twist table is obstructed") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  std::vector<std::pair<MappingClass, HVec>> gens;
  for (const CurveRecord& r : t.curves) gens.push_back(gen_with_exponent(t, "T" + r.name));
  CoboundaryResult r = coboundary_solve(s, gens);
  REQUIRE(r.obstruction);
  CHECK(r.obstruction->rank_augmented == r.obstruction->rank_rows + 1);
  // a minimal witness pins a neck twist against the twists on its two handles
  CHECK(r.obstruction->witness.size() <= 3);
  std::vector<std::pair<MappingClass, HVec>> sub;
  for (size_t i : r.obstruction->witness) sub.push_back(gens[i]);
  CHECK(coboundary_solve(s, sub).obstruction);
}

TEST_CASE("point pushes are never stabilized") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  std::vector<std::pair<MappingClass, HVec>> gens;
  gens.push_back(gen_with_exponent(t, "Push(a1)"));
  CoboundaryResult r = coboundary_solve(s, gens);
  REQUIRE(r.obstruction);
  CHECK(r.obstruction->witness == std::vector<size_t>{0});
  CHECK(r.obstruction->rank_rows == 0);
  CHECK(r.obstruction->rank_augmented == 1);
}

TEST_CASE("adversarial exponents give a verified witness") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  MappingClass ts = compose(t, parse_twist_word("Ts1", s));
  HVec fake = hzero(s);
  fake[0] = 1;
  CoboundaryResult r = coboundary_solve(s, {{ts, fake}});
  REQUIRE(r.obstruction);
  CHECK(r.obstruction->witness == std::vector<size_t>{0});
  CHECK(r.obstruction->rank_rows == 0);
  CHECK(r.obstruction->rank_augmented == 1);
}

TEST_CASE("denominators are cleared into the level") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  MappingClass f = compose(t, parse_twist_word("Ta1^2", s));
  HVec claimed = hzero(s);
  claimed[0] = 1;  // not the true exponent of Ta1^2, which is zero
  CoboundaryResult r = coboundary_solve(s, {{f, claimed}});
  REQUIRE(r.certificate);
  CHECK(r.certificate->n == 2);
  CHECK(r.certificate->v[0] == make_rat(-1, 2));
  CHECK(r.certificate->integral_class[0] == -1);
  // extraction validates against the real cocycle and refuses the fake
  CHECK_THROWS_AS(n_framing_extract(*r.certificate, w, {f}), Error);
}

TEST_CASE("certificates from honest random generator sets validate") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  std::vector<std::string> framed_pool{"Ta1", "Tb1", "Ta2", "Tb2^-1", "Ts1"};
  Rng rng{63};
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::pair<MappingClass, HVec>> gens;
    std::vector<MappingClass> classes;
    int count = 1 + (int)rng.below(3);
    for (int i = 0; i < count; ++i) {
      std::string text = framed_pool[rng.below(framed_pool.size())];
      text += "," + framed_pool[rng.below(framed_pool.size())];
      auto p = gen_with_exponent(t, text);
      classes.push_back(p.first);
      gens.push_back(std::move(p));
    }
    CoboundaryResult r = coboundary_solve(s, gens);
    REQUIRE(r.certificate);
    WindingClass out = n_framing_extract(*r.certificate, w, classes);
    for (const MappingClass& f : classes) CHECK(framed_membership(out, f));
  }
}

TEST_CASE("certificate json shapes") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  std::vector<std::pair<MappingClass, HVec>> gens;
  gens.push_back(gen_with_exponent(t, "Ts1"));
  std::string cert = certificate_json(coboundary_solve(s, gens));
  CHECK(cert.find("\"validated\": true") != std::string::npos);
  CHECK(cert.find("\"N\": 1") != std::string::npos);

  gens.push_back(gen_with_exponent(t, "Push(b2)"));
  std::string obs = certificate_json(coboundary_solve(s, gens));
  CHECK(obs.find("\"validated\": false") != std::string::npos);
  CHECK(obs.find("\"witness\"") != std::string::npos);
}
