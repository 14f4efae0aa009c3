#include "twistkit/winding.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "twistkit/cocycle.hpp"
#include "twistkit/linalg.hpp"
#include "twistkit/mapping_class.hpp"
#include "twistkit/rng.hpp"

using namespace tk;

namespace {

HVec exp_class(const Exp& e, const Surface& s) {
  HVec h = hzero(s);
  for (size_t k = 0; k < e.size(); ++k) h[k] = e[k];
  return h;
}

// random word over curve twists and basepoint pushes
std::vector<TwistStep> random_word(Rng& rng, const GenTable& t, int len, bool pushes) {
  std::vector<TwistStep> steps;
  for (int i = 0; i < len; ++i) {
    int pick = (int)rng.below(pushes ? t.curves.size() + 2 : t.curves.size());
    int e = rng.below(2) == 0 ? 1 : -1;
    if (pick < (int)t.curves.size()) {
      steps.push_back({TwistStep::Curve, t.curves[pick].name, {}, 0, e});
    } else {
      Gen x = pick == (int)t.curves.size() ? t.s.a(1 + (int)rng.below(t.s.g))
                                           : t.s.b(1 + (int)rng.below(t.s.g));
      steps.push_back({TwistStep::BasePush, "", Word{{x}}, 0, e});
    }
  }
  return steps;
}

} // namespace

TEST_CASE("derived framing values") {
  for (int g : {2, 3}) {
    Surface s{g, 0, 1};
    GenTable t = generator_table(s);
    WindingClass w = derive_framing_from_A(t);
    CHECK(w.zeta == 1);
    for (int i = 1; i <= g; ++i) {
      CHECK(w.value("a" + std::to_string(i)) == 0);
      CHECK(w.value("b" + std::to_string(i)) == 0);
    }
    for (int i = 1; i < g; ++i) CHECK(w.value("e" + std::to_string(i)) == 1);
    CHECK(w.value("s1") == -1);
    CHECK(w.delta_value == 2 * g - 1);
  }
}

TEST_CASE("derived framing matches the reference splitting") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  WindingClass ref = reference_framing(t);
  CHECK(w.base_values == ref.base_values);
  CHECK(w.delta_value == ref.delta_value);
}

TEST_CASE("single twist changes") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);

  CHECK(framed_membership(w, compose(t, parse_twist_word("Ta1", s))));
  CHECK(framed_membership(w, compose(t, parse_twist_word("Tb2^-1", s))));
  CHECK(framed_membership(w, compose(t, parse_twist_word("Ts1", s))));

  MappingClass te = compose(t, parse_twist_word("Te1", s));
  HVec h = pullback_change(w, te).vector;
  CHECK(h == t.find("e1").homology);
  CHECK_FALSE(framed_membership(w, te));

  MappingClass tei = compose(t, parse_twist_word("Te1^-1", s));
  CHECK(pullback_change(w, tei).vector == hscale(-1, t.find("e1").homology));
}

TEST_CASE("push change is the pushed class times the euler exponent") {
  for (int g : {2, 3}) {
    Surface s{g, 0, 1};
    GenTable t = generator_table(s);
    WindingClass w = derive_framing_from_A(t);
    MappingClass p = compose(t, parse_twist_word("Push(b1)", s));
    CHECK(pullback_change(w, p).vector == hscale(2 * g - 2, abelianize(parse_word("b1", s), s)));
    MappingClass q = compose(t, parse_twist_word("Push(a2)^-1", s));
    CHECK(pullback_change(w, q).vector ==
          hscale(-(2 * g - 2), abelianize(parse_word("a2", s), s)));
  }
}

TEST_CASE("change vector reads off the determinant exponents") {
  for (int g : {2, 3}) {
    Surface s{g, 0, 1};
    GenTable t = generator_table(s);
    WindingClass w = derive_framing_from_A(t);
    SymChar chi = standard_symbolic_character(s);
    Rng rng{90 + (unsigned)g};
    int cases = g == 2 ? 25 : 8;
    for (int i = 0; i < cases; ++i) {
      auto steps = random_word(rng, t, 1 + (int)rng.below(4), true);
      MappingClass f = compose(t, steps);
      SymDetValue d = determinant_cocycle(f, chi);
      REQUIRE(d.monomial);
      CHECK(d.monomial->coeff == 1);
      CHECK(exp_class(d.monomial->exps, s) == pullback_change(w, f).vector);
    }
  }
}

TEST_CASE("pullback change is a crossed homomorphism") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  Rng rng{91};
  for (int i = 0; i < 40; ++i) {
    auto sf = random_word(rng, t, 1 + (int)rng.below(3), true);
    auto sg = random_word(rng, t, 1 + (int)rng.below(3), true);
    auto sfg = sf;
    sfg.insert(sfg.end(), sg.begin(), sg.end());
    MappingClass f = compose(t, sf), g = compose(t, sg), fg = compose(t, sfg);
    // change(f compose g) = g_*^-1 change(f) + change(g)
    ZMat minv = z_inverse_unimodular(homology_action(g, HMode::Absolute));
    ZRow moved = z_apply(minv, pullback_change(w, f).vector);
    HVec want = hadd(HVec(moved.begin(), moved.end()), pullback_change(w, g).vector);
    CHECK(pullback_change(w, fg).vector == want);
  }
}

TEST_CASE("inverse words cancel") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  Rng rng{92};
  for (int i = 0; i < 20; ++i) {
    auto sf = random_word(rng, t, 1 + (int)rng.below(4), true);
    auto inv = inverse_word(sf);
    auto both = sf;
    both.insert(both.end(), inv.begin(), inv.end());
    CHECK(framed_membership(w, compose(t, both)));
  }
}

TEST_CASE("commutators of framed elements stay framed") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  Rng rng{93};
  for (int i = 0; i < 30; ++i) {
    auto sf = random_word(rng, t, 1 + (int)rng.below(4), true);
    auto sg = random_word(rng, t, 1 + (int)rng.below(4), true);
    if (!framed_membership(w, compose(t, sf))) continue;
    if (!framed_membership(w, compose(t, sg))) continue;
    auto word = sf;
    word.insert(word.end(), sg.begin(), sg.end());
    auto fi = inverse_word(sf), gi = inverse_word(sg);
    word.insert(word.end(), fi.begin(), fi.end());
    word.insert(word.end(), gi.begin(), gi.end());
    CHECK(framed_membership(w, compose(t, word)));
  }
}

TEST_CASE("coherence of oriented boundaries") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  // one-holed torus bounded by s1
  CHECK(coherence_check(w, {{"s1", 1}}, -1));
  CHECK_FALSE(coherence_check(w, {{"s1", -1}}, -1));
  // pair of pants between a1, e1, a2; the homology of the three boundaries
  // cancels only when one curve is oriented against the other two
  CHECK(coherence_check(w, {{"a1", -1}, {"e1", -1}, {"a2", 1}}, -1));
  CHECK_FALSE(coherence_check(w, {{"a1", -1}, {"e1", 1}, {"a2", 1}}, -1));
}

TEST_CASE("boundary signatures sum to the euler characteristic") {
  for (int g : {2, 3}) {
    for (int b : {1, 2}) {
      Surface s{g, b, 1};
      GenTable t = generator_table(s);
      WindingClass w = reference_framing(t);
      BoundarySignature sig = boundary_signature(w);
      REQUIRE((int)sig.values.size() == b);
      Int total = 0;
      for (const Int& v : sig.values) total += v;
      CHECK(total == 2 - 2 * g - b);
    }
  }
}

TEST_CASE("level scaling and coboundary adjustment") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  WindingClass w2 = adjust_framing(w, 2, std::vector<Int>(s.hrank(), 0));
  CHECK(w2.zeta == 2);
  CHECK(w2.value("e1") == 2);
  CHECK(w2.value("s1") == -2);
  CHECK(w2.delta_value == 2 * (2 * s.g - 1));

  // v pairs against curve classes
  std::vector<Int> v(s.hrank(), 0);
  v[0] = 3;  // value on a1
  WindingClass w3 = adjust_framing(w, 1, v);
  CHECK(w3.value("a1") == 3);
  CHECK(w3.value("b1") == 0);
  CHECK(w3.value("e1") == 1 - 3 + 0);
  CHECK(w3.value("s1") == -1);
}

TEST_CASE("adjusted framings shift membership by the coboundary") {
  Surface s{2, 0, 1};
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  std::vector<Int> v{1, 0, 0, 0};
  WindingClass wa = adjust_framing(w, 1, v);
  // e1 now has winding 1 + v([e1]) = 1 + (0 - 1) = 0
  CHECK(wa.value("e1") == 0);
  CHECK(framed_membership(wa, compose(t, parse_twist_word("Te1", s))));
  MappingClass f = compose(t, parse_twist_word("Ta1", s));
  CHECK(pullback_change(wa, f).vector == hscale(1, t.find("a1").homology));
  CHECK_FALSE(framed_membership(wa, f));
}

TEST_CASE("cpsi values on boundary twists") {
  Surface s{2, 2, 3};
  GenTable t = generator_table(s);
  WindingClass w = reference_framing(t);
  CHECK(his_zero(cpsi_on_boundary_twists(w, 1)));
  HVec c2 = cpsi_on_boundary_twists(w, 2);
  CHECK(c2 == hscale(w.value("d2"), delta_class(s, 2)));
  CHECK(c2[s.hrank() - 1] == 4);  // d2 class is -D1, value -2g
}

TEST_CASE("arc winding change by twist calculus") {
  Surface s{2, 2, 3};
  GenTable t = generator_table(s);
  WindingClass w = reference_framing(t);
  // the d2 twist crosses arc c2 once
  MappingClass td2 = compose(t, parse_twist_word("Td2", s));
  CHECK(arc_winding_change(w, td2, 2) == w.value("d2"));
  CHECK(arc_winding_change(w, td2, 1) == 0);
  // separating twists never meet the arcs
  MappingClass ts = compose(t, parse_twist_word("Ts1", s));
  CHECK(arc_winding_change(w, ts, 1) == 0);
}

TEST_CASE("arc conditions: separating stabilizer extends") {
  Surface s{2, 0, 3};
  GenTable t = generator_table(s);
  WindingClass ref = reference_framing(t);
  std::vector<MappingClass> group{compose(t, parse_twist_word("Ts1", s))};
  ArcConditionReport rep = arc_framed_conditions(group, ref, ref, t);
  CHECK(rep.eta_framing_ok);
  CHECK(rep.d_eta == std::vector<Int>{0, 0});
  REQUIRE(rep.invariant_gamma);
  CHECK(rep.arc_basis_preserved);
  CHECK(rep.verdict == ArcVerdict::Coboundary);
}

TEST_CASE("arc conditions: marked push with no compensating class") {
  Surface s{2, 0, 3};
  GenTable t = generator_table(s);
  WindingClass ref = reference_framing(t);
  WindingClass eta = ref;
  eta.marked_values = {1, 0};  // winding defect at p_1
  std::vector<MappingClass> group{compose(t, parse_twist_word("Push1(a1)", s))};
  ArcConditionReport rep = arc_framed_conditions(group, eta, ref, t);
  CHECK(rep.d_eta == std::vector<Int>{-1, 0});
  CHECK_FALSE(rep.invariant_gamma.has_value());
  CHECK(rep.verdict == ArcVerdict::Obstructed);
}

TEST_CASE("arc conditions: moved arc basis obstructs") {
  Surface s{2, 0, 3};
  GenTable t = generator_table(s);
  WindingClass ref = reference_framing(t);
  std::vector<MappingClass> group{compose(t, parse_twist_word("Push1(a1)", s))};
  ArcConditionReport rep = arc_framed_conditions(group, ref, ref, t);
  // an invariant class exists (gamma = 0) but the arc basis moves
  REQUIRE(rep.invariant_gamma);
  CHECK_FALSE(rep.arc_basis_preserved);
  CHECK(rep.verdict == ArcVerdict::Obstructed);
}

TEST_CASE("framing preconditions are enforced") {
  Surface s{2, 0, 3};
  GenTable t = generator_table(s);
  WindingClass ref = reference_framing(t);
  std::vector<MappingClass> group{compose(t, parse_twist_word("Te1", s))};
  CHECK_THROWS_AS(arc_framed_conditions(group, ref, ref, t), Error);

  WindingClass bad = ref;
  bad.marked_values = {1, 0};
  std::vector<MappingClass> ok{compose(t, parse_twist_word("Ts1", s))};
  CHECK_THROWS_AS(arc_framed_conditions(ok, ref, bad, t), Error);
}
