#include "twistkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "json.hpp"
#include "twistkit/cocycle.hpp"
#include "twistkit/error.hpp"
#include "twistkit/mapping_class.hpp"
#include "twistkit/rng.hpp"
#include "twistkit/volume.hpp"
#include "twistkit/winding.hpp"

namespace tk {

namespace {

Surface cfg_surface(const SuiteConfig& cfg) {
  Surface s{cfg.genus, cfg.punctures, cfg.marked};
  s.check();
  return s;
}

std::string join_steps(const std::vector<std::string>& steps) {
  std::string out;
  for (size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ",";
    out += steps[i];
  }
  return out;
}

std::string random_word_text(Rng& rng, const GenTable& t, int max_len) {
  int len = 1 + (int)rng.below((unsigned)max_len);
  std::vector<std::string> steps;
  for (int i = 0; i < len; ++i) {
    if (!t.push_loops.empty() && rng.below(4) == 0) {
      const Word& l = t.push_loops[rng.below(t.push_loops.size())];
      steps.push_back("Push(" + format_word(l, t.s) + ")");
    } else {
      const CurveRecord& r = t.curves[rng.below(t.curves.size())];
      std::string st = "T" + r.name;
      if (rng.below(2)) st += "^-1";
      steps.push_back(st);
    }
  }
  return join_steps(steps);
}

std::vector<std::string> table_generator_texts(const GenTable& t) {
  std::vector<std::string> out;
  for (const CurveRecord& r : t.curves) out.push_back("T" + r.name);
  for (const Word& l : t.push_loops) out.push_back("Push(" + format_word(l, t.s) + ")");
  return out;
}

// generator pairs first, then seeded random pairs, shared by the corpus suites
std::vector<std::pair<std::string, std::string>> identity_corpus(const GenTable& t,
                                                                 const SuiteConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  std::vector<std::string> gens = table_generator_texts(t);
  for (const std::string& f : gens)
    for (const std::string& g : gens) out.emplace_back(f, g);
  Rng rng{cfg.seed};
  for (int i = 0; i < cfg.case_count; ++i)
    out.emplace_back(random_word_text(rng, t, cfg.max_word_len),
                     random_word_text(rng, t, cfg.max_word_len));
  return out;
}

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

void suite_cocycle_identity(const SuiteConfig& cfg, SuiteReport& rep) {
  Surface s = cfg_surface(cfg);
  GenTable t = generator_table(s);
  SymChar chi = standard_symbolic_character(s);
  std::vector<std::string> names = char_var_names(s);
  for (const auto& [ftext, gtext] : identity_corpus(t, cfg)) {
    MappingClass f = compose(t, parse_twist_word(ftext, s));
    MappingClass g = compose(t, parse_twist_word(gtext, s));
    MappingClass fg = compose(t, parse_twist_word(ftext + "," + gtext, s));
    RatFn lhs = determinant_cocycle(fg, chi).value;
    RatFn rhs = determinant_cocycle(f, pushforward(chi, g)).value *
                determinant_cocycle(g, chi).value;
    ++rep.cases;
    if (!(lhs == rhs))
      rep.failures.push_back({ftext + " ; " + gtext, format_ratfn(rhs, names),
                              format_ratfn(lhs, names)});
  }
}

void suite_monomiality(const SuiteConfig& cfg, SuiteReport& rep) {
  Surface s = cfg_surface(cfg);
  GenTable t = generator_table(s);
  SymChar chi = standard_symbolic_character(s);
  std::vector<std::string> names = char_var_names(s);
  auto check = [&](const std::string& label, const MappingClass& f, const SymChar& at) {
    SymDetValue d = determinant_cocycle(f, at);
    ++rep.cases;
    if (!d.monomial)
      rep.failures.push_back({label, "a monomial", format_ratfn(d.value, names)});
    else if (d.monomial->coeff != 1)
      rep.failures.push_back({label, "coefficient 1", d.monomial->coeff.str()});
  };
  for (const auto& [ftext, gtext] : identity_corpus(t, cfg)) {
    MappingClass f = compose(t, parse_twist_word(ftext, s));
    MappingClass g = compose(t, parse_twist_word(gtext, s));
    MappingClass fg = compose(t, parse_twist_word(ftext + "," + gtext, s));
    check(ftext + " at pushed character", f, pushforward(chi, g));
    check(gtext, g, chi);
    check(ftext + "," + gtext, fg, chi);
  }
}

void suite_grand_cross_check(const SuiteConfig& cfg, SuiteReport& rep) {
  Surface s = cfg_surface(cfg);
  GenTable t = generator_table(s);
  WindingClass w = derive_framing_from_A(t);
  SymChar chi = standard_symbolic_character(s);
  std::vector<std::string> names = char_var_names(s);
  auto check = [&](const std::string& label, const MappingClass& f) {
    SymDetValue d = determinant_cocycle(f, chi);
    ++rep.cases;
    if (!d.monomial) {
      rep.failures.push_back({label, "a monomial", format_ratfn(d.value, names)});
      return;
    }
    HVec got = exponent_class(d.monomial->exps, s);
    HVec expect = pullback_change(w, f).vector;
    if (got != expect)
      rep.failures.push_back({label, format_hvec(expect, s), format_hvec(got, s)});
  };
  for (const auto& [ftext, gtext] : identity_corpus(t, cfg)) {
    check(ftext, compose(t, parse_twist_word(ftext, s)));
    check(gtext, compose(t, parse_twist_word(gtext, s)));
    check(ftext + "," + gtext, compose(t, parse_twist_word(ftext + "," + gtext, s)));
  }
}

void suite_chart_consistency(const SuiteConfig& cfg, SuiteReport& rep) {
  Surface s = cfg_surface(cfg);
  Rng rng{cfg.seed};
  for (int trial = 0; trial < cfg.case_count; ++trial) {
    NumChar chi = random_character(rng, s);
    std::vector<Gen> charts;
    for (Gen x = 1; x <= s.loop_letters(); ++x)
      if (chart_admissible(chi, x)) charts.push_back(x);
    for (Gen c : charts)
      for (Gen u : charts) {
        ++rep.cases;
        if (!chart_consistency(s, chi, c, u)) {
          std::ostringstream in;
          in << "character " << trial << " charts " << c << " -> " << u;
          rep.failures.push_back({in.str(), "equal volume forms", "mismatch"});
        }
      }
  }
}

void suite_push_formulas(const SuiteConfig& cfg, SuiteReport& rep) {
  Surface s = cfg_surface(cfg);
  GenTable t = generator_table(s);
  SymChar chi = standard_symbolic_character(s);
  std::vector<std::string> names = char_var_names(s);

  // determinant of a point push is the character of the pushed loop, raised to
  // the absolute rank minus one; each arc the push drags adds one more factor
  Int e = 2 * s.g + s.B - 2 + (s.P - 1);
  for (const Word& l : t.push_loops) {
    std::string label = "Push(" + format_word(l, s) + ")";
    MappingClass f = compose(t, parse_twist_word(label, s));
    SymDetValue d = determinant_cocycle(f, chi);
    RatFn expect = RatFn::from_monomial(mf_pow(chi.on_word(l), e), chi.nv);
    ++rep.cases;
    if (!(d.value == expect))
      rep.failures.push_back({label, format_ratfn(expect, names),
                              format_ratfn(d.value, names)});
  }

  // boundary push on each basis vector: x + <gamma, x> Delta_b
  if (s.B > 0) {
    for (const Word& l : t.push_loops) {
      HVec gcls = abelianize(l, s);
      for (int b = 1; b <= s.B; ++b)
        for (int k = 0; k < s.hrank(); ++k) {
          HVec x = hzero(s);
          x[k] = 1;
          HVec expect = hadd(x, hscale(symp_pair(gcls, x, s), delta_class(s, b)));
          HVec got = push_action_boundary(l, x, b, s);
          ++rep.cases;
          if (got != expect)
            rep.failures.push_back({"Push(" + format_word(l, s) + ") on unit " +
                                        std::to_string(k) + " boundary " + std::to_string(b),
                                    format_hvec(expect, s), format_hvec(got, s)});
        }
    }
  }

  // relative push on each basis vector: alpha + (2-2g-P) <gamma, alpha> gamma
  if (s.B == 0 && s.P > 1) {
    Int mult = 2 - 2 * s.g - s.P;
    for (const Word& l : t.push_loops) {
      HVec gcls = abelianize(l, s);
      for (int k = 0; k < s.relrank(); ++k) {
        HVec alpha = hzero(s);
        alpha[k] = 1;
        HVec expect = hadd(alpha, hscale(mult * symp_pair(gcls, alpha, s), gcls));
        HVec got = push_action_relative(l, alpha, s);
        ++rep.cases;
        if (got != expect)
          rep.failures.push_back({"Push(" + format_word(l, s) + ") on relative unit " +
                                      std::to_string(k),
                                  format_hvec(expect, s), format_hvec(got, s)});
      }
    }
  }

  // boundary twist calculus: C(psi) scales each Delta_j by its winding value
  if (s.B > 0 && s.P > 1) {
    WindingClass ref = reference_framing(t);
    for (int j = 1; j <= s.B; ++j) {
      HVec expect = hscale(ref.value("d" + std::to_string(j)), delta_class(s, j));
      HVec got = cpsi_on_boundary_twists(ref, j);
      ++rep.cases;
      if (got != expect)
        rep.failures.push_back({"boundary loop " + std::to_string(j),
                                format_hvec(expect, s), format_hvec(got, s)});
    }
  }
}

void suite_arc_conditions(const SuiteConfig& cfg, SuiteReport& rep) {
  Surface s = cfg_surface(cfg);
  if (s.P < 2)
    fail(ErrKind::InvalidConfig, "arc-conditions needs at least two marked points");
  GenTable t = generator_table(s);
  WindingClass xi0 = reference_framing(t);

  auto expect_verdict = [&](const std::string& label, const std::vector<MappingClass>& grp,
                            const WindingClass& eta, ArcVerdict want, bool want_basis) {
    ArcConditionReport r = arc_framed_conditions(grp, eta, xi0, t);
    ++rep.cases;
    if (r.verdict != want)
      rep.failures.push_back({label,
                              want == ArcVerdict::Coboundary ? "coboundary" : "obstructed",
                              r.verdict == ArcVerdict::Coboundary ? "coboundary" : "obstructed"});
    ++rep.cases;
    if (r.arc_basis_preserved != want_basis)
      rep.failures.push_back({label + " arc basis",
                              want_basis ? "preserved" : "moved",
                              r.arc_basis_preserved ? "preserved" : "moved"});
  };

  std::vector<MappingClass> sep{compose(t, parse_twist_word("Ts1", s))};
  expect_verdict("separating twist", sep, xi0, ArcVerdict::Coboundary, true);

  // a marked push moves the arc basis and is never compensated
  std::vector<MappingClass> push{compose(t, parse_twist_word("Push1(a1)", s))};
  expect_verdict("marked push", push, xi0, ArcVerdict::Obstructed, false);

  // shifted arc winding against the same group is compensated by an invariant class
  WindingClass eta = xi0;
  eta.marked_values[0] = 1;
  ArcConditionReport shifted = arc_framed_conditions(sep, eta, xi0, t);
  ++rep.cases;
  if (!shifted.invariant_gamma)
    rep.failures.push_back({"shifted arc winding", "an invariant class", "none"});
  ++rep.cases;
  if (shifted.d_eta != std::vector<Int>{-1, 0})
    rep.failures.push_back({"shifted arc winding defect", "(-1, 0)", "other"});
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "cocycle-identity", "monomiality",   "grand-cross-check",
      "chart-consistency", "push-formulas", "arc-conditions"};
  return names;
}

bool known_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (!known_suite(name)) fail(ErrKind::InvalidConfig, "unknown suite " + name);
  SuiteReport rep;
  rep.suite = name;
  rep.seed = cfg.seed;
  auto start = std::chrono::steady_clock::now();
  if (name == "cocycle-identity") suite_cocycle_identity(cfg, rep);
  else if (name == "monomiality") suite_monomiality(cfg, rep);
  else if (name == "grand-cross-check") suite_grand_cross_check(cfg, rep);
  else if (name == "chart-consistency") suite_chart_consistency(cfg, rep);
  else if (name == "push-formulas") suite_push_formulas(cfg, rep);
  else suite_arc_conditions(cfg, rep);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string report_text(const SuiteReport& rep) {
  std::ostringstream out;
  out << rep.suite << ": " << rep.cases << " cases, " << rep.failures.size()
      << " failures (seed " << rep.seed << ")\n";
  for (const SuiteFailure& f : rep.failures)
    out << "  " << f.input << "\n    expected " << f.expected << "\n    actual   "
        << f.actual << "\n";
  return out.str();
}

std::string report_json(const SuiteReport& rep) {
  nlohmann::json j;
  j["suite"] = rep.suite;
  j["seed"] = rep.seed;
  j["cases"] = rep.cases;
  j["failures"] = nlohmann::json::array();
  for (const SuiteFailure& f : rep.failures)
    j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  return j.dump(2);
}

} // namespace tk
