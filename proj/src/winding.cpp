#include "twistkit/winding.hpp"

#include <algorithm>

#include "json.hpp"

#include "twistkit/cocycle.hpp"
#include "twistkit/linalg.hpp"

namespace tk {

Int WindingClass::value(const std::string& name) const {
  auto it = base_values.find(name);
  if (it == base_values.end())
    fail(ErrKind::InvalidConfig, "no winding value for curve " + name);
  return it->second;
}

HVec exponent_class(const std::vector<int>& exps, const Surface& s) {
  if ((int)exps.size() > s.relrank())
    fail(ErrKind::InvalidConfig, "exponent vector longer than the homology rank");
  HVec h = hzero(s);
  for (size_t k = 0; k < exps.size(); ++k) h[k] = exps[k];
  return h;
}

namespace {

MonomialForm monomial_of(const GenTable& t, const std::vector<TwistStep>& steps,
                         const SymChar& chi) {
  MappingClass f = compose(t, steps);
  SymDetValue d = determinant_cocycle(f, chi);
  if (!d.monomial)
    fail(ErrKind::Inconsistent, "determinant of " + f.label + " is not monomial");
  if (d.monomial->coeff != 1)
    fail(ErrKind::Inconsistent, "determinant of " + f.label + " has a nonunit coefficient");
  return *d.monomial;
}

} // namespace

WindingClass derive_framing_from_A(const GenTable& t) {
  const Surface& s = t.s;
  if (!s.closed() || s.P != 1)
    fail(ErrKind::InvalidConfig, "framings are derived on a closed surface with one marked point");
  SymChar chi = standard_symbolic_character(s);

  WindingClass w;
  w.s = s;
  w.zeta = 1;

  // rows v.[d] = W(d_hat) - fiber_coeff(d), solved for v at the end
  ZMat rows;
  ZRow rhs;
  for (const CurveRecord& r : t.curves) {
    MonomialForm m = monomial_of(t, {TwistStep{TwistStep::Curve, r.name, {}, 0, 1}}, chi);
    HVec cls = exponent_class(m.exps, s);
    if (r.separating) {
      if (!his_zero(cls))
        fail(ErrKind::Inconsistent,
             "separating twist " + r.name + " has a nontrivial determinant");
      w.base_values[r.name] = r.fiber_coeff;
      continue;
    }
    int pivot = -1;
    for (int k = 0; k < s.hrank(); ++k)
      if (r.homology[k] != 0) { pivot = k; break; }
    if (pivot < 0) fail(ErrKind::Inconsistent, "curve " + r.name + " has zero class");
    if (cls[pivot] % r.homology[pivot] != 0)
      fail(ErrKind::Inconsistent, "determinant of " + r.name + " is not a power of its curve class");
    Int wd = cls[pivot] / r.homology[pivot];
    if (cls != hscale(wd, r.homology))
      fail(ErrKind::Inconsistent, "determinant of " + r.name + " is not a power of its curve class");
    w.base_values[r.name] = wd;
    ZRow row(r.homology.begin(), r.homology.begin() + s.hrank());
    rows.push_back(row);
    rhs.push_back(wd - r.fiber_coeff);
  }
  if (!z_solve(rows, rhs))
    fail(ErrKind::Inconsistent, "table fiber coefficients do not split the derived framing");

  // the marked-point loop: one more winding than the point-push exponent
  Word a1{{s.a(1)}};
  MonomialForm p = monomial_of(t, {TwistStep{TwistStep::BasePush, "", a1, 0, 1}}, chi);
  HVec pcls = exponent_class(p.exps, s);
  if (pcls != hscale(pcls[0], abelianize(a1, s)))
    fail(ErrKind::Inconsistent, "point-push determinant is not a power of the pushed class");
  w.delta_value = pcls[0] + 1;
  return w;
}

WindingClass reference_framing(const GenTable& t, const Int& n) {
  WindingClass w;
  w.s = t.s;
  w.zeta = n;
  for (const CurveRecord& r : t.curves) w.base_values[r.name] = n * r.fiber_coeff;
  // push-offs of a based curve differ by delta minus one fiber
  w.delta_value = n * (2 * t.s.g + t.s.B - 1);
  w.marked_values.assign(t.s.arc_letters(), 0);
  return w;
}

WindingClass adjust_framing(const WindingClass& w, const Int& n, const std::vector<Int>& v) {
  const Surface& s = w.s;
  if ((int)v.size() != s.hrank())
    fail(ErrKind::InvalidConfig, "adjustment class must have one value per homology generator");
  WindingClass out = w;
  out.zeta = n * w.zeta;
  out.delta_value = n * w.delta_value;  // the basepoint loop is nullhomologous
  for (auto& mv : out.marked_values) mv = n * mv;
  GenTable t = generator_table(s);
  for (auto& [name, val] : out.base_values) {
    val = n * val;
    const HVec& cls = t.find(name).homology;
    for (int k = 0; k < s.hrank(); ++k) val += v[k] * cls[k];
  }
  return out;
}

WindingChange pullback_change(const WindingClass& w, const MappingClass& f) {
  const Surface& s = w.s;
  if (!f.twist_word)
    fail(ErrKind::InvalidConfig, "pullback change needs the twist word of " + f.label);
  GenTable t = generator_table(s);
  HVec h = hzero(s);
  Int push_coef = w.zeta * (2 * s.g + s.B - 2);
  for (const TwistStep& st : *f.twist_word) {
    int sgn = st.exp >= 0 ? 1 : -1;
    int reps = st.exp >= 0 ? st.exp : -st.exp;
    switch (st.kind) {
      case TwistStep::Curve: {
        const CurveRecord& r = t.find(st.curve);
        Int wd = w.value(r.name);
        for (int i = 0; i < reps; ++i) {
          Int c = sgn * (wd + symp_pair(r.homology, h, s));
          h = hadd(h, hscale(c, r.homology));
        }
        break;
      }
      case TwistStep::BasePush: {
        // absolutely invisible action, pure seed
        h = hadd(h, hscale(st.exp * push_coef, abelianize(st.loop, s)));
        break;
      }
      case TwistStep::MarkedPush:
        break;
    }
  }
  return WindingChange{h};
}

bool framed_membership(const WindingClass& w, const MappingClass& f) {
  return his_zero(pullback_change(w, f).vector);
}

bool coherence_check(const WindingClass& w,
                     const std::vector<std::pair<std::string, int>>& boundary,
                     const Int& euler) {
  Int total = 0;
  for (const auto& [name, orient] : boundary) {
    if (orient != 1 && orient != -1)
      fail(ErrKind::InvalidConfig, "boundary orientations must be +1 or -1");
    total += orient * w.value(name);
  }
  return total == euler;
}

BoundarySignature boundary_signature(const WindingClass& w) {
  BoundarySignature sig;
  for (int j = 1; j <= w.s.B; ++j)
    sig.values.push_back(w.value("d" + std::to_string(j)));
  return sig;
}

namespace {

// signed crossing of a relative class with a table curve
Int rel_cross(const HVec& h, const CurveRecord& r, const Surface& s) {
  Int c = symp_pair(h, r.homology, s);
  for (int k = 0; k < s.arc_letters(); ++k)
    if (k < (int)r.arc_cross.size()) c += h[s.hrank() + k] * r.arc_cross[k];
  return c;
}

HVec rel_apply(const GenTable& t, const TwistStep& st, const HVec& h) {
  ZMat m = twist_word_matrix(t, {st}, HMode::Relative);
  ZRow out = z_apply(m, h);
  return HVec(out.begin(), out.end());
}

} // namespace

Int arc_winding_change(const WindingClass& w, const MappingClass& f, int k) {
  const Surface& s = w.s;
  if (k < 1 || k > s.arc_letters())
    fail(ErrKind::InvalidConfig, "no such arc");
  if (!f.twist_word)
    fail(ErrKind::InvalidConfig, "arc twist calculus needs the twist word of " + f.label);
  GenTable t = generator_table(s);
  HVec h = hzero(s);
  h[s.hrank() + k - 1] = 1;
  Int change = 0;
  // innermost step first: the arc moves through the factors in application order
  for (auto it = f.twist_word->rbegin(); it != f.twist_word->rend(); ++it) {
    const TwistStep& st = *it;
    if (st.kind == TwistStep::Curve) {
      const CurveRecord& r = t.find(st.curve);
      Int wd = w.value(r.name);
      int sgn = st.exp >= 0 ? 1 : -1;
      int reps = st.exp >= 0 ? st.exp : -st.exp;
      for (int i = 0; i < reps; ++i) {
        change += sgn * rel_cross(h, r, s) * wd;
        TwistStep one = st;
        one.exp = sgn;
        h = rel_apply(t, one, h);
      }
    } else {
      h = rel_apply(t, st, h);
    }
  }
  return change;
}

HVec cpsi_on_boundary_twists(const WindingClass& w, int j) {
  const Surface& s = w.s;
  if (j < 1 || j > s.B) fail(ErrKind::InvalidConfig, "no such boundary loop");
  Int wd = w.value("d" + std::to_string(j));
  HVec out = hscale(wd, delta_class(s, j));
  if (j <= s.arc_letters()) {
    // the arc across this loop must see the same winding under the twist
    GenTable t = generator_table(s);
    MappingClass tw = compose(t, {TwistStep{TwistStep::Curve, "d" + std::to_string(j), {}, 0, 1}});
    if (arc_winding_change(w, tw, j) != wd)
      fail(ErrKind::Inconsistent, "boundary twist calculus disagrees on arc " + std::to_string(j));
  }
  return out;
}

ArcConditionReport arc_framed_conditions(const std::vector<MappingClass>& group,
                                         const WindingClass& eta, const WindingClass& xi0,
                                         const GenTable& t) {
  const Surface& s = t.s;
  if (s.arc_letters() == 0)
    fail(ErrKind::InvalidConfig, "arc conditions need at least one marked point beyond the basepoint");
  if ((int)xi0.marked_values.size() != s.arc_letters() ||
      (int)eta.marked_values.size() != s.arc_letters())
    fail(ErrKind::InvalidConfig, "framings must carry a winding value per marked point");
  for (const Int& mv : xi0.marked_values)
    if (mv != 0)
      fail(ErrKind::InvalidConfig, "reference framing must have zero winding at every arc endpoint");
  for (const MappingClass& g : group)
    if (!framed_membership(eta, g))
      fail(ErrKind::InvalidConfig, g.label + " does not preserve the framing");

  ArcConditionReport rep;
  rep.eta_framing_ok = boundary_signature(eta).values == boundary_signature(xi0).values;
  for (int k = 0; k < s.arc_letters(); ++k)
    rep.d_eta.push_back(xi0.marked_values[k] - eta.marked_values[k]);

  // invariant relative class with prescribed boundary
  ZMat rows;
  ZRow rhs;
  for (const MappingClass& g : group) {
    if (!g.twist_word)
      fail(ErrKind::InvalidConfig, "arc conditions need the twist word of " + g.label);
    ZMat m = twist_word_matrix(t, *g.twist_word, HMode::Relative);
    for (int i = 0; i < s.relrank(); ++i) {
      ZRow row = m[i];
      row[i] -= 1;
      rows.push_back(row);
      rhs.push_back(0);
    }
  }
  for (int k = 0; k < s.arc_letters(); ++k) {
    ZRow row(s.relrank(), 0);
    row[s.hrank() + k] = 1;
    rows.push_back(row);
    rhs.push_back(rep.d_eta[k]);
  }
  if (auto sol = z_solve(rows, rhs)) rep.invariant_gamma = HVec(sol->begin(), sol->end());

  rep.arc_basis_preserved = true;
  for (const MappingClass& g : group) {
    ZMat m = twist_word_matrix(t, *g.twist_word, HMode::Relative);
    for (int k = 1; k <= s.arc_letters(); ++k) {
      for (int i = 0; i < s.relrank(); ++i) {
        Int want = (i == s.hrank() + k - 1) ? 1 : 0;
        if (m[i][s.hrank() + k - 1] != want) rep.arc_basis_preserved = false;
      }
      if (arc_winding_change(xi0, g, k) != 0) rep.arc_basis_preserved = false;
    }
  }

  rep.verdict = (rep.invariant_gamma && rep.arc_basis_preserved) ? ArcVerdict::Coboundary
                                                                 : ArcVerdict::Obstructed;
  return rep;
}

std::string framing_json(const WindingClass& w) {
  nlohmann::json j;
  j["zeta"] = w.zeta.convert_to<long long>();
  j["base_values"] = nlohmann::json::object();
  for (const auto& [name, v] : w.base_values) j["base_values"][name] = v.convert_to<long long>();
  j["delta_value"] = w.delta_value.convert_to<long long>();
  j["marked_values"] = nlohmann::json::array();
  for (const Int& v : w.marked_values) j["marked_values"].push_back(v.convert_to<long long>());
  if (w.arc_values) {
    j["arc_values"] = nlohmann::json::array();
    for (const Int& v : *w.arc_values) j["arc_values"].push_back(v.convert_to<long long>());
  }
  return j.dump(2);
}

WindingClass framing_from_json(const std::string& text, const GenTable& t) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(ErrKind::Parse, "framing file is not a JSON object");
  WindingClass w;
  w.s = t.s;
  try {
    w.zeta = Int(j.at("zeta").get<long long>());
    for (const auto& [name, v] : j.at("base_values").items()) {
      if (!t.has(name)) fail(ErrKind::InvalidConfig, "framing names unknown curve " + name);
      w.base_values[name] = Int(v.get<long long>());
    }
    w.delta_value = Int(j.at("delta_value").get<long long>());
    for (const auto& v : j.at("marked_values")) w.marked_values.push_back(Int(v.get<long long>()));
    if (j.contains("arc_values")) {
      std::vector<Int> arcs;
      for (const auto& v : j["arc_values"]) arcs.push_back(Int(v.get<long long>()));
      w.arc_values = std::move(arcs);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrKind::Parse, std::string("framing file: ") + e.what());
  }
  for (const CurveRecord& r : t.curves)
    if (!w.base_values.count(r.name))
      fail(ErrKind::InvalidConfig, "framing file misses curve " + r.name);
  if ((int)w.marked_values.size() != t.s.P - 1)
    fail(ErrKind::InvalidConfig, "framing file has the wrong marked point count");
  return w;
}

} // namespace tk
