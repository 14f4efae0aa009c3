#include "twistkit/cocycle.hpp"

namespace tk {

RatFn SymMode::det(const std::vector<std::vector<RatFn>>& m, int nv) {
  if (m.empty()) return RatFn::one(nv);
  return det_ratfn(m);
}

Rat NumMode::unit_inv(const Rat& u) {
  if (u == 0) fail(ErrKind::InvalidConfig, "character value 0 is not invertible");
  return 1 / u;
}

Rat NumMode::unit_pow(const Rat& u, const Int& e) {
  return rpow(u, e.convert_to<long>());
}

Rat NumMode::det(const std::vector<std::vector<Rat>>& m, int) {
  if (m.empty()) return 1;
  return q_det(m);
}

template <class M>
typename M::U CharacterOf<M>::on_class(const HVec& h) const {
  int hr = s.hrank();
  if (static_cast<int>(h.size()) < hr)
    fail(ErrKind::InvalidConfig, "class vector too short for the character");
  for (size_t k = hr; k < h.size(); ++k)
    if (h[k] != 0) fail(ErrKind::InvalidConfig, "character evaluated on a non-loop class");
  typename M::U out = M::unit_one(nv);
  for (int k = 0; k < hr; ++k)
    if (h[k] != 0) out = out * M::unit_pow(base[k], h[k]);
  return out;
}

std::vector<std::string> char_var_names(const Surface& s) {
  std::vector<std::string> names;
  for (int i = 1; i <= s.g; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  for (int j = 1; j < s.B; ++j) names.push_back("u" + std::to_string(j));
  return names;
}

SymChar standard_symbolic_character(const Surface& s) {
  s.check();
  SymChar chi;
  chi.s = s;
  chi.nv = s.hrank();
  for (int k = 0; k < chi.nv; ++k) {
    Exp e(chi.nv, 0);
    e[k] = 1;
    chi.base.push_back(MonomialForm{1, e});
  }
  return chi;
}

NumChar make_numeric_character(const Surface& s, std::vector<Rat> vals) {
  s.check();
  if (static_cast<int>(vals.size()) != s.hrank())
    fail(ErrKind::InvalidConfig, "numeric character needs one value per homology slot");
  for (auto& v : vals)
    if (v == 0) fail(ErrKind::InvalidConfig, "numeric character values must be nonzero");
  return NumChar{s, 0, std::move(vals)};
}

Gen dual_letter(Gen x, const Surface& s) {
  if (x < 1 || x > 2 * s.g) fail(ErrKind::InvalidConfig, "chart must drop a handle letter");
  return x % 2 == 1 ? x + 1 : x - 1;
}

template <class M>
CharacterOf<M> pushforward(const CharacterOf<M>& chi, const MappingClass& f) {
  ZMat minv = z_inverse_unimodular(homology_action(f, HMode::Absolute));
  CharacterOf<M> out;
  out.s = chi.s;
  out.nv = chi.nv;
  int hr = chi.s.hrank();
  for (int j = 0; j < hr; ++j) {
    typename M::U u = M::unit_one(chi.nv);
    for (int k = 0; k < hr; ++k)
      if (minv[k][j] != 0) u = u * M::unit_pow(chi.base[k], minv[k][j]);
    out.base.push_back(u);
  }
  return out;
}

template <class M>
bool chart_admissible(const CharacterOf<M>& chi, Gen chart) {
  return !M::unit_is_one(chi.on_letter(dual_letter(chart, chi.s)));
}

template <class M>
Gen default_chart(const CharacterOf<M>& chi, const CharacterOf<M>& fchi) {
  const Surface& s = chi.s;
  for (int i = s.g; i >= 1; --i)
    for (Gen c : {s.b(i), s.a(i)})
      if (chart_admissible(chi, c) && chart_admissible(fchi, c)) return c;
  fail(ErrKind::Chart, "no admissible chart for this character");
}

namespace {

/* lambda(w) = first + second * lambda(unknown), where the unknown letter's
   value is treated as an indeterminate. unknown = 0 evaluates outright. */
template <class M>
std::pair<typename M::R, typename M::R> eval_core(const CocycleOf<M>& lam, const Word& w,
                                                  Gen unknown) {
  const Surface& s = lam.chi.s;
  int nv = lam.chi.nv;
  typename M::R c0 = M::zero(nv), c1 = M::zero(nv);
  typename M::U pref = M::unit_one(nv);
  for (Gen x : w.ls) {
    Gen k = x > 0 ? x : -x;
    if (s.is_arc(k)) {
      if (!lam.based)
        fail(ErrKind::InvalidConfig, "arc letter on a cocycle without arc data");
      int a = k - s.loop_letters() - 1;
      if (x > 0) {
        c0 = c0 + M::to_ring(pref, nv) * lam.arc_vals[a];
        pref = pref * lam.arc_chars[a];
      } else {
        typename M::U inv = M::unit_inv(lam.arc_chars[a]);
        c0 = c0 - M::to_ring(pref * inv, nv) * lam.arc_vals[a];
        pref = pref * inv;
      }
      continue;
    }
    typename M::U cx = lam.chi.on_letter(k);
    if (x > 0) {
      if (k == unknown)
        c1 = c1 + M::to_ring(pref, nv);
      else
        c0 = c0 + M::to_ring(pref, nv) * lam.vals[k - 1];
      pref = pref * cx;
    } else {
      typename M::U inv = M::unit_inv(cx);
      if (k == unknown)
        c1 = c1 - M::to_ring(pref * inv, nv);
      else
        c0 = c0 - M::to_ring(pref * inv, nv) * lam.vals[k - 1];
      pref = pref * inv;
    }
  }
  return {c0, c1};
}

Word relation_word(const Surface& s) {
  return s.closed() ? commutator_relator(s) : boundary_word(s);
}

} // namespace

template <class M>
typename M::R evaluate_cocycle(const CocycleOf<M>& lam, const Word& w) {
  return eval_core(lam, w, 0).first;
}

template <class M>
CocycleBasisOf<M> standard_basis(const Surface& s, const CharacterOf<M>& chi, Gen chart) {
  s.check();
  CocycleBasisOf<M> out;
  out.s = s;
  out.chi = chi;
  if (s.closed()) {
    out.solved = chart != 0 ? chart : default_chart(chi, chi);
    if (!chart_admissible(chi, out.solved))
      fail(ErrKind::Chart, "chart is not admissible for this character");
  } else {
    if (chart != 0 && chart != s.d(s.B))
      fail(ErrKind::InvalidConfig, "punctured bases always drop the last puncture loop");
    out.solved = s.d(s.B);
  }
  for (Gen x = 1; x <= s.loop_letters(); ++x)
    if (x != out.solved) out.retained.push_back(x);
  Word rel = relation_word(s);
  for (size_t i = 0; i < out.retained.size(); ++i) {
    CocycleOf<M> lam;
    lam.chi = chi;
    lam.vals.assign(s.loop_letters(), M::zero(chi.nv));
    lam.vals[out.retained[i] - 1] = M::one(chi.nv);
    auto [c0, c1] = eval_core(lam, rel, out.solved);
    if (M::is_zero(c1)) fail(ErrKind::Chart, "chart is not admissible for this character");
    lam.vals[out.solved - 1] = -(c0 / c1);
    out.basis.push_back(lam);
  }
  return out;
}

template <class M>
CocycleOf<M> coboundary_cocycle(const typename M::R& v, const CharacterOf<M>& chi) {
  CocycleOf<M> lam;
  lam.chi = chi;
  typename M::R one = M::one(chi.nv);
  for (Gen x = 1; x <= chi.s.loop_letters(); ++x)
    lam.vals.push_back((one - M::to_ring(chi.on_letter(x), chi.nv)) * v);
  return lam;
}

template <class M>
CocycleOf<M> extend_to_based(const CocycleOf<M>& lam, std::vector<typename M::R> arc_vals,
                             std::vector<typename M::U> arc_chars) {
  if (lam.based) fail(ErrKind::InvalidConfig, "cocycle already has arc data");
  int na = lam.chi.s.arc_letters();
  if (static_cast<int>(arc_vals.size()) != na || static_cast<int>(arc_chars.size()) != na)
    fail(ErrKind::InvalidConfig, "need one arc value and one arc character value per arc");
  for (auto& b : arc_chars)
    if (!M::unit_invertible(b))
      fail(ErrKind::InvalidConfig, "arc character values must be invertible");
  CocycleOf<M> out = lam;
  out.based = true;
  out.arc_vals = std::move(arc_vals);
  out.arc_chars = std::move(arc_chars);
  return out;
}

template <class M>
CocycleBasisOf<M> based_basis(const Surface& s, const CharacterOf<M>& chi, Gen chart) {
  CocycleBasisOf<M> out = standard_basis(s, chi, chart);
  int na = s.arc_letters();
  std::vector<typename M::R> zeros(na, M::zero(chi.nv));
  std::vector<typename M::U> ones(na, M::unit_one(chi.nv));
  for (auto& lam : out.basis) lam = extend_to_based(lam, zeros, ones);
  for (int k = 1; k <= na; ++k) {
    CocycleOf<M> xi;
    xi.chi = chi;
    xi.vals.assign(s.loop_letters(), M::zero(chi.nv));
    auto vals = zeros;
    vals[k - 1] = M::one(chi.nv);
    xi = extend_to_based(xi, vals, ones);
    out.basis.push_back(xi);
    out.retained.push_back(s.arc(k));
  }
  return out;
}

template <class M>
std::vector<std::vector<typename M::R>> action_matrix(const MappingClass& f,
                                                      const CocycleBasisOf<M>& basis) {
  size_t n = basis.retained.size();
  std::vector<Word> images;
  for (Gen c : basis.retained) images.push_back(f.endo.apply(Word{{c}}));
  std::vector<std::vector<typename M::R>> m(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i].push_back(evaluate_cocycle(basis.basis[i], images[j]));
  return m;
}

std::vector<Word> normalize_arc_images(const MappingClass& f) {
  const Surface& s = f.s;
  std::vector<Word> etas;
  for (int k = 1; k <= s.arc_letters(); ++k) {
    Word im = f.endo.apply(Word{{s.arc(k)}});
    if (im.empty() || im.ls.back() != s.arc(k))
      fail(ErrKind::Inconsistent,
           "image of arc c" + std::to_string(k) + " does not end with the arc, endpoint moved");
    Word eta{{im.ls.begin(), im.ls.end() - 1}};
    for (Gen x : eta.ls)
      if (s.is_arc(x))
        fail(ErrKind::Inconsistent,
             "image of arc c" + std::to_string(k) + " is not a loop followed by the arc");
    etas.push_back(eta);
  }
  return etas;
}

template <class M>
typename M::R relative_factor(const MappingClass& f, const CharacterOf<M>& chi) {
  CharacterOf<M> chi2 = pushforward(chi, f);
  typename M::U u = M::unit_one(chi.nv);
  for (auto& eta : normalize_arc_images(f)) u = u * chi2.on_word(eta);
  return M::to_ring(u, chi.nv);
}

template <class M>
DetValueOf<M> determinant_cocycle(const MappingClass& f, const CharacterOf<M>& chi, Gen chart) {
  const Surface& s = f.s;
  int nv = chi.nv;
  CharacterOf<M> chi2 = pushforward(chi, f);
  DetValueOf<M> out{M::zero(nv), M::zero(nv), M::one(nv), std::nullopt};
  Gen c = 0;
  typename M::R pre = M::one(nv);
  if (s.closed()) {
    c = chart != 0 ? chart : default_chart(chi, chi2);
    if (!chart_admissible(chi, c) || !chart_admissible(chi2, c))
      fail(ErrKind::Chart, "chart is not admissible for the character or its pushforward");
    typename M::R one = M::one(nv);
    pre = (M::to_ring(chi2.on_letter(dual_letter(c, s)), nv) - one) /
          (M::to_ring(chi.on_letter(dual_letter(c, s)), nv) - one);
  }
  out.abs_part = pre * M::det(action_matrix(f, standard_basis(s, chi2, c)), nv);
  if (s.arc_letters() > 0) {
    typename M::U u = M::unit_one(nv);
    for (auto& eta : normalize_arc_images(f)) u = u * chi2.on_word(eta);
    out.rel_part = M::to_ring(u, nv);
    out.value = pre * M::det(action_matrix(f, based_basis(s, chi2, c)), nv);
    if (out.value != out.abs_part * out.rel_part)
      fail(ErrKind::Inconsistent, "relative split disagrees with the based determinant");
  } else {
    out.value = out.abs_part;
  }
  out.monomial = M::monomial(out.value);
  return out;
}

void validate_mapping_class(const MappingClass& f) {
  check_relator_preserved(f);
  check_symplectic(f);
  if (f.s.closed()) {
    SymChar chi = standard_symbolic_character(f.s);
    SymBasis basis = standard_basis(f.s, chi);
    Word img = f.endo.apply(commutator_relator(f.s));
    for (auto& lam : basis.basis)
      if (!evaluate_cocycle(lam, img).is_zero())
        fail(ErrKind::Inconsistent,
             "a standard cocycle does not annihilate the relator image of " + f.label);
  }
}

#define TK_INSTANTIATE(M)                                                                   \
  template struct CharacterOf<M>;                                                           \
  template CharacterOf<M> pushforward<M>(const CharacterOf<M>&, const MappingClass&);       \
  template bool chart_admissible<M>(const CharacterOf<M>&, Gen);                            \
  template Gen default_chart<M>(const CharacterOf<M>&, const CharacterOf<M>&);              \
  template CocycleBasisOf<M> standard_basis<M>(const Surface&, const CharacterOf<M>&, Gen); \
  template M::R evaluate_cocycle<M>(const CocycleOf<M>&, const Word&);                      \
  template CocycleOf<M> coboundary_cocycle<M>(const M::R&, const CharacterOf<M>&);          \
  template CocycleOf<M> extend_to_based<M>(const CocycleOf<M>&, std::vector<M::R>,          \
                                           std::vector<M::U>);                              \
  template CocycleBasisOf<M> based_basis<M>(const Surface&, const CharacterOf<M>&, Gen);    \
  template std::vector<std::vector<M::R>> action_matrix<M>(const MappingClass&,             \
                                                           const CocycleBasisOf<M>&);       \
  template M::R relative_factor<M>(const MappingClass&, const CharacterOf<M>&);             \
  template DetValueOf<M> determinant_cocycle<M>(const MappingClass&, const CharacterOf<M>&, \
                                                Gen);

TK_INSTANTIATE(SymMode)
TK_INSTANTIATE(NumMode)
#undef TK_INSTANTIATE

} // namespace tk
