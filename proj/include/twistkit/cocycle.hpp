#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/laurent.hpp"
#include "twistkit/mapping_class.hpp"
#include "twistkit/word.hpp"

namespace tk {

/* The cocycle machinery runs in two modes sharing one implementation:
   symbolic (values are rational functions of the character coordinates,
   character values are Laurent monomials) and numeric (exact rationals).
   A mode bundles the ring R of cocycle values and the group U of character
   values, which are always invertible. */
struct SymMode {
  using R = RatFn;
  using U = MonomialForm;
  static R zero(int nv) { return RatFn::zero(nv); }
  static R one(int nv) { return RatFn::one(nv); }
  static bool is_zero(const R& x) { return x.is_zero(); }
  static R to_ring(const U& u, int nv) { return RatFn::from_monomial(u, nv); }
  static U unit_one(int nv) { return MonomialForm::one(nv); }
  static U unit_inv(const U& u) { return u.inv(); }
  static U unit_pow(const U& u, const Int& e) { return mf_pow(u, e); }
  static bool unit_is_one(const U& u) {
    return u == MonomialForm::one(static_cast<int>(u.exps.size()));
  }
  static bool unit_invertible(const U& u) { return u.coeff != 0; }
  static std::optional<MonomialForm> monomial(const R& x) { return x.as_monomial(); }
  static R det(const std::vector<std::vector<R>>& m, int nv);
};

struct NumMode {
  using R = Rat;
  using U = Rat;
  static R zero(int) { return 0; }
  static R one(int) { return 1; }
  static bool is_zero(const R& x) { return x == 0; }
  static R to_ring(const U& u, int) { return u; }
  static U unit_one(int) { return 1; }
  static U unit_inv(const U& u);
  static U unit_pow(const U& u, const Int& e);
  static bool unit_is_one(const U& u) { return u == 1; }
  static bool unit_invertible(const U& u) { return u != 0; }
  static std::optional<MonomialForm> monomial(const R&) { return std::nullopt; }
  static R det(const std::vector<std::vector<R>>& m, int nv);
};

/* Character of the surface group: a unit per homology basis slot
   [a1,b1,..,ag,bg, d1..d_{B-1}]. Words evaluate through their class. */
template <class M>
struct CharacterOf {
  Surface s;
  int nv = 0;
  std::vector<typename M::U> base;

  typename M::U on_class(const HVec& h) const;
  typename M::U on_word(const Word& w) const { return on_class(abelianize(w, s)); }
  typename M::U on_letter(Gen x) const { return on_word(Word{{x}}); }
  bool operator==(const CharacterOf&) const = default;
};
using SymChar = CharacterOf<SymMode>;
using NumChar = CharacterOf<NumMode>;

// standard coordinates x1,y1,..,xg,yg,u1..u_{B-1}
std::vector<std::string> char_var_names(const Surface& s);
SymChar standard_symbolic_character(const Surface& s);
NumChar make_numeric_character(const Surface& s, std::vector<Rat> vals);

/* Twisted cocycle: a value per positive loop letter, d_B and the dropped
   chart letter included (solved from the relation at construction). The
   based variant adds arc values and arc character values. */
template <class M>
struct CocycleOf {
  CharacterOf<M> chi;
  std::vector<typename M::R> vals;  // index = loop letter - 1
  bool based = false;
  std::vector<typename M::R> arc_vals;
  std::vector<typename M::U> arc_chars;
};
using SymCocycle = CocycleOf<SymMode>;
using NumCocycle = CocycleOf<NumMode>;

template <class M>
struct CocycleBasisOf {
  Surface s;
  CharacterOf<M> chi;
  Gen solved;                   // chart letter (closed) or d_B (punctured)
  std::vector<Gen> retained;    // coordinate letters, basis[i](retained[j]) = delta_ij
  std::vector<CocycleOf<M>> basis;
};
using SymBasis = CocycleBasisOf<SymMode>;
using NumBasis = CocycleBasisOf<NumMode>;

template <class M>
struct DetValueOf {
  typename M::R value, abs_part, rel_part;  // value = abs_part * rel_part
  std::optional<MonomialForm> monomial;     // populated in symbolic mode
};
using SymDetValue = DetValueOf<SymMode>;
using NumDetValue = DetValueOf<NumMode>;

Gen dual_letter(Gen x, const Surface& s);

template <class M>
CharacterOf<M> pushforward(const CharacterOf<M>& chi, const MappingClass& f);

template <class M>
bool chart_admissible(const CharacterOf<M>& chi, Gen chart);

// first admissible chart for both characters, scanning b_g, a_g, b_{g-1}, ..
template <class M>
Gen default_chart(const CharacterOf<M>& chi, const CharacterOf<M>& fchi);

// chart = 0 means the default (closed) or the forced d_B drop (punctured)
template <class M>
CocycleBasisOf<M> standard_basis(const Surface& s, const CharacterOf<M>& chi, Gen chart = 0);

template <class M>
typename M::R evaluate_cocycle(const CocycleOf<M>& lam, const Word& w);

template <class M>
CocycleOf<M> coboundary_cocycle(const typename M::R& v, const CharacterOf<M>& chi);

template <class M>
CocycleOf<M> extend_to_based(const CocycleOf<M>& lam, std::vector<typename M::R> arc_vals,
                             std::vector<typename M::U> arc_chars);

// loop basis canonically extended plus one arc cocycle per arc
template <class M>
CocycleBasisOf<M> based_basis(const Surface& s, const CharacterOf<M>& chi, Gen chart = 0);

// M_ij = basis_i(f(retained_j)); pass the basis at the pushforward character
template <class M>
std::vector<std::vector<typename M::R>> action_matrix(const MappingClass& f,
                                                      const CocycleBasisOf<M>& basis);

// eta_k with f(c_k) = eta_k . c_k, each verified to be a based loop
std::vector<Word> normalize_arc_images(const MappingClass& f);

template <class M>
typename M::R relative_factor(const MappingClass& f, const CharacterOf<M>& chi);

template <class M>
DetValueOf<M> determinant_cocycle(const MappingClass& f, const CharacterOf<M>& chi,
                                  Gen chart = 0);

/* Full validity report: relator preserved up to rotation, symplectic on the
   handle block, and in the closed case symbolic annihilation of the image of
   the relator by every standard basis cocycle. Throws on the failing check. */
void validate_mapping_class(const MappingClass& f);

} // namespace tk
