#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/mapping_class.hpp"
#include "twistkit/word.hpp"

namespace tk {

/* Framing-type class on the unit tangent bundle: the fiber value (level N),
   winding numbers of the lifted table curves, and optionally relative winding
   data for the standard arcs. Winding numbers of marked-point loops are kept
   separately; arcs only carry well-defined values at zero-winding points. */
struct WindingClass {
  Surface s;
  Int zeta = 1;
  std::map<std::string, Int> base_values;
  Int delta_value = 0;  // marked basepoint loop, positively oriented
  std::vector<Int> marked_values;  // loops around p_1 .. p_{P-1}
  std::optional<std::vector<Int>> arc_values;

  Int value(const std::string& name) const;
};

struct WindingChange {
  HVec vector;
};

struct BoundarySignature {
  std::vector<Int> values;  // one per puncture loop d_1 .. d_B
};

enum class ArcVerdict { Coboundary, Obstructed };

struct ArcConditionReport {
  bool eta_framing_ok = false;
  std::vector<Int> d_eta;  // coordinates over p_1 .. p_{P-1}
  std::optional<HVec> invariant_gamma;
  bool arc_basis_preserved = false;
  ArcVerdict verdict = ArcVerdict::Obstructed;
};

// monomial exponents of a determinant value as a homology class
HVec exponent_class(const std::vector<int>& exps, const Surface& s);

/* Reads winding numbers off the determinant cocycle: A(T_d, chi) is a power
   of chi([d]) and the exponent is W(d_hat). The stored fiber coefficients
   must solve the resulting linear system for some absolute class v, else the
   conventions are out of step and this fails Inconsistent. Closed one-marked-
   point configurations only. */
WindingClass derive_framing_from_A(const GenTable& t);

// the table's own splitting as an N-framing: W(d_hat) = N * fiber_coeff(d)
WindingClass reference_framing(const GenTable& t, const Int& n = 1);

// W' = N*W + v, v an absolute cohomology class given by values on the basis
WindingClass adjust_framing(const WindingClass& w, const Int& n, const std::vector<Int>& v);

/* The class whose character value is A(f, chi): accumulated over the twist
   word outer-to-inner as h <- h + e*(W(d_hat) + <[d],h>)*[d] for twists and
   h <- h + e*N*(2g+B-2)*[loop] for basepoint pushes; marked pushes are
   absolutely invisible. Requires f to carry its twist word. */
WindingChange pullback_change(const WindingClass& w, const MappingClass& f);

bool framed_membership(const WindingClass& w, const MappingClass& f);

// sum of oriented winding numbers against the Euler characteristic
bool coherence_check(const WindingClass& w,
                     const std::vector<std::pair<std::string, int>>& boundary,
                     const Int& euler);

BoundarySignature boundary_signature(const WindingClass& w);

/* Winding change of the k-th standard arc under f, by twist calculus: the
   arc's relative class evolves innermost-first while twist steps add
   crossing * W(d_hat). Push steps move classes but add no winding. */
Int arc_winding_change(const WindingClass& w, const MappingClass& f, int k);

// W(Delta_j) * [Delta_j], cross-checked against arc twist calculus
HVec cpsi_on_boundary_twists(const WindingClass& w, int j);

/* Conditions for a group to act on framed relative data: (a) a G-invariant
   relative class gamma with boundary D_eta, (b) arc-basis classes and
   windings preserved. Boundary signatures of eta and xi0 are compared and
   recorded; xi0 must have zero winding at every arc endpoint. */
ArcConditionReport arc_framed_conditions(const std::vector<MappingClass>& group,
                                         const WindingClass& eta, const WindingClass& xi0,
                                         const GenTable& t);

// JSON round trip for framing files; loading validates names and sizes
std::string framing_json(const WindingClass& w);
WindingClass framing_from_json(const std::string& text, const GenTable& t);

} // namespace tk
