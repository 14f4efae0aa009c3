#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/cocycle.hpp"
#include "twistkit/linalg.hpp"
#include "twistkit/mapping_class.hpp"
#include "twistkit/winding.hpp"

namespace tk {

/* Volume element of the cocycle space in one chart: the scalar in front of
   the wedge of the dual basis functionals. */
template <class M>
struct FiberFormOf {
  Gen chart = 0;
  typename M::R coefficient;
  std::vector<Gen> ordered_basis;
};
using SymFiberForm = FiberFormOf<SymMode>;
using NumFiberForm = FiberFormOf<NumMode>;

template <class M>
FiberFormOf<M> omega_chart(const Surface& s, const CharacterOf<M>& chi, Gen chart = 0);

/* coefficient_c * det(change of basis) = coefficient_t, exactly. */
template <class M>
bool chart_consistency(const Surface& s, const CharacterOf<M>& chi, Gen c, Gen t);

struct CoboundaryCertificate {
  QRow v;                        // rational class, values on the homology basis
  Int n = 1;                     // least positive integer clearing v
  std::vector<Int> integral_class;  // n * v
};

struct Obstruction {
  std::vector<size_t> witness;   // generator indices of an inconsistent subsystem
  int rank_rows = 0;
  int rank_augmented = 0;        // strictly larger on a verified witness
};

struct CoboundaryResult {
  std::optional<CoboundaryCertificate> certificate;
  std::optional<Obstruction> obstruction;
};

/* Finds v with (f*-1)^T v = -exponent(f) for every supplied generator, i.e.
   a translate W + v invariant under them all. The exponent vectors are the
   monomial exponents of the determinant cocycle, passed in as classes. On an
   inconsistent system the witness subset is re-verified by two independent
   rank computations before being returned. */
CoboundaryResult coboundary_solve(const Surface& s,
                                  const std::vector<std::pair<MappingClass, HVec>>& generators);

/* N * W + cleared v as a winding class; re-validates by framed_membership
   against every generator and fails Inconsistent when the certificate does
   not actually stabilize them. */
WindingClass n_framing_extract(const CoboundaryCertificate& cert, const WindingClass& w,
                               const std::vector<MappingClass>& generators);

std::string certificate_json(const CoboundaryResult& r);

} // namespace tk
