#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/error.hpp"
#include "twistkit/rational.hpp"

namespace tk {

/* Exponent vector, one slot per variable, lex-ordered by std::vector's
   comparison. Negative entries are allowed (Laurent terms). */
using Exp = std::vector<int>;

Exp exp_add(const Exp& u, const Exp& v);
Exp exp_sub(const Exp& u, const Exp& v);

struct LaurentPoly {
  int nvars = 0;
  std::map<Exp, Rat> terms;  // invariant: no zero coefficients stored

  static LaurentPoly zero(int nvars);
  static LaurentPoly constant(int nvars, const Rat& c);
  static LaurentPoly variable(int nvars, int i, int e = 1);
  static LaurentPoly monomial(const Exp& e, const Rat& c);

  bool is_zero() const { return terms.empty(); }
  void set(const Exp& e, const Rat& c);
  void add_term(const Exp& e, const Rat& c);

  bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p);
LaurentPoly operator*(const Rat& c, const LaurentPoly& p);
LaurentPoly lp_pow(const LaurentPoly& p, int e);  // e < 0 only for single-term p

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

Rat evaluate(const LaurentPoly& p, const std::vector<Rat>& point);

LaurentPoly det_poly(std::vector<std::vector<LaurentPoly>> m);  // Bareiss, fraction free

/* A unit of the Laurent ring: coeff * prod x_i^exps[i], coeff != 0. */
struct MonomialForm {
  Rat coeff;
  Exp exps;

  static MonomialForm one(int nvars);
  MonomialForm inv() const;
  bool operator==(const MonomialForm&) const = default;
};
MonomialForm operator*(const MonomialForm& u, const MonomialForm& v);
MonomialForm mf_pow(const MonomialForm& u, const Int& e);

/* Quotient of two Laurent polynomials kept in a canonical form: shifted so
   num and den are ordinary polynomials with joint minimum exponent 0 in each
   variable, den a primitive integer polynomial with positive lex-leading
   coefficient, and the primitive parts of num and den coprime. */
struct RatFn {
  LaurentPoly num;
  LaurentPoly den;

  static RatFn zero(int nvars);
  static RatFn one(int nvars);
  static RatFn from_poly(LaurentPoly p);
  static RatFn from_monomial(const MonomialForm& m, int nvars);
  static RatFn make(LaurentPoly num, LaurentPoly den);  // normalizes

  int nvars() const { return num.nvars; }
  bool is_zero() const { return num.is_zero(); }
  bool is_one() const;

  std::optional<MonomialForm> as_monomial() const;
  Rat evaluate(const std::vector<Rat>& point) const;

  bool operator==(const RatFn&) const = default;
};

RatFn operator+(const RatFn& p, const RatFn& q);
RatFn operator-(const RatFn& p, const RatFn& q);
RatFn operator*(const RatFn& p, const RatFn& q);
RatFn operator/(const RatFn& p, const RatFn& q);
RatFn operator-(const RatFn& p);
RatFn rf_pow(const RatFn& p, const Int& e);

RatFn det_ratfn(const std::vector<std::vector<RatFn>>& m);

std::string format_poly(const LaurentPoly& p, const std::vector<std::string>& names);
std::string format_ratfn(const RatFn& f, const std::vector<std::string>& names);

} // namespace tk
