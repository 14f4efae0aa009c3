#include "twistkit/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace tk {

Exp exp_add(const Exp& u, const Exp& v) {
  Exp out = u;
  for (size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  return out;
}

Exp exp_sub(const Exp& u, const Exp& v) {
  Exp out = u;
  for (size_t i = 0; i < v.size(); ++i) out[i] -= v[i];
  return out;
}

LaurentPoly LaurentPoly::zero(int nvars) { return {nvars, {}}; }

LaurentPoly LaurentPoly::constant(int nvars, const Rat& c) {
  LaurentPoly p{nvars, {}};
  if (c != 0) p.terms[Exp(nvars, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int e) {
  if (i < 0 || i >= nvars) fail(ErrKind::InvalidConfig, "variable index out of range");
  Exp ex(nvars, 0);
  ex[i] = e;
  LaurentPoly p{nvars, {}};
  p.terms[ex] = 1;
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exp& e, const Rat& c) {
  LaurentPoly p{static_cast<int>(e.size()), {}};
  if (c != 0) p.terms[e] = c;
  return p;
}

void LaurentPoly::set(const Exp& e, const Rat& c) {
  if (c == 0)
    terms.erase(e);
  else
    terms[e] = c;
}

void LaurentPoly::add_term(const Exp& e, const Rat& c) {
  auto it = terms.find(e);
  if (it == terms.end()) {
    if (c != 0) terms[e] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

static void check_arity(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.nvars != q.nvars)
    fail(ErrKind::InvalidConfig, "arity mismatch: " + std::to_string(p.nvars) + " vs " +
                                     std::to_string(q.nvars) + " variables");
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  check_arity(p, q);
  LaurentPoly out = p;
  for (auto& [e, c] : q.terms) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly out = p;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  check_arity(p, q);
  LaurentPoly out{p.nvars, {}};
  for (auto& [e1, c1] : p.terms)
    for (auto& [e2, c2] : q.terms) out.add_term(exp_add(e1, e2), c1 * c2);
  return out;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) {
  if (c == 0) return LaurentPoly::zero(p.nvars);
  LaurentPoly out = p;
  for (auto& [e, v] : out.terms) v *= c;
  return out;
}

LaurentPoly lp_pow(const LaurentPoly& p, int e) {
  if (e < 0) {
    if (p.terms.size() != 1)
      fail(ErrKind::Indeterminate, "negative power of a non-monomial");
    auto& [ex, c] = *p.terms.begin();
    Exp ne = ex;
    for (auto& x : ne) x *= e;
    return LaurentPoly::monomial(ne, rpow(c, e));
  }
  LaurentPoly out = LaurentPoly::constant(p.nvars, 1);
  LaurentPoly base = p;
  int k = e;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

/* Shift a Laurent polynomial into an ordinary one; returns the per-variable
   minimum exponents that were removed. */
static Exp min_exps(const LaurentPoly& p) {
  Exp m(p.nvars, 0);
  bool first = true;
  for (auto& [e, c] : p.terms) {
    for (int i = 0; i < p.nvars; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

static LaurentPoly shift_down(const LaurentPoly& p, const Exp& m) {
  LaurentPoly out{p.nvars, {}};
  for (auto& [e, c] : p.terms) out.terms[exp_sub(e, m)] = c;
  return out;
}

/* Lex division of ordinary polynomials. The leading term of an exact quotient
   divides the leading term of the dividend, so greedy division either finds
   the quotient or proves there is none. */
static std::optional<LaurentPoly> divide_ordinary(LaurentPoly p, const LaurentPoly& q) {
  LaurentPoly quot{p.nvars, {}};
  auto lead = [](const LaurentPoly& f) { return std::prev(f.terms.end()); };
  while (!p.is_zero()) {
    auto lp = lead(p);
    auto lq = lead(q);
    Exp diff = exp_sub(lp->first, lq->first);
    if (std::any_of(diff.begin(), diff.end(), [](int x) { return x < 0; })) return std::nullopt;
    Rat c = lp->second / lq->second;
    quot.add_term(diff, c);
    p = p - LaurentPoly::monomial(diff, c) * q;
  }
  return quot;
}

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  check_arity(p, q);
  if (q.is_zero()) fail(ErrKind::Indeterminate, "division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly::zero(p.nvars);
  Exp mp = min_exps(p), mq = min_exps(q);
  auto quot = divide_ordinary(shift_down(p, mp), shift_down(q, mq));
  if (!quot) return std::nullopt;
  Exp shift = exp_sub(mp, mq);
  LaurentPoly out{p.nvars, {}};
  for (auto& [e, c] : quot->terms) out.terms[exp_add(e, shift)] = c;
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = try_exact_divide(p, q);
  if (!r) fail(ErrKind::Indeterminate, "not divisible");
  return *r;
}

Rat evaluate(const LaurentPoly& p, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != p.nvars)
    fail(ErrKind::InvalidConfig, "arity mismatch: point has " + std::to_string(point.size()) +
                                     " coordinates, polynomial has " + std::to_string(p.nvars) +
                                     " variables");
  Rat out = 0;
  for (auto& [e, c] : p.terms) {
    Rat t = c;
    for (int i = 0; i < p.nvars; ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0 && e[i] < 0)
        fail(ErrKind::Indeterminate, "pole at point: negative power of a zero coordinate");
      t *= rpow(point[i], e[i]);
    }
    out += t;
  }
  return out;
}

/* Integer polynomials, used only inside the gcd pipeline. */
namespace {

using ZPoly = std::map<Exp, Int>;

int zp_nvars(const ZPoly& p) { return p.empty() ? 0 : static_cast<int>(p.begin()->first.size()); }

ZPoly zp_mul(const ZPoly& p, const ZPoly& q) {
  ZPoly out;
  for (auto& [e1, c1] : p)
    for (auto& [e2, c2] : q) {
      Exp e = exp_add(e1, e2);
      auto it = out.find(e);
      if (it == out.end())
        out[e] = c1 * c2;
      else {
        it->second += c1 * c2;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

ZPoly zp_sub(const ZPoly& p, const ZPoly& q) {
  ZPoly out = p;
  for (auto& [e, c] : q) {
    auto it = out.find(e);
    if (it == out.end())
      out[e] = -c;
    else {
      it->second -= c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

std::optional<ZPoly> zp_divide(ZPoly p, const ZPoly& q) {
  ZPoly quot;
  while (!p.empty()) {
    auto lp = std::prev(p.end());
    auto lq = std::prev(q.end());
    Exp diff = exp_sub(lp->first, lq->first);
    if (std::any_of(diff.begin(), diff.end(), [](int x) { return x < 0; })) return std::nullopt;
    if (lp->second % lq->second != 0) return std::nullopt;
    Int c = lp->second / lq->second;
    quot[diff] = c;
    ZPoly t;
    t[diff] = c;
    p = zp_sub(p, zp_mul(t, q));
  }
  return quot;
}

int zp_degree(const ZPoly& p, int v) {
  int d = 0;
  for (auto& [e, c] : p) d = std::max(d, e[v]);
  return d;
}

bool zp_uses(const ZPoly& p, int v) {
  for (auto& [e, c] : p)
    if (e[v] != 0) return true;
  return false;
}

// coefficient of v^k, as a polynomial with the v slot zeroed
ZPoly zp_coeff(const ZPoly& p, int v, int k) {
  ZPoly out;
  for (auto& [e, c] : p)
    if (e[v] == k) {
      Exp e2 = e;
      e2[v] = 0;
      out[e2] = c;
    }
  return out;
}

ZPoly zp_shift_var(const ZPoly& p, int v, int k) {
  ZPoly out;
  for (auto& [e, c] : p) {
    Exp e2 = e;
    e2[v] += k;
    out[e2] = c;
  }
  return out;
}

ZPoly zp_gcd(ZPoly p, ZPoly q);
ZPoly zp_gcd_prs(ZPoly p, ZPoly q);

// gcd of the v-coefficients
ZPoly zp_content(const ZPoly& p, int v) {
  ZPoly g;
  for (int k = 0; k <= zp_degree(p, v); ++k) {
    ZPoly c = zp_coeff(p, v, k);
    if (!c.empty()) g = g.empty() ? c : zp_gcd(g, c);
  }
  return g;
}

ZPoly zp_primitive(const ZPoly& p, int v, ZPoly* content_out = nullptr) {
  if (p.empty()) return p;
  ZPoly c = zp_content(p, v);
  if (content_out) *content_out = c;
  auto q = zp_divide(p, c);
  return *q;
}

ZPoly zp_prem(ZPoly a, const ZPoly& b, int v) {
  int db = zp_degree(b, v);
  ZPoly lcb = zp_coeff(b, v, db);
  while (!a.empty() && zp_degree(a, v) >= db) {
    int da = zp_degree(a, v);
    ZPoly lca = zp_coeff(a, v, da);
    // leading v-terms cancel, so the v-degree strictly drops
    a = zp_sub(zp_mul(a, lcb), zp_shift_var(zp_mul(b, lca), v, da - db));
  }
  return a;
}

Int zp_lead_sign(const ZPoly& p) {
  if (p.empty()) return 0;
  return std::prev(p.end())->second > 0 ? 1 : -1;
}

ZPoly zp_make_positive(ZPoly p) {
  if (zp_lead_sign(p) < 0)
    for (auto& [e, c] : p) c = -c;
  return p;
}

/* Primitive PRS gcd, recursing on the highest variable present. Reliable but
   slow on coprime inputs, so it is only the fallback behind zp_gcd. */
ZPoly zp_gcd_prs(ZPoly p, ZPoly q) {
  if (p.empty()) return zp_make_positive(q);
  if (q.empty()) return zp_make_positive(p);
  int n = zp_nvars(p);
  int v = -1;
  for (int i = n - 1; i >= 0; --i)
    if (zp_uses(p, i) || zp_uses(q, i)) {
      v = i;
      break;
    }
  if (v < 0) {
    Int g = boost::multiprecision::gcd(p.begin()->second, q.begin()->second);
    if (g < 0) g = -g;
    return ZPoly{{Exp(n, 0), g}};
  }
  ZPoly cp, cq;
  ZPoly pp = zp_primitive(p, v, &cp);
  ZPoly qp = zp_primitive(q, v, &cq);
  ZPoly cg = zp_gcd_prs(cp, cq);
  if (zp_degree(pp, v) < zp_degree(qp, v)) std::swap(pp, qp);
  while (!qp.empty()) {
    ZPoly r = zp_prem(pp, qp, v);
    pp = qp;
    qp = r.empty() ? r : zp_primitive(r, v, nullptr);
  }
  return zp_make_positive(zp_mul(cg, pp));
}

Int zp_int_content(const ZPoly& p) {
  Int g = 0;
  for (auto& [e, c] : p) g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
  return g;
}

ZPoly zp_div_int(const ZPoly& p, const Int& k) {
  ZPoly out;
  for (auto& [e, c] : p) out[e] = c / k;
  return out;
}

Int zp_height(const ZPoly& p) {
  Int h = 0;
  for (auto& [e, c] : p) h = std::max(h, c < 0 ? Int(-c) : c);
  return h;
}

ZPoly zp_eval_var(const ZPoly& p, int v, const Int& xi) {
  ZPoly out;
  for (auto& [e, c] : p) {
    Exp e2 = e;
    e2[v] = 0;
    Int t = c * ipow(xi, e[v]);
    auto it = out.find(e2);
    if (it == out.end())
      out[e2] = t;
    else {
      it->second += t;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

/* Balanced base-xi digits of every coefficient, reassembled as powers of v. */
ZPoly zp_reconstruct(ZPoly w, int v, const Int& xi) {
  ZPoly g;
  for (int k = 0; !w.empty(); ++k) {
    ZPoly next;
    for (auto& [e, c] : w) {
      Int r = c % xi;
      if (2 * r >= xi) r -= xi;
      if (2 * r < -xi) r += xi;
      if (r != 0) {
        Exp e2 = e;
        e2[v] = k;
        g[e2] = r;
      }
      Int rest = (c - r) / xi;
      if (rest != 0) next[e] = rest;
    }
    w = std::move(next);
  }
  return g;
}

/* Heuristic gcd: evaluate the top variable at a large integer, take the gcd
   one level down, lift by balanced digits, then certify by trial division.
   A failed certificate retries with a bigger point and finally falls back to
   the PRS, so the answer is always exact. */
ZPoly zp_gcd(ZPoly p, ZPoly q) {
  if (p.empty()) return zp_make_positive(q);
  if (q.empty()) return zp_make_positive(p);
  int n = zp_nvars(p);
  int v = -1;
  for (int i = n - 1; i >= 0; --i)
    if (zp_uses(p, i) || zp_uses(q, i)) {
      v = i;
      break;
    }
  if (v < 0) {
    Int g = boost::multiprecision::gcd(p.begin()->second, q.begin()->second);
    if (g < 0) g = -g;
    return ZPoly{{Exp(n, 0), g}};
  }

  Int cp = zp_int_content(p), cq = zp_int_content(q);
  Int cg = boost::multiprecision::gcd(cp, cq);
  ZPoly pp = zp_div_int(p, cp), qp = zp_div_int(q, cq);
  ZPoly scale{{Exp(n, 0), cg}};

  Int xi = 2 * std::min(zp_height(pp), zp_height(qp)) + 2;
  for (int tries = 0; tries < 6; ++tries) {
    ZPoly ge = zp_gcd(zp_eval_var(pp, v, xi), zp_eval_var(qp, v, xi));
    ZPoly g = zp_reconstruct(ge, v, xi);
    if (!g.empty()) {
      Int c = zp_int_content(g);
      if (c > 1) g = zp_div_int(g, c);
      if (zp_divide(pp, g) && zp_divide(qp, g)) return zp_make_positive(zp_mul(scale, g));
    }
    xi = xi * 2 + 1;
  }
  return zp_make_positive(zp_mul(scale, zp_gcd_prs(pp, qp)));
}

/* Split an ordinary rational-coefficient polynomial into a rational scalar
   times a primitive integer polynomial with positive lex-leading coefficient. */
std::pair<Rat, ZPoly> integerize(const LaurentPoly& p) {
  Int L = 1;
  for (auto& [e, c] : p.terms) {
    Int d = den(c);
    L = L / boost::multiprecision::gcd(L, d) * d;
  }
  ZPoly z;
  Int g = 0;
  for (auto& [e, c] : p.terms) {
    Int v = num(c) * (L / den(c));
    z[e] = v;
    g = boost::multiprecision::gcd(g, v < 0 ? Int(-v) : v);
  }
  if (z.empty()) return {Rat(0), z};
  Int s = zp_lead_sign(z);
  Int gs = g * s;
  for (auto& [e, c] : z) c /= gs;
  return {Rat(gs, L), z};
}

LaurentPoly zp_to_lp(const ZPoly& z, int nvars) {
  LaurentPoly out{nvars, {}};
  for (auto& [e, c] : z) out.terms[e] = Rat(c);
  return out;
}

} // namespace

MonomialForm MonomialForm::one(int nvars) { return {Rat(1), Exp(nvars, 0)}; }

MonomialForm MonomialForm::inv() const {
  MonomialForm out{Rat(1) / coeff, exps};
  for (auto& x : out.exps) x = -x;
  return out;
}

MonomialForm operator*(const MonomialForm& u, const MonomialForm& v) {
  return {u.coeff * v.coeff, exp_add(u.exps, v.exps)};
}

MonomialForm mf_pow(const MonomialForm& u, const Int& e) {
  long k = static_cast<long>(e);
  MonomialForm out{rpow(u.coeff, k), u.exps};
  for (auto& x : out.exps) x *= static_cast<int>(k);
  return out;
}

RatFn RatFn::zero(int nvars) {
  return {LaurentPoly::zero(nvars), LaurentPoly::constant(nvars, 1)};
}

RatFn RatFn::one(int nvars) {
  return {LaurentPoly::constant(nvars, 1), LaurentPoly::constant(nvars, 1)};
}

RatFn RatFn::from_poly(LaurentPoly p) {
  int nv = p.nvars;
  return make(std::move(p), LaurentPoly::constant(nv, 1));
}

RatFn RatFn::from_monomial(const MonomialForm& m, int nvars) {
  return make(LaurentPoly::monomial(m.exps, m.coeff), LaurentPoly::constant(nvars, 1));
}

RatFn RatFn::make(LaurentPoly n, LaurentPoly d) {
  check_arity(n, d);
  if (d.is_zero()) fail(ErrKind::Indeterminate, "zero denominator");
  int nv = n.nvars;
  if (n.is_zero()) return zero(nv);

  // joint shift so both parts are ordinary with joint min exponent 0
  Exp mn = min_exps(n), md = min_exps(d), m(nv);
  for (int i = 0; i < nv; ++i) m[i] = std::min(mn[i], md[i]);
  n = shift_down(n, m);
  d = shift_down(d, m);

  auto [rn, zn] = integerize(n);
  auto [rd, zd] = integerize(d);
  ZPoly g = zp_gcd(zn, zd);
  zn = *zp_divide(zn, g);
  zd = *zp_divide(zd, g);
  Rat scalar = rn / rd;

  // the joint minimum exponent stays 0 through gcd cancellation, since for
  // each variable one side has minimum 0 and its quotient keeps it
  return {scalar * zp_to_lp(zn, nv), zp_to_lp(zd, nv)};
}

bool RatFn::is_one() const {
  return den == LaurentPoly::constant(num.nvars, 1) && num == LaurentPoly::constant(num.nvars, 1);
}

RatFn operator+(const RatFn& p, const RatFn& q) {
  return RatFn::make(p.num * q.den + q.num * p.den, p.den * q.den);
}

RatFn operator-(const RatFn& p, const RatFn& q) {
  return RatFn::make(p.num * q.den - q.num * p.den, p.den * q.den);
}

RatFn operator*(const RatFn& p, const RatFn& q) { return RatFn::make(p.num * q.num, p.den * q.den); }

RatFn operator/(const RatFn& p, const RatFn& q) {
  if (q.is_zero()) fail(ErrKind::Indeterminate, "division by zero");
  return RatFn::make(p.num * q.den, p.den * q.num);
}

RatFn operator-(const RatFn& p) { return {-p.num, p.den}; }

RatFn rf_pow(const RatFn& p, const Int& e) {
  long k = static_cast<long>(e);
  if (k < 0) return rf_pow(RatFn::one(p.nvars()) / p, -e);
  RatFn out = RatFn::one(p.nvars());
  RatFn base = p;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

std::optional<MonomialForm> RatFn::as_monomial() const {
  if (num.terms.size() != 1 || den.terms.size() != 1) return std::nullopt;
  auto& [en, cn] = *num.terms.begin();
  auto& [ed, cd] = *den.terms.begin();
  return MonomialForm{cn / cd, exp_sub(en, ed)};
}

Rat RatFn::evaluate(const std::vector<Rat>& point) const {
  Rat d = tk::evaluate(den, point);
  if (d == 0) fail(ErrKind::Indeterminate, "pole at point: denominator vanishes");
  return tk::evaluate(num, point) / d;
}

LaurentPoly det_poly(std::vector<std::vector<LaurentPoly>> m) {
  size_t n = m.size();
  if (n == 0) fail(ErrKind::InvalidConfig, "determinant of an empty matrix");
  int nv = m[0][0].nvars;
  for (auto& row : m)
    if (row.size() != n) fail(ErrKind::InvalidConfig, "determinant needs a square matrix");
  if (n == 1) return m[0][0];

  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(nv, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly::zero(nv);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RatFn det_ratfn(const std::vector<std::vector<RatFn>>& m) {
  size_t n = m.size();
  if (n == 0) fail(ErrKind::InvalidConfig, "determinant of an empty matrix");
  int nv = m[0][0].nvars();
  std::vector<std::vector<LaurentPoly>> cleared(n);
  LaurentPoly denprod = LaurentPoly::constant(nv, 1);
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrKind::InvalidConfig, "determinant needs a square matrix");
    // least common multiple of the row's denominators
    LaurentPoly L = LaurentPoly::constant(nv, 1);
    for (auto& entry : m[i]) {
      ZPoly g = zp_gcd(integerize(L).second, integerize(entry.den).second);
      L = exact_divide(L * entry.den, zp_to_lp(g, nv));
    }
    for (auto& entry : m[i]) cleared[i].push_back(entry.num * exact_divide(L, entry.den));
    denprod = denprod * L;
  }
  return RatFn::make(det_poly(std::move(cleared)), denprod);
}

std::string format_poly(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != p.nvars)
    fail(ErrKind::InvalidConfig, "arity mismatch in formatting");
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& [e, c] : p.terms) {
    if (!out.empty()) out += " + ";
    std::string vars;
    for (int i = 0; i < p.nvars; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += ' ';
      vars += names[i];
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    out += to_string(c);
    if (!vars.empty()) out += " * " + vars;
  }
  return out;
}

std::string format_ratfn(const RatFn& f, const std::vector<std::string>& names) {
  if (f.den == LaurentPoly::constant(f.num.nvars, 1)) return format_poly(f.num, names);
  return "(" + format_poly(f.num, names) + ") / (" + format_poly(f.den, names) + ")";
}

} // namespace tk
