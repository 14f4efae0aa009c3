#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/laurent.hpp"
#include "twistkit/rng.hpp"

using namespace tk;

namespace {

const int NV = 4;
const std::vector<std::string> XY = {"x1", "y1", "x2", "y2"};

LaurentPoly X1() { return LaurentPoly::variable(NV, 0); }
LaurentPoly Y1() { return LaurentPoly::variable(NV, 1); }
LaurentPoly C(long v) { return LaurentPoly::constant(NV, Rat(v)); }

LaurentPoly random_poly(Rng& rng, int nterms) {
  LaurentPoly p = LaurentPoly::zero(NV);
  for (int t = 0; t < nterms; ++t) {
    Exp e(NV);
    for (auto& x : e) x = static_cast<int>(rng.range(-2, 2));
    p.add_term(e, Rat(rng.range(-5, 5), rng.range(1, 3)));
  }
  return p;
}

std::vector<Rat> random_point(Rng& rng) {
  std::vector<Rat> pt;
  for (int i = 0; i < NV; ++i) {
    long v = rng.range(1, 7);
    pt.push_back(Rat(rng.next() & 1 ? v : -v));
  }
  return pt;
}

// Oracle: first-row cofactor expansion.
LaurentPoly det_cofactor(const std::vector<std::vector<LaurentPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  LaurentPoly out = LaurentPoly::zero(m[0][0].nvars);
  int sgn = 1;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<LaurentPoly>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    LaurentPoly t = m[0][j] * det_cofactor(sub);
    out = sgn > 0 ? out + t : out - t;
    sgn = -sgn;
  }
  return out;
}

using Mat = std::vector<std::vector<LaurentPoly>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size();
  Mat out(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(a[0][0].nvars)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) out[i][j] = out[i][j] + a[i][k] * b[k][j];
  return out;
}

} // namespace

TEST_CASE("ring ops reject arity mismatch") {
  CHECK_THROWS_AS(LaurentPoly::constant(2, 1) + LaurentPoly::constant(3, 1), Error);
  CHECK_THROWS_AS(LaurentPoly::constant(2, 1) * LaurentPoly::constant(3, 1), Error);
}

TEST_CASE("ring ops distribute, checked by evaluation") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly p = random_poly(rng, 3), q = random_poly(rng, 3), r = random_poly(rng, 3);
    LaurentPoly lhs = p * (q + r);
    LaurentPoly rhs = p * q + p * r;
    for (int k = 0; k < 3; ++k) {
      auto pt = random_point(rng);
      CHECK(evaluate(lhs, pt) == evaluate(rhs, pt));
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact_divide recovers cofactors") {
  CHECK(exact_divide(X1() * X1() - C(1), X1() - C(1)) == X1() + C(1));
  CHECK_THROWS_WITH_AS(exact_divide(X1() - C(1), Y1() - C(1)), "not divisible", Error);

  Rng rng(43);
  int done = 0;
  while (done < 100) {
    LaurentPoly p = random_poly(rng, 3), q = random_poly(rng, 3);
    if (q.is_zero()) continue;
    ++done;
    LaurentPoly quot = exact_divide(p * q, q);
    CHECK(quot * q == p * q);
    CHECK(quot == p);
  }
}

TEST_CASE("fraction-free determinant") {
  Mat id(3, std::vector<LaurentPoly>(3, C(0)));
  for (int i = 0; i < 3; ++i) id[i][i] = C(1);
  CHECK(det_poly(id) == C(1));

  Mat d(3, std::vector<LaurentPoly>(3, C(0)));
  d[0][0] = C(1);
  d[1][1] = X1();
  d[2][2] = X1();
  CHECK(det_poly(d) == X1() * X1());

  Rng rng(44);
  std::vector<LaurentPoly> pool = {C(0), C(1), C(-1), X1(), -X1(), Y1(), -Y1()};
  for (int t = 0; t < 50; ++t) {
    Mat m(5, std::vector<LaurentPoly>(5, C(0)));
    for (auto& row : m)
      for (auto& e : row) e = pool[rng.below(pool.size())];
    CHECK(det_poly(m) == det_cofactor(m));
  }
}

TEST_CASE("determinant is multiplicative") {
  Rng rng(45);
  std::vector<LaurentPoly> pool = {C(0), C(1), C(-1), C(2), X1(), Y1()};
  for (int t = 0; t < 20; ++t) {
    Mat a(4, std::vector<LaurentPoly>(4, C(0))), b = a;
    for (auto& row : a)
      for (auto& e : row) e = pool[rng.below(pool.size())];
    for (auto& row : b)
      for (auto& e : row) e = pool[rng.below(pool.size())];
    CHECK(det_poly(mat_mul(a, b)) == det_poly(a) * det_poly(b));
  }
}

TEST_CASE("rational functions normalize to a canonical form") {
  RatFn f = RatFn::make(X1() * X1() - C(1), X1() - C(1));
  CHECK(f.num == X1() + C(1));
  CHECK(f.den == C(1));

  // denominator sign and content are fixed
  RatFn g = RatFn::make(X1() - C(1), C(1) - X1());
  CHECK(g == RatFn::from_poly(C(-1)));
  RatFn h = RatFn::make(C(2) * X1(), Rat(1, 2) * (C(2) - C(4) * Y1()));
  CHECK(h.den == C(2) * Y1() - C(1));
  CHECK(h.num == C(-2) * X1());

  Rng rng(46);
  for (int t = 0; t < 50; ++t) {
    LaurentPoly n = random_poly(rng, 3), d = random_poly(rng, 3);
    if (d.is_zero()) continue;
    RatFn r = RatFn::make(n, d);
    RatFn again = RatFn::make(r.num, r.den);
    CHECK(again == r);
  }
}

TEST_CASE("rational function arithmetic") {
  RatFn x = RatFn::from_poly(X1()), y = RatFn::from_poly(Y1());
  RatFn f = (x - RatFn::one(NV)) / (y - RatFn::one(NV));
  CHECK(f + (-f) == RatFn::zero(NV));
  CHECK(f * (RatFn::one(NV) / f) == RatFn::one(NV));
  CHECK(rf_pow(f, 2) == f * f);
  CHECK(rf_pow(f, -1) == RatFn::one(NV) / f);
}

TEST_CASE("as_monomial detects units") {
  RatFn a = RatFn::from_poly(X1() * X1());
  auto ma = a.as_monomial();
  REQUIRE(ma.has_value());
  CHECK(ma->coeff == 1);
  CHECK(ma->exps == Exp{2, 0, 0, 0});

  RatFn b = RatFn::make(X1() - C(1), X1() * Y1() - Y1());
  auto mb = b.as_monomial();
  REQUIRE(mb.has_value());
  CHECK(mb->coeff == 1);
  CHECK(mb->exps == Exp{0, -1, 0, 0});

  CHECK(!RatFn::from_poly(X1() + Y1()).as_monomial().has_value());
}

TEST_CASE("as_monomial ignores a common monomial factor") {
  Rng rng(47);
  for (int t = 0; t < 50; ++t) {
    LaurentPoly n = random_poly(rng, 2), d = random_poly(rng, 2);
    if (d.is_zero()) continue;
    Exp e(NV);
    for (auto& x : e) x = static_cast<int>(rng.range(-3, 3));
    LaurentPoly m = LaurentPoly::monomial(e, Rat(rng.range(1, 4)));
    CHECK(RatFn::make(n * m, d * m) == RatFn::make(n, d));
    CHECK(RatFn::make(n * m, d * m).as_monomial() == RatFn::make(n, d).as_monomial());
  }
}

TEST_CASE("evaluation is exact and flags poles") {
  LaurentPoly p = X1() * lp_pow(Y1(), -1);
  CHECK(evaluate(p, {Rat(2), Rat(3), Rat(4), Rat(5)}) == Rat(2, 3));
  CHECK_THROWS_AS(evaluate(lp_pow(X1(), -1), {Rat(0), Rat(1), Rat(1), Rat(1)}), Error);
  CHECK_THROWS_AS(RatFn::make(C(1), X1() - C(1)).evaluate({Rat(1), Rat(2), Rat(2), Rat(2)}), Error);

  Rng rng(48);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly p1 = random_poly(rng, 3), p2 = random_poly(rng, 3);
    auto pt = random_point(rng);
    CHECK(evaluate(p1 * p2, pt) == evaluate(p1, pt) * evaluate(p2, pt));
    CHECK(evaluate(p1 + p2, pt) == evaluate(p1, pt) + evaluate(p2, pt));
  }
}

TEST_CASE("determinants of rational function matrices") {
  RatFn x = RatFn::from_poly(X1());
  RatFn one = RatFn::one(NV);
  std::vector<std::vector<RatFn>> m = {{one / (x - one), one}, {one, x - one}};
  CHECK(det_ratfn(m) == RatFn::zero(NV));

  std::vector<std::vector<RatFn>> m2 = {{one / (x - one), one}, {one, x}};
  CHECK(det_ratfn(m2) == (x / (x - one)) - one);
}

TEST_CASE("canonical text form") {
  LaurentPoly p = C(1) + Rat(2) * (X1() * X1() * lp_pow(Y1(), -1));
  CHECK(format_poly(p, XY) == "1 + 2 * x1^2 y1^-1");
  CHECK(format_poly(LaurentPoly::zero(NV), XY) == "0");
  CHECK(format_ratfn(RatFn::make(X1() - C(1), Y1() - C(1)), XY) ==
        "(-1 + 1 * x1) / (-1 + 1 * y1)");
}
