#include "twistkit/mapping_class.hpp"

#include <algorithm>
#include <cctype>

namespace tk {

Word Endo::image(Gen x) const {
  Gen k = x > 0 ? x : -x;
  auto it = images.find(k);
  Word w = it != images.end() ? it->second : Word{{k}};
  return x > 0 ? w : inverse(w);
}

Word Endo::apply(const Word& w) const {
  Word out;
  for (Gen x : w.ls) {
    Word im = image(x);
    out.ls.insert(out.ls.end(), im.ls.begin(), im.ls.end());
  }
  return reduce(out);
}

Endo endo_compose(const Endo& outer, const Endo& inner, const Surface& s) {
  Endo out;
  for (Gen x = 1; x <= s.letters(); ++x) {
    Word im = outer.apply(inner.image(x));
    if (!(im.ls.size() == 1 && im.ls[0] == x)) out.images[x] = im;
  }
  return out;
}

Endo CurveRecord::endo(int sign) const {
  Endo e;
  for (auto& [x, mv] : moved) {
    Word L = sign == 1 ? mv.left : inverse(mv.left);
    Word R = sign == 1 ? mv.right : inverse(mv.right);
    Word im = concat(concat(L, Word{{x}}), R);
    if (!(im.ls.size() == 1 && im.ls[0] == x)) e.images[x] = im;
  }
  return e;
}

const CurveRecord& GenTable::find(const std::string& name) const {
  for (auto& c : curves)
    if (c.name == name) return c;
  fail(ErrKind::Parse, "no curve named `" + name + "` in the generator table");
}

bool GenTable::has(const std::string& name) const {
  for (auto& c : curves)
    if (c.name == name) return true;
  return false;
}

Endo push_endo(const Word& loop, const Surface& s) {
  Endo e;
  for (Gen x : loop.ls)
    if (s.is_arc(x)) fail(ErrKind::InvalidConfig, "push loop contains an arc letter");
  Word inv = inverse(loop);
  for (Gen x = 1; x <= s.loop_letters(); ++x) {
    Word im = concat(concat(loop, Word{{x}}), inv);
    if (!(im.ls.size() == 1 && im.ls[0] == x)) e.images[x] = im;
  }
  for (int k = 1; k <= s.arc_letters(); ++k) {
    Word im = concat(loop, Word{{s.arc(k)}});
    if (!(im.ls.size() == 1)) e.images[s.arc(k)] = im;
  }
  return e;
}

Endo far_push_endo(int marked, const Word& loop, const Surface& s) {
  if (marked < 1 || marked > s.arc_letters())
    fail(ErrKind::InvalidConfig, "far push needs a marked point with an arc, got index " +
                                     std::to_string(marked));
  for (Gen x : loop.ls)
    if (s.is_arc(x)) fail(ErrKind::InvalidConfig, "push loop contains an arc letter");
  Endo e;
  Word im = concat(loop, Word{{s.arc(marked)}});
  if (im.ls.size() != 1) e.images[s.arc(marked)] = im;
  return e;
}

MappingClass identity_class(const Surface& s) {
  return {s, Endo{}, std::vector<TwistStep>{}, "id"};
}

static Endo step_endo(const GenTable& t, const TwistStep& st) {
  Endo e;
  int n = std::abs(st.exp), sign = st.exp >= 0 ? 1 : -1;
  Endo one;
  switch (st.kind) {
    case TwistStep::Curve: one = t.find(st.curve).endo(sign); break;
    case TwistStep::BasePush: one = push_endo(sign == 1 ? st.loop : inverse(st.loop), t.s); break;
    case TwistStep::MarkedPush:
      one = far_push_endo(st.marked, sign == 1 ? st.loop : inverse(st.loop), t.s);
      break;
  }
  for (int i = 0; i < n; ++i) e = endo_compose(e, one, t.s);
  return e;
}

MappingClass compose(const GenTable& t, const std::vector<TwistStep>& steps) {
  Endo e;
  for (auto& st : steps) e = endo_compose(e, step_endo(t, st), t.s);
  return {t.s, e, steps, format_twist_word(steps, t.s)};
}

std::vector<TwistStep> inverse_word(const std::vector<TwistStep>& steps) {
  std::vector<TwistStep> out(steps.rbegin(), steps.rend());
  for (auto& st : out) st.exp = -st.exp;
  return out;
}

std::vector<TwistStep> parse_twist_word(const std::string& text, const Surface& s) {
  std::vector<TwistStep> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    TwistStep st;
    if (text[i] == 'T') {
      ++i;
      size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != '^' && text[i] != ' ') ++i;
      st.kind = TwistStep::Curve;
      st.curve = text.substr(start, i - start);
      if (st.curve.empty()) fail(ErrKind::Parse, "empty curve name after T");
    } else if (text.compare(i, 4, "Push") == 0) {
      i += 4;
      size_t start = i;
      while (i < text.size() && text[i] != '(') ++i;
      std::string idx = text.substr(start, i - start);
      if (i >= text.size()) fail(ErrKind::Parse, "Push needs a parenthesized loop");
      ++i;
      size_t close = text.find(')', i);
      if (close == std::string::npos) fail(ErrKind::Parse, "unclosed Push loop");
      st.loop = parse_word(text.substr(i, close - i), s);
      for (Gen x : st.loop.ls)
        if (s.is_arc(x)) fail(ErrKind::Parse, "push loop contains an arc letter");
      i = close + 1;
      if (idx.empty()) {
        st.kind = TwistStep::BasePush;
      } else {
        st.kind = TwistStep::MarkedPush;
        for (char c : idx)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(ErrKind::Parse, "bad marked point index `" + idx + "` in Push");
        st.marked = std::stoi(idx);
      }
    } else {
      fail(ErrKind::Parse, std::string("unexpected twist-word token at `") + text[i] + "`");
    }
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail(ErrKind::Parse, "missing exponent after ^");
      st.exp = std::stoi(text.substr(start, i - start));
      if (st.exp == 0) fail(ErrKind::Parse, "zero exponent in twist word");
    }
    out.push_back(st);
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ',') fail(ErrKind::Parse, "expected comma between twist-word tokens");
      ++i;
      skip_ws();
      if (i == text.size()) fail(ErrKind::Parse, "trailing comma in twist word");
    }
  }
  return out;
}

std::string format_twist_word(const std::vector<TwistStep>& steps, const Surface& s) {
  std::string out;
  for (auto& st : steps) {
    if (!out.empty()) out += ',';
    switch (st.kind) {
      case TwistStep::Curve: out += "T" + st.curve; break;
      case TwistStep::BasePush: out += "Push(" + format_word(st.loop, s) + ")"; break;
      case TwistStep::MarkedPush:
        out += "Push" + std::to_string(st.marked) + "(" + format_word(st.loop, s) + ")";
        break;
    }
    if (st.exp != 1) out += "^" + std::to_string(st.exp);
  }
  return out.empty() ? "id" : out;
}

Int symp_pair(const HVec& u, const HVec& v, const Surface& s) {
  Int out = 0;
  for (int i = 0; i < s.g; ++i) out += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
  return out;
}

HVec delta_class(const Surface& s, int b) {
  if (b < 1 || b > s.B) fail(ErrKind::InvalidConfig, "boundary index out of range");
  HVec v = hzero(s);
  if (b < s.B)
    v[2 * s.g + b - 1] = 1;
  else
    for (int t = 1; t < s.B; ++t) v[2 * s.g + t - 1] = -1;
  return v;
}

static int basis_size(const Surface& s, HMode mode) {
  return mode == HMode::Absolute ? s.hrank() : s.relrank();
}

ZMat homology_action(const MappingClass& f, HMode mode) {
  const Surface& s = f.s;
  int n = basis_size(s, mode);
  ZMat m(n, ZRow(n, Int(0)));
  // basis letters: a1,b1,..,ag,bg, d1..d_{B-1}, then arcs in relative mode
  std::vector<Gen> basis;
  for (int i = 1; i <= 2 * s.g; ++i) basis.push_back(i);
  for (int j = 1; j < s.B; ++j) basis.push_back(s.d(j));
  if (mode == HMode::Relative)
    for (int k = 1; k <= s.arc_letters(); ++k) basis.push_back(s.arc(k));
  for (int j = 0; j < n; ++j) {
    HVec col = abelianize(f.endo.apply(Word{{basis[j]}}), s);
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

static void add_scaled(HVec& dst, const Int& c, const HVec& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

/* Columns are basis images under one step; matrices multiply left to right in
   word order, matching homology_action of the composition. */
static ZMat step_matrix(const GenTable& t, const TwistStep& st, HMode mode) {
  const Surface& s = t.s;
  int n = basis_size(s, mode);
  ZMat m = z_identity(n);
  int e = st.exp;
  if (st.kind == TwistStep::Curve) {
    const CurveRecord& rec = t.find(st.curve);
    HVec d = rec.homology;
    for (int j = 0; j < n; ++j) {
      HVec basis_j = hzero(s);
      basis_j[j] = 1;
      Int cross;
      if (j < s.hrank()) {
        cross = symp_pair(basis_j, d, s);
      } else {
        cross = rec.arc_cross.empty() ? Int(0) : Int(rec.arc_cross[j - s.hrank()]);
      }
      if (cross == 0) continue;
      for (int i = 0; i < n; ++i) m[i][j] += Int(e) * cross * d[i];
    }
    return m;
  }
  // pushes act trivially on absolute classes
  if (mode == HMode::Absolute) return m;
  HVec g = abelianize(st.loop, s);
  for (int k = 1; k <= s.arc_letters(); ++k) {
    if (st.kind == TwistStep::MarkedPush && k != st.marked) continue;
    int col = s.hrank() + k - 1;
    for (int i = 0; i < n; ++i) m[i][col] += Int(e) * g[i];
  }
  return m;
}

ZMat twist_word_matrix(const GenTable& t, const std::vector<TwistStep>& steps, HMode mode) {
  ZMat m = z_identity(basis_size(t.s, mode));
  for (auto& st : steps) m = z_mul(m, step_matrix(t, st, mode));
  return m;
}

HVec push_action_boundary(const Word& gamma, const HVec& x, int b, const Surface& s) {
  if (s.B < 1) fail(ErrKind::InvalidConfig, "boundary push formula needs punctures");
  HVec g = abelianize(gamma, s);
  HVec out = x;
  add_scaled(out, symp_pair(g, x, s), delta_class(s, b));
  return out;
}

HVec push_action_relative(const Word& gamma, const HVec& alpha, const Surface& s) {
  HVec g = abelianize(gamma, s);
  Int chi = 2 - 2 * s.g - s.P;
  HVec out = alpha;
  add_scaled(out, chi * symp_pair(g, alpha, s), g);
  return out;
}

void check_relator_preserved(const MappingClass& f) {
  const Surface& s = f.s;
  if (s.closed()) {
    Word r = commutator_relator(s);
    Word core = cyclic_reduce(f.endo.apply(r)).first;
    for (auto& rot : rotations(r))
      if (core == rot) return;
    fail(ErrKind::Inconsistent,
         "relator image is not a conjugate of the relator for " + f.label);
  }
  for (int j = 1; j <= s.B; ++j) {
    Word dj{{s.d(j)}};
    if (cyclic_reduce(f.endo.apply(dj)).first != dj)
      fail(ErrKind::Inconsistent,
           "puncture loop d" + std::to_string(j) + " is not preserved up to conjugacy by " +
               f.label);
  }
}

void check_symplectic(const MappingClass& f) {
  const Surface& s = f.s;
  ZMat m = homology_action(f, HMode::Absolute);
  int n = s.hrank();
  ZMat gram(n, ZRow(n, Int(0)));
  for (int i = 0; i < s.g; ++i) {
    gram[2 * i][2 * i + 1] = 1;
    gram[2 * i + 1][2 * i] = -1;
  }
  if (z_mul(z_transpose(m), z_mul(gram, m)) != gram)
    fail(ErrKind::Inconsistent, "homology action does not preserve the intersection form for " +
                                    f.label);
}

} // namespace tk
