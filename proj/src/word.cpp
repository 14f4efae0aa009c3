#include "twistkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tk {

void Surface::check() const {
  if (g < 2) fail(ErrKind::InvalidConfig, "genus must be at least 2, got " + std::to_string(g));
  if (B < 0) fail(ErrKind::InvalidConfig, "puncture count must be nonnegative");
  if (P < 1) fail(ErrKind::InvalidConfig, "marked point count includes the basepoint, so P >= 1");
}

Word reduce(const Word& w) {
  Word out;
  out.ls.reserve(w.ls.size());
  for (Gen x : w.ls) {
    if (x == 0) fail(ErrKind::InvalidConfig, "zero letter in word");
    if (!out.ls.empty() && out.ls.back() == -x)
      out.ls.pop_back();
    else
      out.ls.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.ls.reserve(w.ls.size());
  for (auto it = w.ls.rbegin(); it != w.ls.rend(); ++it) out.ls.push_back(-*it);
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.ls.insert(out.ls.end(), v.ls.begin(), v.ls.end());
  return reduce(out);
}

Word conjugate(const Word& u, const Word& w) {
  return concat(concat(u, w), inverse(u));
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word core = reduce(w);
  Word conj;
  size_t i = 0, j = core.ls.size();
  while (j > i + 1 && core.ls[i] == -core.ls[j - 1]) {
    conj.ls.push_back(core.ls[i]);
    ++i;
    --j;
  }
  Word c;
  c.ls.assign(core.ls.begin() + i, core.ls.begin() + j);
  return {c, conj};
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  size_t n = w.ls.size();
  if (n == 0) return {w};
  for (size_t s = 0; s < n; ++s) {
    Word r;
    r.ls.reserve(n);
    for (size_t k = 0; k < n; ++k) r.ls.push_back(w.ls[(s + k) % n]);
    out.push_back(r);
  }
  return out;
}

Word commutator_relator(const Surface& s) {
  if (!s.closed())
    fail(ErrKind::InvalidConfig, "commutator relator only exists for the closed surface; "
                                 "punctured groups are free");
  Word w;
  for (int i = 1; i <= s.g; ++i) {
    w.ls.push_back(s.a(i));
    w.ls.push_back(s.b(i));
    w.ls.push_back(-s.a(i));
    w.ls.push_back(-s.b(i));
  }
  return w;
}

Word boundary_word(const Surface& s) {
  Word w = s.closed() ? commutator_relator(s) : Word{};
  if (!s.closed()) {
    for (int i = 1; i <= s.g; ++i) {
      w.ls.push_back(s.a(i));
      w.ls.push_back(s.b(i));
      w.ls.push_back(-s.a(i));
      w.ls.push_back(-s.b(i));
    }
    for (int j = 1; j <= s.B; ++j) w.ls.push_back(s.d(j));
  }
  return w;
}

HVec hzero(const Surface& s) { return HVec(s.relrank(), Int(0)); }

HVec hadd(const HVec& u, const HVec& v) {
  if (u.size() != v.size()) fail(ErrKind::InvalidConfig, "homology vector size mismatch");
  HVec out = u;
  for (size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  return out;
}

HVec hscale(const Int& k, const HVec& v) {
  HVec out = v;
  for (auto& x : out) x *= k;
  return out;
}

bool his_zero(const HVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

HVec abelianize(const Word& w, const Surface& s) {
  HVec out = hzero(s);
  for (Gen x : w.ls) {
    int sgn = x > 0 ? 1 : -1;
    int k = std::abs(x);
    if (k > s.letters())
      fail(ErrKind::InvalidConfig, "letter index " + std::to_string(k) + " out of range");
    if (k <= 2 * s.g) {
      out[k - 1] += sgn;
    } else if (k <= s.loop_letters()) {
      int j = k - 2 * s.g;
      if (j < s.B) {
        out[2 * s.g + j - 1] += sgn;
      } else {
        // d_B = -(D_1 + .. + D_{B-1}) in H1
        for (int t = 1; t < s.B; ++t) out[2 * s.g + t - 1] -= sgn;
      }
    } else {
      out[s.hrank() + (k - s.loop_letters()) - 1] += sgn;
    }
  }
  return out;
}

int path_endpoint(const Word& w, const Surface& s) {
  int pos = 0;
  for (Gen x : w.ls) {
    int k = std::abs(x);
    if (k == 0 || k > s.letters())
      fail(ErrKind::InvalidConfig, "letter index out of range in path word");
    if (!s.is_arc(x)) {
      if (pos != 0)
        fail(ErrKind::InvalidConfig, "loop letter used away from the basepoint in " + format_word(w, s));
      continue;
    }
    int target = k - s.loop_letters();
    if (x > 0) {
      if (pos != 0)
        fail(ErrKind::InvalidConfig, "arc letter needs the path at the basepoint in " + format_word(w, s));
      pos = target;
    } else {
      if (pos != target)
        fail(ErrKind::InvalidConfig, "inverse arc letter needs the path at its far end in " + format_word(w, s));
      pos = 0;
    }
  }
  return pos;
}

Word parse_word(const std::string& text, const Surface& s) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2)
      fail(ErrKind::Parse, "bad word token `" + tok + "`");
    char c = tok[0];
    bool inv = std::isupper(static_cast<unsigned char>(c));
    char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int idx = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        fail(ErrKind::Parse, "bad word token `" + tok + "`");
      idx = idx * 10 + (tok[i] - '0');
    }
    if (idx < 1) fail(ErrKind::Parse, "bad index in word token `" + tok + "`");
    Gen x;
    if (kind == 'a' && idx <= s.g)
      x = s.a(idx);
    else if (kind == 'b' && idx <= s.g)
      x = s.b(idx);
    else if (kind == 'd' && idx <= s.B)
      x = s.d(idx);
    else if (kind == 'c' && idx <= s.P - 1)
      x = s.arc(idx);
    else
      fail(ErrKind::Parse, "word token `" + tok + "` out of range for genus " + std::to_string(s.g) +
                               ", " + std::to_string(s.B) + " punctures, " + std::to_string(s.P) +
                               " marked points");
    w.ls.push_back(inv ? -x : x);
  }
  return w;
}

std::string format_word(const Word& w, const Surface& s) {
  std::string out;
  for (Gen x : w.ls) {
    if (!out.empty()) out += ' ';
    int k = std::abs(x);
    char kind;
    int idx;
    if (k <= 2 * s.g) {
      kind = (k % 2 == 1) ? 'a' : 'b';
      idx = (k + 1) / 2;
    } else if (k <= s.loop_letters()) {
      kind = 'd';
      idx = k - 2 * s.g;
    } else {
      kind = 'c';
      idx = k - s.loop_letters();
    }
    if (x < 0) kind = static_cast<char>(std::toupper(static_cast<unsigned char>(kind)));
    out += kind;
    out += std::to_string(idx);
  }
  return out;
}

std::string format_hvec(const HVec& v, const Surface& s) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  out += "]";
  (void)s;
  return out;
}

} // namespace tk
