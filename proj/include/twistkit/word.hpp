#pragma once
#include <optional>
#include <string>
#include <vector>

#include "twistkit/error.hpp"
#include "twistkit/rational.hpp"

namespace tk {

/* Letters are signed ints, negation = inversion. For a surface of genus g
   with B punctures and P marked points (p0 = basepoint):
     1..2g          a_i = 2i-1, b_i = 2i
     2g+1..2g+B     d_j, loop around the j-th puncture
     2g+B+1..       c_k, arc from p0 to the k-th marked point (k = 1..P-1)
   Text form: `a1 b1 A1 B1 d1 c1`, capitals are inverses. */
using Gen = int;

struct Surface {
  int g = 2;
  int B = 0;
  int P = 1;

  int loop_letters() const { return 2 * g + B; }
  int arc_letters() const { return P - 1; }
  int letters() const { return loop_letters() + arc_letters(); }
  // rank of H1 of the punctured surface: Delta relation kills one puncture loop
  int hrank() const { return 2 * g + (B > 0 ? B - 1 : 0); }
  int relrank() const { return hrank() + arc_letters(); }
  bool closed() const { return B == 0; }

  Gen a(int i) const { return 2 * i - 1; }
  Gen b(int i) const { return 2 * i; }
  Gen d(int j) const { return 2 * g + j; }
  Gen arc(int k) const { return 2 * g + B + k; }
  bool is_arc(Gen x) const { return std::abs(x) > loop_letters(); }

  void check() const;
};

struct Word {
  std::vector<Gen> ls;

  bool empty() const { return ls.empty(); }
  size_t size() const { return ls.size(); }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);          // reduced product
Word conjugate(const Word& u, const Word& w);        // u w u^-1, reduced
std::pair<Word, Word> cyclic_reduce(const Word& w);  // (core, conjugator)
std::vector<Word> rotations(const Word& w);

Word commutator_relator(const Surface& s);  // closed case, prod [a_i,b_i]
Word boundary_word(const Surface& s);       // prod [a_i,b_i] d_1 .. d_B

/* Exponent vector over [a1,b1,..,ag,bg, D1..D_{B-1}, c1..c_{P-1}];
   d_B expands to -(D1+..+D_{B-1}). */
using HVec = std::vector<Int>;
HVec abelianize(const Word& w, const Surface& s);

HVec hzero(const Surface& s);
HVec hadd(const HVec& u, const HVec& v);
HVec hscale(const Int& k, const HVec& v);
bool his_zero(const HVec& v);

/* Valid path words start at p0; arcs move the endpoint. Returns the final
   position (0 = basepoint, k = marked point p_k) or fails. */
int path_endpoint(const Word& w, const Surface& s);

Word parse_word(const std::string& text, const Surface& s);
std::string format_word(const Word& w, const Surface& s);
std::string format_hvec(const HVec& v, const Surface& s);

} // namespace tk
