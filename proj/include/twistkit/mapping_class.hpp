#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/linalg.hpp"
#include "twistkit/word.hpp"

namespace tk {

/* Endomorphism of the fundamental groupoid: a word image per positive letter,
   identity where absent. Arcs may map to loop-prefixed arcs. */
struct Endo {
  std::map<Gen, Word> images;

  Word image(Gen x) const;                // handles inverse letters
  Word apply(const Word& w) const;        // substitute and reduce
  bool operator==(const Endo&) const = default;
};

// outer after inner: apply(x) = outer.apply(inner.apply(x))
Endo endo_compose(const Endo& outer, const Endo& inner, const Surface& s);

/* Twist data for one moved letter: the image is L x R. Both words are fixed
   by the twist, which makes the inverse twist x -> L^-1 x R^-1. */
struct LetterMove {
  Word left, right;
  bool operator==(const LetterMove&) const = default;
};

// One curated curve with its right-handed Dehn twist data.
struct CurveRecord {
  std::string name;
  std::map<Gen, LetterMove> moved;
  HVec homology;               // length relrank, arc slots 0
  Int fiber_coeff;
  bool separating = false;
  std::vector<int> arc_cross;  // signed crossings with arcs c_1..c_{P-1}

  Endo endo(int sign) const;   // sign +1 right twist, -1 its inverse
};

struct TwistStep {
  enum Kind { Curve, BasePush, MarkedPush };
  Kind kind = Curve;
  std::string curve;  // Curve: record name, e.g. "a1", "s1"
  Word loop;          // pushes: based loop
  int marked = 0;     // MarkedPush: which marked point p_k is pushed
  int exp = 1;

  bool operator==(const TwistStep&) const = default;
};

struct GenTable {
  Surface s;
  std::vector<CurveRecord> curves;
  std::vector<Word> push_loops;  // point pushes listed with the table

  const CurveRecord& find(const std::string& name) const;
  bool has(const std::string& name) const;
};

GenTable builtin_table(const Surface& s);
GenTable load_table(const std::string& dir, const Surface& s);
GenTable generator_table(const Surface& s);  // TWISTKIT_TABLE_DIR or builtin
std::string table_json(const GenTable& t);   // shipped data file format

struct MappingClass {
  Surface s;
  Endo endo;
  std::optional<std::vector<TwistStep>> twist_word;
  std::string label;
};

Endo push_endo(const Word& loop, const Surface& s);
Endo far_push_endo(int marked, const Word& loop, const Surface& s);

MappingClass identity_class(const Surface& s);
MappingClass compose(const GenTable& t, const std::vector<TwistStep>& steps);
std::vector<TwistStep> inverse_word(const std::vector<TwistStep>& steps);

std::vector<TwistStep> parse_twist_word(const std::string& text, const Surface& s);
std::string format_twist_word(const std::vector<TwistStep>& steps, const Surface& s);

enum class HMode { Absolute, Relative };

ZMat homology_action(const MappingClass& f, HMode mode);
// independent route: product of transvection and push matrices
ZMat twist_word_matrix(const GenTable& t, const std::vector<TwistStep>& steps, HMode mode);

Int symp_pair(const HVec& u, const HVec& v, const Surface& s);
HVec delta_class(const Surface& s, int b);  // class of the loop d_b

HVec push_action_boundary(const Word& gamma, const HVec& x, int b, const Surface& s);
HVec push_action_relative(const Word& gamma, const HVec& alpha, const Surface& s);

void check_relator_preserved(const MappingClass& f);
void check_symplectic(const MappingClass& f);

} // namespace tk
