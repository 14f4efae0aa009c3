#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "twistkit/mapping_class.hpp"

namespace tk {

namespace {

using nlohmann::ordered_json;

Word w(std::initializer_list<Gen> ls) { return Word{ls}; }

HVec unit(const Surface& s, int idx, Int c = 1) {
  HVec v = hzero(s);
  v[idx] = c;
  return v;
}

void check_record(const CurveRecord& rec, const Surface& s) {
  std::string where = "generator table record " + rec.name + ": ";
  if (static_cast<int>(rec.homology.size()) != s.relrank())
    fail(ErrKind::InvalidConfig, where + "homology vector has wrong length");
  if (static_cast<int>(rec.arc_cross.size()) != s.arc_letters())
    fail(ErrKind::InvalidConfig, where + "arc crossing list has wrong length");
  for (int i = s.hrank(); i < s.relrank(); ++i)
    if (rec.homology[i] != 0)
      fail(ErrKind::InvalidConfig, where + "homology vector has arc components");
  if (rec.separating != his_zero(rec.homology))
    fail(ErrKind::InvalidConfig, where + "separating flag disagrees with the homology class");
  Endo fwd = rec.endo(1), bwd = rec.endo(-1);
  for (auto& [x, mv] : rec.moved) {
    if (s.is_arc(x)) {
      // arcs may only gain a loop prefix
      if (!mv.right.empty())
        fail(ErrKind::InvalidConfig, where + "arc image must keep the arc letter last");
    }
    if (fwd.apply(mv.left) != reduce(mv.left) || fwd.apply(mv.right) != reduce(mv.right))
      fail(ErrKind::InvalidConfig,
           where + "conjugating words are not fixed by the twist, inverse would be wrong");
  }
  Endo round = endo_compose(fwd, bwd, s);
  if (!round.images.empty())
    fail(ErrKind::InvalidConfig, where + "twist composed with its inverse is not the identity");
  MappingClass f{s, fwd, std::nullopt, "T" + rec.name};
  check_relator_preserved(f);
  check_symplectic(f);
}

void check_table(const GenTable& t) {
  t.s.check();
  for (auto& rec : t.curves) check_record(rec, t.s);
  for (auto& loop : t.push_loops) {
    for (Gen x : loop.ls)
      if (t.s.is_arc(x))
        fail(ErrKind::InvalidConfig, "generator table push loop contains an arc letter");
    MappingClass f{t.s, push_endo(loop, t.s), std::nullopt,
                   "Push(" + format_word(loop, t.s) + ")"};
    check_relator_preserved(f);
    check_symplectic(f);
  }
}

} // namespace

GenTable builtin_table(const Surface& s) {
  s.check();
  if (s.g < 2 || s.g > 4 || s.B > 2 || s.P > 3)
    fail(ErrKind::InvalidConfig,
         "unsupported surface configuration: need 2 <= g <= 4, B <= 2, P <= 3");
  GenTable t;
  t.s = s;
  int na = s.arc_letters();
  std::vector<int> no_cross(na, 0);

  for (int i = 1; i <= s.g; ++i) {
    CurveRecord r;
    r.name = "a" + std::to_string(i);
    r.moved[s.b(i)] = {Word{}, w({-s.a(i)})};
    r.homology = unit(s, 2 * i - 2);
    r.fiber_coeff = 0;
    r.arc_cross = no_cross;
    t.curves.push_back(r);
  }
  for (int i = 1; i <= s.g; ++i) {
    CurveRecord r;
    r.name = "b" + std::to_string(i);
    r.moved[s.a(i)] = {Word{}, w({s.b(i)})};
    r.homology = unit(s, 2 * i - 1);
    r.fiber_coeff = 0;
    r.arc_cross = no_cross;
    t.curves.push_back(r);
  }
  for (int i = 1; i < s.g; ++i) {
    // neck curve between handles i and i+1, based loop b_i a_i^-1 b_i^-1 a_{i+1}
    CurveRecord r;
    r.name = "e" + std::to_string(i);
    Word neck = w({s.b(i), -s.a(i), -s.b(i), s.a(i + 1)});
    r.moved[s.b(i)] = {neck, Word{}};
    r.moved[s.b(i + 1)] = {Word{}, inverse(neck)};
    r.moved[s.a(i + 1)] = {neck, inverse(neck)};
    r.homology = hadd(unit(s, 2 * i), unit(s, 2 * i - 2, -1));
    r.fiber_coeff = 1;
    r.arc_cross = no_cross;
    t.curves.push_back(r);
  }
  {
    // separating curve bounding the first handle, based loop [a1, b1]
    CurveRecord r;
    r.name = "s1";
    Word v = w({s.a(1), s.b(1), -s.a(1), -s.b(1)});
    r.moved[s.a(1)] = {v, inverse(v)};
    r.moved[s.b(1)] = {v, inverse(v)};
    r.homology = hzero(s);
    r.fiber_coeff = -1;
    r.separating = true;
    r.arc_cross = no_cross;
    t.curves.push_back(r);
  }
  for (int j = 1; j <= s.B; ++j) {
    /* Twist about a loop parallel to puncture j. Marked point p_j sits inside
       that annulus when it exists, so only the arc c_j crosses the curve. */
    CurveRecord r;
    r.name = "d" + std::to_string(j);
    r.homology = delta_class(s, j);
    r.separating = his_zero(r.homology);
    if (s.B == 1)
      r.fiber_coeff = 1 - 2 * s.g;
    else
      r.fiber_coeff = j == 1 ? Int(0) : Int(-2 * s.g);
    r.arc_cross = no_cross;
    if (j <= na) {
      r.moved[s.arc(j)] = {w({s.d(j)}), Word{}};
      r.arc_cross[j - 1] = 1;
    }
    t.curves.push_back(r);
  }
  for (int i = 1; i <= s.g; ++i) {
    t.push_loops.push_back(w({s.a(i)}));
    t.push_loops.push_back(w({s.b(i)}));
  }
  check_table(t);
  return t;
}

std::string table_json(const GenTable& t) {
  ordered_json out;
  out["version"] = 1;
  out["surface"] = {{"g", t.s.g}, {"B", t.s.B}, {"P", t.s.P}};
  out["curves"] = ordered_json::array();
  for (auto& rec : t.curves) {
    ordered_json jr;
    jr["name"] = rec.name;
    jr["moved"] = ordered_json::array();
    for (auto& [x, mv] : rec.moved)
      jr["moved"].push_back({{"letter", format_word(Word{{x}}, t.s)},
                             {"left", format_word(mv.left, t.s)},
                             {"right", format_word(mv.right, t.s)}});
    jr["homology"] = ordered_json::array();
    for (auto& c : rec.homology) jr["homology"].push_back(c.convert_to<long long>());
    jr["fiber_coeff"] = rec.fiber_coeff.convert_to<long long>();
    jr["separating"] = rec.separating;
    jr["arc_cross"] = rec.arc_cross;
    out["curves"].push_back(jr);
  }
  out["push_loops"] = ordered_json::array();
  for (auto& loop : t.push_loops) out["push_loops"].push_back(format_word(loop, t.s));
  return out.dump(2) + "\n";
}

GenTable load_table(const std::string& dir, const Surface& s) {
  s.check();
  std::string path = dir + "/table_g" + std::to_string(s.g) + "B" + std::to_string(s.B) + "P" +
                     std::to_string(s.P) + ".json";
  std::ifstream in(path);
  if (!in) fail(ErrKind::InvalidConfig, "cannot read generator table file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrKind::Parse, "malformed generator table " + path + ": " + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1)
      fail(ErrKind::InvalidConfig, "unsupported generator table version in " + path);
    auto& js = j.at("surface");
    if (js.at("g").get<int>() != s.g || js.at("B").get<int>() != s.B ||
        js.at("P").get<int>() != s.P)
      fail(ErrKind::InvalidConfig, "generator table " + path + " is for a different surface");
    GenTable t;
    t.s = s;
    for (auto& jr : j.at("curves")) {
      CurveRecord rec;
      rec.name = jr.at("name").get<std::string>();
      for (auto& jm : jr.at("moved")) {
        Word letter = parse_word(jm.at("letter").get<std::string>(), s);
        if (letter.size() != 1 || letter.ls[0] < 0)
          fail(ErrKind::InvalidConfig,
               "generator table record " + rec.name + ": moved letter must be a single letter");
        rec.moved[letter.ls[0]] = {parse_word(jm.at("left").get<std::string>(), s),
                                   parse_word(jm.at("right").get<std::string>(), s)};
      }
      for (auto& c : jr.at("homology")) rec.homology.push_back(Int(c.get<long long>()));
      rec.fiber_coeff = Int(jr.at("fiber_coeff").get<long long>());
      rec.separating = jr.at("separating").get<bool>();
      rec.arc_cross = jr.at("arc_cross").get<std::vector<int>>();
      t.curves.push_back(rec);
    }
    for (auto& jl : j.at("push_loops"))
      t.push_loops.push_back(parse_word(jl.get<std::string>(), s));
    check_table(t);
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrKind::InvalidConfig, "generator table " + path + " is missing fields: " + e.what());
  }
}

GenTable generator_table(const Surface& s) {
  if (const char* dir = std::getenv("TWISTKIT_TABLE_DIR")) return load_table(dir, s);
  return builtin_table(s);
}

} // namespace tk
