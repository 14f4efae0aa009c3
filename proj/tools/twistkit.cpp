#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistkit/cocycle.hpp"
#include "twistkit/error.hpp"
#include "twistkit/mapping_class.hpp"
#include "twistkit/verify.hpp"
#include "twistkit/winding.hpp"

using namespace tk;

namespace {

struct Opts {
  int genus = 2;
  int punctures = 0;
  int marked = 1;
  std::string word;
  std::string suite;
  std::string framing_path;
  std::string subgroup_path;
  int cases = 100;
  int max_len = 6;
  std::uint64_t seed = 42;
  bool json = false;
};

void add_surface_flags(CLI::App* cmd, Opts& o) {
  cmd->add_option("-g,--genus", o.genus, "genus");
  cmd->add_option("-B", o.punctures, "punctures");
  cmd->add_option("-P", o.marked, "marked points, basepoint included");
  cmd->add_flag("--json", o.json, "machine-readable output");
}

GenTable table_for(const Opts& o) {
  Surface s{o.genus, o.punctures, o.marked};
  s.check();
  return generator_table(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::InvalidConfig, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_exps(const std::vector<int>& exps) {
  std::string out = "(";
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(exps[i]);
  }
  return out + ")";
}

int cmd_cocycle(const Opts& o) {
  GenTable t = table_for(o);
  MappingClass f = compose(t, parse_twist_word(o.word, t.s));
  SymChar chi = standard_symbolic_character(t.s);
  SymDetValue d = determinant_cocycle(f, chi);
  std::vector<std::string> names = char_var_names(t.s);
  if (o.json) {
    nlohmann::json j;
    j["word"] = o.word;
    j["value"] = format_ratfn(d.value, names);
    if (d.monomial) {
      j["monomial"] = {{"coefficient", d.monomial->coeff.str()},
                       {"exponents", d.monomial->exps}};
    } else {
      j["monomial"] = nullptr;
    }
    j["abs_part"] = format_ratfn(d.abs_part, names);
    j["rel_part"] = format_ratfn(d.rel_part, names);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "value = " << format_ratfn(d.value, names) << "\n";
  if (d.monomial)
    std::cout << "monomial exponents = " << format_exps(d.monomial->exps) << "\n";
  else
    std::cout << "monomial exponents = none\n";
  std::cout << "abs part = " << format_ratfn(d.abs_part, names) << "\n";
  std::cout << "rel part = " << format_ratfn(d.rel_part, names) << "\n";
  return 0;
}

int cmd_verify(const Opts& o) {
  if (!known_suite(o.suite)) fail(ErrKind::Parse, "unknown suite " + o.suite);
  SuiteConfig cfg;
  cfg.genus = o.genus;
  cfg.punctures = o.punctures;
  cfg.marked = o.marked;
  cfg.seed = o.seed;
  cfg.max_word_len = o.max_len;
  cfg.case_count = o.cases;
  SuiteReport rep = run_suite(o.suite, cfg);
  std::cout << (o.json ? report_json(rep) + "\n" : report_text(rep));
  return rep.passed() ? 0 : 1;
}

int cmd_framing(const Opts& o) {
  GenTable t = table_for(o);
  WindingClass w = derive_framing_from_A(t);
  if (o.json) {
    std::cout << framing_json(w) << "\n";
    return 0;
  }
  std::cout << "zeta = " << w.zeta << "\n";
  for (const CurveRecord& r : t.curves)
    std::cout << "W(" << r.name << "-hat) = " << w.value(r.name) << "\n";
  std::cout << "W(delta-hat) = " << w.delta_value << "\n";
  return 0;
}

int cmd_membership(const Opts& o) {
  GenTable t = table_for(o);
  WindingClass w = o.framing_path.empty()
                       ? (t.s.closed() && t.s.P == 1 ? derive_framing_from_A(t)
                                                     : reference_framing(t))
                       : framing_from_json(read_file(o.framing_path), t);
  if (!o.subgroup_path.empty()) {
    std::vector<MappingClass> group;
    std::istringstream lines(read_file(o.subgroup_path));
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      group.push_back(compose(t, parse_twist_word(line, t.s)));
    }
    if (group.empty()) fail(ErrKind::InvalidConfig, "subgroup file has no generators");
    WindingClass xi0 = reference_framing(t);
    ArcConditionReport rep = arc_framed_conditions(group, w, xi0, t);
    nlohmann::json j;
    j["eta_framing_ok"] = rep.eta_framing_ok;
    j["d_eta"] = nlohmann::json::array();
    for (const Int& v : rep.d_eta) j["d_eta"].push_back(v.convert_to<long long>());
    if (rep.invariant_gamma) {
      j["invariant_gamma"] = nlohmann::json::array();
      for (const Int& v : *rep.invariant_gamma)
        j["invariant_gamma"].push_back(v.convert_to<long long>());
    } else {
      j["invariant_gamma"] = nullptr;
    }
    j["arc_basis_preserved"] = rep.arc_basis_preserved;
    j["verdict"] = rep.verdict == ArcVerdict::Coboundary ? "coboundary" : "obstructed";
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  MappingClass f = compose(t, parse_twist_word(o.word, t.s));
  bool in = framed_membership(w, f);
  if (o.json) {
    nlohmann::json j;
    j["word"] = o.word;
    j["member"] = in;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (in ? "true" : "false") << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact determinant-cocycle and framing calculus for surface mapping classes"};
  app.require_subcommand(1);
  Opts o;

  CLI::App* cocycle = app.add_subcommand("cocycle", "determinant cocycle of a twist word");
  add_surface_flags(cocycle, o);
  cocycle->add_option("-w,--word", o.word, "twist word, e.g. Ta1,Te1^-1,Push(b2)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_surface_flags(verify, o);
  verify->add_option("--suite", o.suite, "suite name")->required();
  verify->add_option("--cases", o.cases, "random case count");
  verify->add_option("--seed", o.seed, "PRNG seed");
  verify->add_option("--max-len", o.max_len, "maximum random word length");

  CLI::App* framing = app.add_subcommand("framing", "derive the framing from the cocycle");
  add_surface_flags(framing, o);

  CLI::App* membership = app.add_subcommand("membership", "framed membership of a twist word");
  add_surface_flags(membership, o);
  membership->add_option("-w,--word", o.word, "twist word");
  membership->add_option("--framing", o.framing_path, "framing JSON file");
  membership->add_option("--subgroup", o.subgroup_path,
                         "file of generator twist words, one per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cocycle)) return cmd_cocycle(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
    if (app.got_subcommand(framing)) return cmd_framing(o);
    return cmd_membership(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == ErrKind::Parse ? 2 : 3;
  }
}
