#include "cli.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include <mcg/abelianization.hpp>
#include <mcg/dihedral.hpp>
#include <mcg/interchange.hpp>
#include <mcg/mod2.hpp>
#include <mcg/relations.hpp>
#include <mcg/representation.hpp>
#include <mcg/scenario.hpp>
#include <mcg/word.hpp>

namespace mcg::cli {

namespace {

struct Options {
  int genus = 0;
  std::string rep;
  std::string word;
  std::string format = "text";
  std::string out;
  int branch_limit = 64;
  std::string scenario_id;
  int scenario_r = 0;
};

// Bad input values, as opposed to failed checks; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int require_genus(const Options& opt) {
  if (opt.genus <= 0) throw UsageError("--genus is required");
  return opt.genus;
}

GeneratorTable table_for(const Options& opt) {
  if (opt.rep.empty()) throw UsageError("--rep is required");
  return rep_table(rep_from_name(opt.rep), require_genus(opt));
}

void require_word(const Options& opt) {
  if (opt.word.empty()) throw UsageError("--word is required");
}

Word parse_in_domain(const GeneratorTable& table, const std::string& text) {
  SurfaceContext ctx{table.genus, 0, table.domain};
  return parse_word(text, ctx);
}

Word parse_surface_word(const Options& opt) {
  require_word(opt);
  SurfaceContext ctx{require_genus(opt), 0, SurfaceKind::Nonorientable};
  return parse_word(opt.word, ctx);
}

std::string v_coords_str(const std::vector<GF2>& z) {
  std::string s;
  for (size_t i = 0; i < z.size(); ++i) {
    if (!z[i].v) continue;
    if (!s.empty()) s += " + ";
    s += "x" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

void run_verify_relations(Report& report, const Options& opt) {
  GeneratorTable table = table_for(opt);
  report.add_note("relation suite of the closed genus " +
                  std::to_string(table.genus) + " surface under " +
                  rep_name(table.name));
  for (const Relation& rel : relations_for(table.genus, 0)) {
    std::string desc = word_str(rel.lhs) + " = " + word_str(rel.rhs);
    if (!table.covers(rel.lhs) || !table.covers(rel.rhs)) {
      report.add_skip(rel.id, desc, "letters outside the table domain");
      continue;
    }
    bool ok = eval_word(table, rel.lhs) == eval_word(table, rel.rhs);
    report.add_check(rel.id, desc, ok);
  }
}

void run_show_generator(Report& report, const Options& opt) {
  GeneratorTable table = table_for(opt);
  if (opt.word.empty())
    throw UsageError("--word names the generator, e.g. --word d3");
  Word w = parse_in_domain(table, opt.word);
  if (w.letters.size() != 1 || w.letters[0].exp != 1)
    throw UsageError("show-generator takes a single generator letter");
  Generator gen = w.letters[0].gen;
  const Matrix<Int>* m = table.find(gen);
  if (!m)
    throw UsageError("generator " + generator_str(gen) + " has no entry in the " +
                     rep_name(table.name) + " table");
  report.add_note(rep_name(table.name) + " at genus " +
                  std::to_string(table.genus) + ", dimension " +
                  std::to_string(table.dim));
  report.add_matrix(generator_str(gen), *m);
}

void run_derive_psi(Report& report, const Options& opt) {
  if (opt.rep.empty()) throw UsageError("--rep is required");
  RepName rn = rep_from_name(opt.rep);
  int k = rn == RepName::Psi1 ? 1 : rn == RepName::Psi2 ? 2 : 0;
  if (k == 0) throw UsageError("derive-psi supports psi1 and psi2 only");
  int g = require_genus(opt);
  GeneratorTable derived = derive_psi(g, k);
  GeneratorTable stored = rep_table(rn, g);
  size_t twist_entries = 0;
  for (const auto& [gen, image] : stored.entries) {
    if (gen.family == Family::U) continue;
    ++twist_entries;
    const Matrix<Int>* d = derived.find(gen);
    report.add_check("derive-" + generator_str(gen),
                     "derived twist image equals the stored table entry",
                     d != nullptr && *d == image);
  }
  report.add_check("coverage", "the derivation produced exactly the twist images",
                   twist_entries == derived.entries.size());
}

void run_conjugacy(Report& report, const Options& opt) {
  ConjugacyReport cr = conjugacy_obstruction(require_genus(opt));
  report.add_note(cr.detail);
  report.add_check("not-conjugate", "psi1 and psi2 are not conjugate",
                   !cr.conjugate,
                   "twist space dim " + std::to_string(cr.twist_space_dim) +
                       ", full space dim " + std::to_string(cr.full_space_dim));
  report.add_text("det", cr.det_poly.str());
}

void run_epsilon(Report& report, const Options& opt) {
  Word w = parse_surface_word(opt);
  report.add_matrix("image", epsilon_word(w));
}

void run_decompose_isov(Report& report, const Options& opt) {
  int g = require_genus(opt);
  if (g < 4 || g % 2 != 0)
    throw UsageError("decompose-isov needs even genus at least 4");
  int r = (g - 2) / 2;
  Word w = parse_surface_word(opt);
  Matrix<GF2> l = rho_word(w);
  IsoVDecomposition dec = decompose_isov(r, l);
  bool ok = make_B(r, dec.x, dec.z) * make_A(r, dec.symp) == l;
  report.add_check("factorization", "L = B A with the parts below", ok);
  report.add_text("x", dec.x.v ? "1" : "0");
  report.add_text("z", v_coords_str(dec.z));
  report.add_matrix("symp", dec.symp);
  report.add_matrix("L", l);
}

void run_brute_isov(Report& report, const Options& opt) {
  int g = require_genus(opt);
  if (g != 4) throw UsageError("brute-isov enumerates the genus 4 group only");
  BruteIsovResult res = brute_force_isov(1);
  report.add_note("group order " + std::to_string(res.order));
  report.add_check("fix-d", "every isometry fixes the class d", res.all_fix_d);
  report.add_check("constructive",
                   "the enumerated group equals the constructive B A family",
                   res.matches_constructive,
                   "order " + std::to_string(res.order));
}

void run_scenario_cmd(Report& report, const Options& opt) {
  ScenarioId id = scenario_from_name(opt.scenario_id);
  ScenarioOptions sopt;
  sopt.r = opt.scenario_r;
  sopt.branch_limit = opt.branch_limit;
  DerivationReport dr = run_scenario(id, sopt);
  std::string echo = report.command;
  report = dr.to_report();
  report.command = echo;
}

void run_abelianize(Report& report, const Options& opt) {
  Word w = parse_surface_word(opt);
  AbelianClass cls = abelianize(w);
  std::string basis;
  for (const std::string& name : abelian_basis_names(w.ctx.genus)) {
    if (!basis.empty()) basis += ", ";
    basis += name;
  }
  report.add_note("abelianization basis: " + basis);
  report.add_text("class", cls.str());
}

void run_dihedral(Report& report, const Options& opt) {
  require_word(opt);
  SurfaceContext ctx{4, 0, SurfaceKind::Nonorientable};
  Word w = parse_word(opt.word, ctx);
  DihedralElement elem = dihedral_eval(w);
  report.add_text("element", elem.str());
  auto ord = elem.order();
  report.add_text("order", ord ? std::to_string(*ord) : "infinite");
}

void run_eval(Report& report, const Options& opt) {
  require_word(opt);
  GeneratorTable table = table_for(opt);
  Word w = parse_in_domain(table, opt.word);
  report.add_matrix("image", eval_word(table, w));
}

}  // namespace

DispatchResult dispatch(const std::vector<std::string>& args) {
  DispatchResult result;
  Options opt;

  CLI::App app{"exact matrix models of mapping class group representations"};
  app.name("mcgreps");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool genus, bool rep, bool word) {
    cmd->add_option("--format", opt.format, "report format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--out", opt.out, "also write the report to this file");
    if (genus)
      cmd->add_option("--genus", opt.genus, "genus of the nonorientable surface");
    if (rep)
      cmd->add_option("--rep", opt.rep,
                      "representation: phi, psi1, psi2, psi1p, psi2p");
    if (word)
      cmd->add_option("--word", opt.word,
                      "word in the surface generators, e.g. \"d1 e2^-1 u3\"");
  };

  CLI::App* c_verify = app.add_subcommand(
      "verify-relations", "evaluate the relation suite under a representation");
  add_common(c_verify, true, true, false);
  CLI::App* c_show = app.add_subcommand(
      "show-generator", "print one generator image from a stored table");
  add_common(c_show, true, true, true);
  CLI::App* c_derive = app.add_subcommand(
      "derive-psi", "recompute the twist images through the double cover");
  add_common(c_derive, true, true, false);
  CLI::App* c_conj = app.add_subcommand(
      "conjugacy", "conjugacy obstruction between psi1 and psi2");
  add_common(c_conj, true, false, false);
  CLI::App* c_eps =
      app.add_subcommand("epsilon", "mod 2 symplectic image of a word");
  add_common(c_eps, true, false, true);
  CLI::App* c_dec = app.add_subcommand(
      "decompose-isov", "factor the mod 2 image of a word as B A");
  add_common(c_dec, true, false, true);
  CLI::App* c_brute = app.add_subcommand(
      "brute-isov", "exhaustively enumerate the genus 4 isometry group");
  add_common(c_brute, true, false, false);
  CLI::App* c_scen =
      app.add_subcommand("scenario", "machine-checked symbolic derivation");
  c_scen
      ->add_option("id", opt.scenario_id,
                   "one of lemma51, thm13_g6m4, sec7_odd, sec7_even, lemma83")
      ->required();
  c_scen->add_option("--r", opt.scenario_r,
                     "size parameter for the parametric scenarios");
  c_scen->add_option("--branch-limit", opt.branch_limit,
                     "cap on solver branches");
  add_common(c_scen, false, false, false);
  CLI::App* c_ab = app.add_subcommand(
      "abelianize", "class of a word in the abelianized group");
  add_common(c_ab, true, false, true);
  CLI::App* c_dih = app.add_subcommand(
      "dihedral", "image of a genus 4 word in the infinite dihedral quotient");
  add_common(c_dih, false, false, true);
  CLI::App* c_eval =
      app.add_subcommand("eval", "image of a word under a representation");
  add_common(c_eval, true, true, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.output = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.error = std::string(e.what()) + "\n" + app.help();
    return result;
  }

  Report report;
  report.tool = tool_banner();
  for (const std::string& a : args) {
    if (!report.command.empty()) report.command += " ";
    report.command += a;
  }

  try {
    if (c_verify->parsed()) run_verify_relations(report, opt);
    else if (c_show->parsed()) run_show_generator(report, opt);
    else if (c_derive->parsed()) run_derive_psi(report, opt);
    else if (c_conj->parsed()) run_conjugacy(report, opt);
    else if (c_eps->parsed()) run_epsilon(report, opt);
    else if (c_dec->parsed()) run_decompose_isov(report, opt);
    else if (c_brute->parsed()) run_brute_isov(report, opt);
    else if (c_scen->parsed()) run_scenario_cmd(report, opt);
    else if (c_ab->parsed()) run_abelianize(report, opt);
    else if (c_dih->parsed()) run_dihedral(report, opt);
    else if (c_eval->parsed()) run_eval(report, opt);
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.error = std::string(e.what()) + "\n";
    return result;
  } catch (const WordParseError& e) {
    result.exit_code = 2;
    result.error = std::string("word error: ") + e.what() + "\n";
    return result;
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.error = std::string(e.what()) + "\n";
    return result;
  }

  std::string rendered =
      opt.format == "structured" ? report.render_json() : report.render_text();
  result.output = rendered;
  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) {
      result.exit_code = 2;
      result.error = "cannot open --out file: " + opt.out + "\n";
      return result;
    }
    file << rendered;
  }
  result.exit_code = report.all_passed() ? 0 : 1;
  result.report = std::move(report);
  return result;
}

}  // namespace mcg::cli
