#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thu/encode.hpp"
#include "thu/encode_text.hpp"
#include "thu/error.hpp"
#include "thu/fragment.hpp"
#include "thu/parse.hpp"
#include "thu/print.hpp"
#include "thu/script.hpp"
#include "thu/theory_u.hpp"
#include "thu/typing.hpp"

namespace {

using namespace thu;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::UsageError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

int error_exit(const Error& e) {
  return e.code == ErrorCode::SyntaxError || e.code == ErrorCode::UsageError ? 2 : 1;
}

void print_error(const std::string& where, const Error& e, bool records) {
  std::ostringstream msg;
  if (e.line) msg << e.line << ":" << e.column << ": ";
  msg << error_code_name(e.code) << ": " << e.what();
  if (records)
    std::cout << "fail\t" << where << "\t" << msg.str() << "\n";
  else
    std::cout << where << ": " << msg.str() << "\n";
}

std::string show_meta(const Context& meta) {
  std::string out;
  for (std::size_t i = 0; i < meta.size(); ++i) {
    if (i) out += ", ";
    out += meta[i].first + " : " + show_term(meta[i].second);
  }
  return out;
}

std::string rule_record(const RewriteRule& r) {
  std::string out = r.name + ": " + show_term(r.lhs) + " --> " + show_term(r.rhs);
  if (!r.meta_ctx.empty()) out += " with " + show_meta(r.meta_ctx);
  if (!r.lhs_equations.empty()) {
    out += " where ";
    for (std::size_t i = 0; i < r.lhs_equations.size(); ++i) {
      if (i) out += ", ";
      out += r.lhs_equations[i].first + " = " + show_term(r.lhs_equations[i].second);
    }
  }
  return out;
}

int run_scripts(const std::vector<std::string>& files, const RunOptions& opt) {
  int rc = 0;
  for (const std::string& file : files) {
    std::string src;
    try {
      src = read_file(file);
    } catch (const Error& e) {
      print_error(file, e, opt.records);
      return 2;
    }
    RunResult res = run_script(src, file, opt);
    std::cout << res.output;
    rc = std::max(rc, res.exit_code);
    if (res.exit_code != 0 && !opt.keep_going) break;
  }
  return rc;
}

int cmd_normalize(const std::string& file, const RunOptions& opt) {
  Theory th = ambient_theory(opt.theory);
  Term t = resolve_constants(th, parse_term_text(read_file(file)));
  lint_no_dagger(th, t);
  Term nf = normalize(th.rules(), t, opt.fuel).term;
  if (opt.records)
    std::cout << "ok\tnormalize\t" << show_term(nf) << "\n";
  else
    std::cout << show_term(nf) << "\n";
  return 0;
}

int cmd_catalog(const std::string& name, bool records) {
  Theory th = name.empty() ? theory_u() : subtheory(name);
  if (!records)
    std::cout << "theory " << th.name() << ": " << th.sig().size() << " declarations, "
              << th.rules().size() << " rules\n";
  for (const AxiomCluster& cl : th.clusters()) {
    const Declaration* d = th.sig().find(cl.name);
    std::string decl = d->name + " : " + show_term(d->type) + (d->dagger ? " [dagger]" : "");
    if (records) {
      std::string rules;
      for (std::size_t i = 0; i < cl.rule_names.size(); ++i) {
        if (i) rules += "; ";
        rules += rule_record(*th.find_rule(cl.rule_names[i]));
      }
      std::cout << "ok\tcluster\tname=" << cl.name << " decl=[" << decl << "] rules=[" << rules
                << "]\n";
    } else {
      std::cout << "cluster " << cl.name << "\n  " << decl << "\n";
      for (const std::string& rn : cl.rule_names)
        std::cout << "  rule " << rule_record(*th.find_rule(rn)) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& name, long fuel, bool records) {
  CatalogVerification v = verify_catalog(fuel);
  bool found = name.empty();
  bool all_ok = v.declarations_typed;
  std::ostringstream out;
  if (!records)
    out << "declarations typed: " << (v.declarations_typed ? "yes" : "NO") << "\n";
  else if (!v.declarations_typed)
    out << "fail\tverify\tdeclarations are not all well-typed\n";
  for (const EntryVerification& e : v.entries) {
    if (!name.empty() && e.name != name) continue;
    found = true;
    bool ok = e.fragment_ok && e.orthogonal && e.preservation_ok;
    all_ok = all_ok && ok;
    std::string completion =
        e.completion.empty() ? std::string() : " completion=" + join(e.completion);
    if (records) {
      out << (ok ? "ok" : "fail") << "\tverify\t" << e.name << completion;
      if (!ok) out << " " << join(e.problems, "; ");
      out << "\n";
    } else {
      out << (ok ? "ok" : "FAIL") << ": " << e.name << " (fragment "
          << (e.fragment_ok ? "ok" : "BAD") << ", " << (e.orthogonal ? "orthogonal" : "OVERLAPS")
          << ", preservation " << (e.preservation_ok ? "ok" : "BAD") << ")";
      if (!e.completion.empty()) out << " completion: " << join(e.completion);
      out << "\n";
      for (const std::string& p : e.problems) out << "    " << p << "\n";
    }
  }
  if (!found) fail(ErrorCode::UnknownSubTheory, "no catalog entry named " + name);
  std::cout << out.str();
  return all_ok ? 0 : 1;
}

int cmd_fragment(const std::string& seed_csv, const RunOptions& opt) {
  Theory th = ambient_theory(opt.theory.empty() ? "theory-u" : opt.theory);
  std::set<std::string> seed;
  std::stringstream ss(seed_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) seed.insert(item);
  if (seed.empty()) fail(ErrorCode::UsageError, "--seed needs at least one constant");
  FragmentReport rep = fragment_closure(th, seed);
  std::vector<std::pair<std::size_t, std::string>> matches;
  std::set<std::string> consts(rep.constants.begin(), rep.constants.end());
  std::set<std::string> rules(rep.rules.begin(), rep.rules.end());
  for (const Theory& cand : catalog_theories()) {
    bool fits = true;
    for (const std::string& c : consts)
      if (!cand.sig().declares(c)) fits = false;
    for (const std::string& r : rules)
      if (!cand.find_rule(r)) fits = false;
    if (fits) matches.push_back({cand.sig().size(), cand.name()});
  }
  std::sort(matches.begin(), matches.end());
  std::vector<std::string> match_names;
  for (auto& [_, n] : matches) match_names.push_back(n);
  if (opt.records) {
    std::cout << "ok\tfragment\tseed=" << join(rep.seed) << " constants=" << join(rep.constants)
              << " rules=" << join(rep.rules) << " iterations=" << rep.iterations
              << " matches=" << join(match_names)
              << " smallest=" << (match_names.empty() ? "" : match_names.front()) << "\n";
  } else {
    std::cout << "seed: " << join(rep.seed, ", ") << "\n";
    std::cout << "constants (" << rep.constants.size() << "): " << join(rep.constants, ", ")
              << "\n";
    std::cout << "rules (" << rep.rules.size() << "): " << join(rep.rules, ", ") << "\n";
    std::cout << "iterations: " << rep.iterations << "\n";
    std::cout << "matches: " << join(match_names, ", ") << "\n";
    if (!match_names.empty()) std::cout << "smallest: " << match_names.front() << "\n";
  }
  return 0;
}

int cmd_encode_pl(const std::string& file) {
  PLInput in = parse_pl_input(read_file(file));
  auto [ctx, goal] = encode_pl_sequent(in.lang, in.hyps, in.goal);
  // The emitted script declares the language as fresh constants, so names
  // may not collide with the ambient theory.
  for (const auto& [n, type] : ctx)
    if (theory_u().sig().declares(n))
      fail(ErrorCode::DuplicateSymbol, "name collides with a theory constant: " + n);
  std::cout << "#REQUIRE theory-u;\n";
  for (const auto& [name, type] : ctx)
    std::cout << "symbol " << name << " : " << show_term(type) << ";\n";
  if (!in.proof.empty())
    std::cout << "#CHECK " << show_term(parse_term_text(in.proof)) << " : " << show_term(goal)
              << ";\n";
  else
    std::cout << "// goal: " << show_term(goal) << "\n";
  return 0;
}

int cmd_encode_pts(const std::string& file) {
  Theory th = encode_pts(parse_pts_spec(read_file(file)));
  std::cout << "#REQUIRE empty;\n";
  for (const Declaration& d : th.sig().declarations())
    std::cout << "symbol " << d.name << " : " << show_term(d.type) << ";\n";
  for (const RewriteRule& r : th.rules()) {
    std::cout << "rule " << r.name << " " << show_term(r.lhs) << " --> " << show_term(r.rhs);
    if (!r.meta_ctx.empty()) std::cout << " with " << show_meta(r.meta_ctx);
    std::cout << ";\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof checker for the lambda-Pi calculus modulo with a built-in theory catalog"};
  app.require_subcommand(1);

  long fuel = kDefaultFuel;
  std::string theory = "theory-u";
  bool keep_going = false;
  std::string format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--fuel", fuel, "rewrite step budget")->capture_default_str();
    sub->add_option("--theory", theory, "ambient theory: a catalog name, or 'empty'")
        ->capture_default_str();
    sub->add_flag("--keep-going", keep_going, "keep processing after a failure");
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
  };

  std::vector<std::string> files;
  std::string file;
  std::string name;
  std::string seed;

  CLI::App* check = app.add_subcommand("check", "run .thu scripts and type-check their claims");
  check->add_option("files", files, ".thu scripts ('-' for stdin)")->required()->expected(-1);
  add_common(check);

  CLI::App* norm = app.add_subcommand("normalize", "print the normal form of the term in FILE");
  norm->add_option("file", file, "file holding one term ('-' for stdin)")->required();
  add_common(norm);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "run a .thu script, classifying every #CHECK");
  classify_cmd->add_option("file", file, ".thu script ('-' for stdin)")->required();
  add_common(classify_cmd);

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "print the theory manifest, one record per cluster");
  catalog_cmd->add_option("name", name, "catalog entry (defaults to the full theory)");
  add_common(catalog_cmd);

  CLI::App* verify = app.add_subcommand(
      "verify-theory", "orthogonality, preservation, and fragment checks for catalog entries");
  verify->add_option("name", name, "catalog entry (defaults to every entry)");
  add_common(verify);

  CLI::App* fragment_cmd =
      app.add_subcommand("fragment", "close a seed set of constants into a fragment");
  fragment_cmd->add_option("--seed", seed, "comma-separated constant names")->required();
  add_common(fragment_cmd);

  CLI::App* encode_pl_cmd = app.add_subcommand(
      "encode-pl", "encode a first-order sequent (fun/pred/hyp/goal/proof) as a .thu script");
  encode_pl_cmd->add_option("file", file, "sequent description ('-' for stdin)")->required();
  add_common(encode_pl_cmd);

  CLI::App* encode_pts_cmd = app.add_subcommand(
      "encode-pts", "encode a functional pure type system (sort/axiom/rule) as a .thu script");
  encode_pts_cmd->add_option("file", file, "PTS description ('-' for stdin)")->required();
  add_common(encode_pts_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool records = format == "records";
  RunOptions opt;
  opt.fuel = fuel;
  opt.theory = theory;
  opt.keep_going = keep_going;
  opt.records = records;

  try {
    if (*check) return run_scripts(files, opt);
    if (*norm) return cmd_normalize(file, opt);
    if (*classify_cmd) {
      opt.classify_checks = true;
      return run_scripts({file}, opt);
    }
    if (*catalog_cmd) return cmd_catalog(name, records);
    if (*verify) return cmd_verify(name, fuel, records);
    if (*fragment_cmd) return cmd_fragment(seed, opt);
    if (*encode_pl_cmd) return cmd_encode_pl(file);
    if (*encode_pts_cmd) return cmd_encode_pts(file);
  } catch (const Error& e) {
    print_error(app.get_subcommands().front()->get_name(), e, records);
    return error_exit(e);
  }
  return 2;
}
