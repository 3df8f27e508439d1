#include "thu/script.hpp"

#include <algorithm>
#include <sstream>

#include "thu/error.hpp"
#include "thu/fragment.hpp"
#include "thu/print.hpp"
#include "thu/theory_u.hpp"
#include "thu/typing.hpp"

namespace thu {

namespace {

const char* kind_name(Statement::Kind k) {
  switch (k) {
    case Statement::Kind::Symbol: return "symbol";
    case Statement::Kind::Rule: return "rule";
    case Statement::Kind::Check: return "check";
    case Statement::Kind::Infer: return "infer";
    case Statement::Kind::Normalize: return "normalize";
    case Statement::Kind::Conv: return "conv";
    case Statement::Kind::Classify: return "classify";
    case Statement::Kind::Require: return "require";
  }
  return "?";
}

std::vector<Term> spine(const Term& t) {
  std::vector<Term> parts;
  Term cur = t;
  while (cur->kind == TermKind::App) {
    parts.push_back(cur->right);
    cur = cur->left;
  }
  parts.push_back(cur);
  std::reverse(parts.begin(), parts.end());
  return parts;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i];
  }
  return out;
}

class Runner {
 public:
  Runner(const std::string& filename, const RunOptions& opt)
      : file_(filename), opt_(opt), th_(ambient_theory(opt.theory)) {}

  int run(const Script& script) {
    bool failed = false;
    for (const Statement& st : script) {
      try {
        exec(st);
      } catch (const Error& e) {
        failed = true;
        report_error(st, e);
        if (!opt_.keep_going) break;
      }
    }
    return failed ? 1 : 0;
  }

  std::string output() const { return out_.str(); }

 private:
  void emit(const Statement& st, const std::string& payload) {
    if (opt_.records) {
      out_ << "ok\t" << kind_name(effective(st)) << "\t" << payload << "\n";
    }
  }

  void emit_text(const std::string& line) {
    if (!opt_.records) out_ << line << "\n";
  }

  void report_error(const Statement& st, const Error& e) {
    int line = e.line ? e.line : st.line;
    int col = e.column ? e.column : st.column;
    std::ostringstream msg;
    msg << line << ":" << col << ": " << error_code_name(e.code) << ": " << e.what();
    if (opt_.records) {
      out_ << "fail\t" << kind_name(effective(st)) << "\t" << msg.str() << "\n";
    } else {
      out_ << file_ << ":" << msg.str() << "\n";
    }
  }

  Statement::Kind effective(const Statement& st) const {
    if (opt_.classify_checks && st.kind == Statement::Kind::Check)
      return Statement::Kind::Classify;
    return st.kind;
  }

  // Declared types and rule annotations must land on a sort.
  void check_is_type(const Term& ty, const std::string& who) {
    Term sort = infer(th_, {}, ty, opt_.fuel);
    if (sort->kind != TermKind::Sort)
      fail(ErrorCode::TypeMismatch, "type of " + who + " is not TYPE or KIND");
  }

  void exec(const Statement& st) {
    switch (effective(st)) {
      case Statement::Kind::Symbol: {
        Term ty = resolve_constants(th_, st.subject);
        lint_no_dagger(th_, ty);
        check_is_type(ty, st.name);
        th_.append_declaration(st.name, ty);
        emit(st, st.name + " : " + show_term(ty));
        return;
      }
      case Statement::Kind::Rule: {
        Term front = resolve_constants(th_, st.rule_front);
        auto parts = spine(front);
        RewriteRule rule;
        if (parts[0]->kind == TermKind::Var && parts.size() >= 2) {
          rule.name = parts[0]->name;
          rule.lhs = parts[1];
          for (std::size_t i = 2; i < parts.size(); ++i) rule.lhs = app(rule.lhs, parts[i]);
        } else {
          rule.name = "r" + std::to_string(th_.rules().size() + 1);
          rule.lhs = front;
        }
        rule.rhs = resolve_constants(th_, st.rule_rhs);
        for (const auto& [x, a] : st.rule_meta)
          rule.meta_ctx.push_back({x, resolve_constants(th_, a)});
        lint_no_dagger(th_, rule.lhs);
        lint_no_dagger(th_, rule.rhs);
        th_.add_rule(rule);
        emit(st, rule.name + " : " + show_term(rule.lhs) + " --> " + show_term(rule.rhs));
        return;
      }
      case Statement::Kind::Check: {
        Term t = resolve_constants(th_, st.subject);
        Term a = resolve_constants(th_, st.annotation);
        lint_no_dagger(th_, t);
        lint_no_dagger(th_, a);
        check(th_, {}, t, a, opt_.fuel);
        emit(st, show_term(t) + " : " + show_term(a));
        return;
      }
      case Statement::Kind::Infer: {
        Term t = resolve_constants(th_, st.subject);
        lint_no_dagger(th_, t);
        Term ty = infer(th_, {}, t, opt_.fuel);
        emit(st, show_term(ty));
        emit_text(show_term(ty));
        return;
      }
      case Statement::Kind::Normalize: {
        Term t = resolve_constants(th_, st.subject);
        lint_no_dagger(th_, t);
        Term nf = normalize(th_.rules(), t, opt_.fuel).term;
        emit(st, show_term(nf));
        emit_text(show_term(nf));
        return;
      }
      case Statement::Kind::Conv: {
        Term t = resolve_constants(th_, st.subject);
        Term u = resolve_constants(th_, st.annotation);
        lint_no_dagger(th_, t);
        lint_no_dagger(th_, u);
        if (!convertible(th_.rules(), t, u, opt_.fuel))
          fail(ErrorCode::TypeMismatch,
               "not convertible: " + show_term(t) + " == " + show_term(u));
        emit(st, show_term(t) + " == " + show_term(u));
        return;
      }
      case Statement::Kind::Classify: {
        Term t = resolve_constants(th_, st.subject);
        Term a = resolve_constants(th_, st.annotation);
        FragmentReport rep =
            classify(th_, theory_u(), catalog_theories(), {}, t, a, opt_.fuel);
        std::ostringstream payload;
        payload << "smallest=" << rep.smallest << " matches=" << join(rep.catalog_matches)
                << " extensions=" << join(rep.context_extensions)
                << " dagger=" << join(rep.dagger_constants)
                << " rechecked=" << show_term(rep.rechecked_type);
        emit(st, payload.str());
        if (!opt_.records) {
          out_ << "classified: " << rep.smallest << "\n";
          out_ << "  matches: " << join(rep.catalog_matches) << "\n";
          out_ << "  constants: " << join(rep.constants) << "\n";
          out_ << "  rules: " << join(rep.rules) << "\n";
          if (!rep.context_extensions.empty())
            out_ << "  extensions: " << join(rep.context_extensions) << "\n";
          if (!rep.dagger_constants.empty())
            out_ << "  dagger: " << join(rep.dagger_constants) << "\n";
          out_ << "  rechecked: " << show_term(rep.rechecked_type) << "\n";
        }
        return;
      }
      case Statement::Kind::Require: {
        th_ = ambient_theory(st.name);
        emit(st, st.name);
        return;
      }
    }
  }

  std::string file_;
  RunOptions opt_;
  Theory th_;
  std::ostringstream out_;
};

}  // namespace

Theory ambient_theory(const std::string& name) {
  if (name.empty() || name == "empty") return Theory("empty");
  if (name == "theory-u") return theory_u();
  return subtheory(name);
}

Term resolve_constants(const Theory& theory, const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
      return theory.sig().declares(t->name) ? cnst(t->name) : t;
    case TermKind::App:
      return app(resolve_constants(theory, t->left), resolve_constants(theory, t->right));
    case TermKind::Prod:
      return prod(t->name, resolve_constants(theory, t->left),
                  resolve_constants(theory, t->right));
    case TermKind::Abs:
      return abs(t->name, resolve_constants(theory, t->left),
                 resolve_constants(theory, t->right));
    default:
      return t;
  }
}

RunResult run_script(const std::string& source, const std::string& filename,
                     const RunOptions& options) {
  RunResult result;
  Script script;
  try {
    script = parse(source);
  } catch (const Error& e) {
    std::ostringstream msg;
    if (options.records) {
      msg << "fail\tparse\t" << e.line << ":" << e.column << ": "
          << error_code_name(e.code) << ": " << e.what() << "\n";
    } else {
      msg << filename << ":" << e.line << ":" << e.column << ": "
          << error_code_name(e.code) << ": " << e.what() << "\n";
    }
    result.exit_code = 2;
    result.output = msg.str();
    return result;
  }
  Runner runner(filename, options);
  result.exit_code = runner.run(script);
  result.output = runner.output();
  return result;
}

}  // namespace thu
