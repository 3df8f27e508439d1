#include "thu/encode_text.hpp"

#include <cctype>
#include <map>

#include "thu/error.hpp"

namespace thu {

namespace {

struct Cursor {
  const std::string& src;
  std::size_t i = 0;
  int line = 1;
  int column = 1;

  void step() {
    if (src[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  }

  void skip() {
    while (i < src.size()) {
      char c = src[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        step();
      } else if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
        while (i < src.size() && src[i] != '\n') step();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return i >= src.size();
  }

  char peek() {
    skip();
    return i < src.size() ? src[i] : '\0';
  }

  [[noreturn]] void bad(const std::string& expected) {
    throw Error(ErrorCode::SyntaxError, expected, line, column);
  }

  void expect(char c) {
    if (peek() != c) bad(std::string("expected '") + c + "'");
    step();
  }

  std::string ident() {
    char c = peek();
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') bad("expected a name");
    std::string out;
    while (i < src.size()) {
      c = src[i];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        out += c;
        step();
      } else if (c == '-' && i + 1 < src.size() &&
                 (std::isalnum(static_cast<unsigned char>(src[i + 1])) || src[i + 1] == '_')) {
        out += c;
        step();
      } else {
        break;
      }
    }
    return out;
  }

  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) bad("expected a number");
    int n = 0;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      n = n * 10 + (src[i] - '0');
      step();
    }
    return n;
  }

  std::string until_semi() {
    skip();
    std::string out;
    while (i < src.size() && src[i] != ';') {
      out += src[i];
      step();
    }
    if (i >= src.size()) bad("expected ';'");
    step();
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }
};

int connective_arity(const std::string& head) {
  if (head == "top" || head == "bot") return 0;
  if (head == "not") return 1;
  if (head == "and" || head == "or" || head == "imp" || head == "impc" || head == "andc" ||
      head == "orc")
    return 2;
  return -1;
}

bool is_quantifier(const std::string& head) {
  return head == "forall" || head == "exists" || head == "forallc" || head == "existsc";
}

class PLParser {
 public:
  explicit PLParser(const std::string& src) : cur_{src} {}

  PLInput parse() {
    PLInput in;
    while (!cur_.done()) {
      std::string kw = cur_.ident();
      if (kw == "fun" || kw == "pred") {
        std::string name = cur_.ident();
        int arity = cur_.number();
        cur_.expect(';');
        if (arity_.count(name))
          fail(ErrorCode::DuplicateSymbol, "symbol declared twice: " + name);
        arity_[name] = {arity, kw == "pred"};
        if (kw == "fun")
          in.lang.functions.push_back({name, arity});
        else
          in.lang.predicates.push_back({name, arity});
      } else if (kw == "hyp") {
        in.hyps.push_back(formula());
        cur_.expect(';');
      } else if (kw == "goal") {
        in.goal = formula();
        in.has_goal = true;
        cur_.expect(';');
      } else if (kw == "proof") {
        in.proof = cur_.until_semi();
      } else {
        cur_.bad("expected fun, pred, hyp, goal, or proof");
      }
    }
    if (!in.has_goal) cur_.bad("expected a goal statement");
    return in;
  }

 private:
  PLFormula formula() {
    if (cur_.peek() == '(') {
      cur_.step();
      PLFormula f = headed();
      cur_.expect(')');
      return f;
    }
    return headed();
  }

  PLFormula headed() {
    std::string head = cur_.ident();
    if (head == "top") return pl_true();
    if (head == "bot") return pl_false();
    if (head == "not") return pl_neg(formula());
    int ca = connective_arity(head);
    if (ca == 2) {
      PLFormula a = formula();
      PLFormula b = formula();
      if (head == "and") return pl_and(a, b);
      if (head == "or") return pl_or(a, b);
      if (head == "imp") return pl_imp(a, b);
      if (head == "impc") return pl_impc(a, b);
      if (head == "andc") return pl_andc(a, b);
      return pl_orc(a, b);
    }
    if (is_quantifier(head)) {
      std::string x = cur_.ident();
      PLFormula body = formula();
      if (head == "forall") return pl_forall(x, body);
      if (head == "exists") return pl_exists(x, body);
      if (head == "forallc") return pl_forallc(x, body);
      return pl_existsc(x, body);
    }
    auto it = arity_.find(head);
    if (it == arity_.end() || !it->second.second)
      fail(ErrorCode::UnknownSymbol, "not a declared predicate: " + head);
    std::vector<PLTerm> args;
    for (int k = 0; k < it->second.first; ++k) args.push_back(term());
    return pl_atom(head, args);
  }

  PLTerm term() {
    if (cur_.peek() == '(') {
      cur_.step();
      std::string head = cur_.ident();
      auto it = arity_.find(head);
      if (it == arity_.end() || it->second.second)
        fail(ErrorCode::UnknownSymbol, "not a declared function: " + head);
      std::vector<PLTerm> args;
      for (int k = 0; k < it->second.first; ++k) args.push_back(term());
      cur_.expect(')');
      return pl_fun(head, args);
    }
    std::string name = cur_.ident();
    auto it = arity_.find(name);
    if (it != arity_.end() && !it->second.second) {
      if (it->second.first != 0)
        fail(ErrorCode::ArityMismatch, "function used without arguments: " + name);
      return pl_fun(name, {});
    }
    return pl_var(name);
  }

  Cursor cur_;
  std::map<std::string, std::pair<int, bool>> arity_;  // arity, is-predicate
};

}  // namespace

PLInput parse_pl_input(const std::string& source) { return PLParser(source).parse(); }

PtsSpec parse_pts_spec(const std::string& source) {
  Cursor cur{source};
  PtsSpec spec;
  while (!cur.done()) {
    std::string kw = cur.ident();
    if (kw == "sort") {
      spec.sorts.push_back(cur.ident());
    } else if (kw == "axiom") {
      std::string s1 = cur.ident();
      cur.expect(':');
      spec.axioms.push_back({s1, cur.ident()});
    } else if (kw == "rule") {
      std::string s1 = cur.ident();
      std::string s2 = cur.ident();
      spec.rules.push_back({s1, s2, cur.ident()});
    } else {
      cur.bad("expected sort, axiom, or rule");
    }
    cur.expect(';');
  }
  return spec;
}

}  // namespace thu
