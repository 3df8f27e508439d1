#include "thu/parse.hpp"

#include <cctype>

#include "thu/error.hpp"

namespace thu {

namespace {

enum class Tok {
  Ident,
  Hash,    // #CHECK, #INFER, ...
  Colon,
  Semi,
  Dot,
  Comma,
  LParen,
  RParen,
  Bang,
  Lambda,
  Arrow,   // ->
  Rewrite, // -->
  EqEq,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

[[noreturn]] void bad(int line, int column, const std::string& expected) {
  throw Error(ErrorCode::SyntaxError, expected, line, column);
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto step = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      step(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') step(1);
      continue;
    }
    int tl = line;
    int tc = col;
    if (ident_start(c) || (c == '#' && i + 1 < src.size() && ident_start(src[i + 1]))) {
      size_t j = i + (c == '#' ? 1 : 0) + 1;
      while (j < src.size()) {
        if (ident_char(src[j])) {
          ++j;
        } else if (src[j] == '-' && j + 1 < src.size() && ident_char(src[j + 1])) {
          j += 2;
        } else {
          break;
        }
      }
      std::string text = src.substr(i, j - i);
      step(j - i);
      out.push_back({c == '#' ? Tok::Hash : Tok::Ident, text, tl, tc});
      continue;
    }
    if (c == '-') {
      if (src.compare(i, 3, "-->") == 0) {
        step(3);
        out.push_back({Tok::Rewrite, "-->", tl, tc});
        continue;
      }
      if (src.compare(i, 2, "->") == 0) {
        step(2);
        out.push_back({Tok::Arrow, "->", tl, tc});
        continue;
      }
      bad(tl, tc, "expected '->' or '-->'");
    }
    if (c == '=') {
      if (src.compare(i, 2, "==") == 0) {
        step(2);
        out.push_back({Tok::EqEq, "==", tl, tc});
        continue;
      }
      bad(tl, tc, "expected '=='");
    }
    Tok kind;
    switch (c) {
      case ':': kind = Tok::Colon; break;
      case ';': kind = Tok::Semi; break;
      case '.': kind = Tok::Dot; break;
      case ',': kind = Tok::Comma; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '!': kind = Tok::Bang; break;
      case '\\': kind = Tok::Lambda; break;
      default:
        bad(tl, tc, std::string("unexpected character '") + c + "'");
    }
    step(1);
    out.push_back({kind, std::string(1, c), tl, tc});
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  Script script() {
    Script out;
    while (peek().kind != Tok::End) out.push_back(statement());
    return out;
  }

  Term single_term() {
    Term t = term();
    if (peek().kind != Tok::End) bad(peek().line, peek().column, "expected end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) bad(peek().line, peek().column, "expected " + what);
    return next();
  }

  std::string ident(const std::string& what) {
    if (peek().kind != Tok::Ident) bad(peek().line, peek().column, "expected " + what);
    return next().text;
  }

  bool at_ident(const std::string& word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  Term atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        if (t.text == "with") bad(t.line, t.column, "'with' is reserved");
        next();
        if (t.text == "TYPE") return type_sort();
        return var(t.text);
      }
      case Tok::LParen: {
        next();
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        bad(t.line, t.column, "expected a term");
    }
  }

  bool starts_atom() const {
    if (peek().kind == Tok::Ident) return peek().text != "with";
    return peek().kind == Tok::LParen;
  }

  Term application() {
    Term head = atom();
    while (starts_atom()) head = app(head, atom());
    return head;
  }

  Term term() {
    if (peek().kind == Tok::Bang || peek().kind == Tok::Lambda) {
      bool product = next().kind == Tok::Bang;
      std::string x = ident("a binder variable");
      expect(Tok::Colon, "':'");
      Term dom = term();
      expect(Tok::Dot, "'.'");
      Term body = term();
      return product ? pi(x, dom, body) : lam(x, dom, body);
    }
    Term lhs = application();
    if (peek().kind == Tok::Arrow) {
      next();
      return arrow(lhs, term());
    }
    return lhs;
  }

  Statement statement() {
    const Token& t = peek();
    Statement st;
    st.line = t.line;
    st.column = t.column;
    if (t.kind == Tok::Hash) {
      next();
      if (t.text == "#CHECK" || t.text == "#CLASSIFY") {
        st.kind = t.text == "#CHECK" ? Statement::Kind::Check : Statement::Kind::Classify;
        st.subject = term();
        expect(Tok::Colon, "':'");
        st.annotation = term();
      } else if (t.text == "#INFER" || t.text == "#NORMALIZE") {
        st.kind = t.text == "#INFER" ? Statement::Kind::Infer : Statement::Kind::Normalize;
        st.subject = term();
      } else if (t.text == "#CONV") {
        st.kind = Statement::Kind::Conv;
        st.subject = term();
        expect(Tok::EqEq, "'=='");
        st.annotation = term();
      } else if (t.text == "#REQUIRE") {
        st.kind = Statement::Kind::Require;
        st.name = ident("a theory name");
      } else {
        bad(t.line, t.column, "unknown command '" + t.text + "'");
      }
    } else if (at_ident("symbol")) {
      next();
      st.kind = Statement::Kind::Symbol;
      st.name = ident("a constant name");
      expect(Tok::Colon, "':'");
      st.subject = term();
    } else if (at_ident("rule")) {
      next();
      st.kind = Statement::Kind::Rule;
      st.rule_front = term();
      expect(Tok::Rewrite, "'-->'");
      st.rule_rhs = term();
      if (at_ident("with")) {
        next();
        while (true) {
          std::string x = ident("a variable name");
          expect(Tok::Colon, "':'");
          st.rule_meta.push_back({x, term()});
          if (peek().kind != Tok::Comma) break;
          next();
        }
      }
    } else {
      bad(t.line, t.column, "expected a statement");
    }
    expect(Tok::Semi, "';'");
    return st;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

Script parse(const std::string& source) { return Parser(source).script(); }

Term parse_term_text(const std::string& source) { return Parser(source).single_term(); }

}  // namespace thu
