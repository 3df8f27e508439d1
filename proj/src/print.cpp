#include "thu/print.hpp"

#include <sstream>
#include <vector>

namespace thu {

namespace {

// Precedence contexts: 0 any form, 1 application chain (no bare binder or
// arrow), 2 single atom.
constexpr int kAny = 0;
constexpr int kApps = 1;
constexpr int kAtom = 2;

void collect_avoid(const Term& t, int depth, const std::vector<std::string>& stack,
                   std::set<std::string>& avoid) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      avoid.insert(t->name);
      return;
    case TermKind::BVar:
      if (t->index > depth) {
        std::size_t pos = stack.size() - 1 - static_cast<std::size_t>(t->index - depth - 1);
        if (pos < stack.size()) avoid.insert(stack[pos]);
      }
      return;
    case TermKind::App:
      collect_avoid(t->left, depth, stack, avoid);
      collect_avoid(t->right, depth, stack, avoid);
      return;
    case TermKind::Prod:
    case TermKind::Abs:
      collect_avoid(t->left, depth, stack, avoid);
      collect_avoid(t->right, depth + 1, stack, avoid);
      return;
    default:
      return;
  }
}

std::string freshen(const std::string& hint, const std::set<std::string>& avoid) {
  std::string base = hint;
  if (base.empty() || base == "_" || base[0] == '$') base = "x";
  if (!avoid.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

void pp(std::ostream& out, const Term& t, int prec, std::vector<std::string>& stack) {
  switch (t->kind) {
    case TermKind::Sort:
      out << (t->is_kind ? "KIND" : "TYPE");
      return;
    case TermKind::Const:
    case TermKind::Var:
      out << t->name;
      return;
    case TermKind::BVar: {
      std::size_t pos = stack.size() - 1 - static_cast<std::size_t>(t->index);
      if (pos < stack.size())
        out << stack[pos];
      else
        out << "$" << t->index;  // dangling index, internal use only
      return;
    }
    case TermKind::App: {
      if (prec >= kAtom) out << "(";
      pp(out, t->left, kApps, stack);
      out << " ";
      pp(out, t->right, kAtom, stack);
      if (prec >= kAtom) out << ")";
      return;
    }
    case TermKind::Prod: {
      if (!body_uses_binder(t)) {
        if (prec >= kApps) out << "(";
        pp(out, t->left, kApps, stack);
        out << " -> ";
        // arrows associate to the right; the body ignores its binder, so the
        // stack still gets one entry to keep indices aligned
        stack.push_back("_");
        pp(out, t->right, kAny, stack);
        stack.pop_back();
        if (prec >= kApps) out << ")";
        return;
      }
      std::set<std::string> avoid;
      collect_avoid(t->right, 0, stack, avoid);
      std::string name = freshen(t->name, avoid);
      if (prec >= kApps) out << "(";
      out << "!" << name << " : ";
      // a binder-headed domain must be parenthesized, arrows need not be
      pp(out, t->left, t->left->kind == TermKind::Abs || (t->left->kind == TermKind::Prod &&
                                                          body_uses_binder(t->left))
                           ? kAtom
                           : kAny,
         stack);
      out << ". ";
      stack.push_back(name);
      pp(out, t->right, kAny, stack);
      stack.pop_back();
      if (prec >= kApps) out << ")";
      return;
    }
    case TermKind::Abs: {
      std::set<std::string> avoid;
      collect_avoid(t->right, 0, stack, avoid);
      std::string name = freshen(t->name, avoid);
      if (prec >= kApps) out << "(";
      out << "\\" << name << " : ";
      pp(out, t->left, t->left->kind == TermKind::Abs || (t->left->kind == TermKind::Prod &&
                                                          body_uses_binder(t->left))
                           ? kAtom
                           : kAny,
         stack);
      out << ". ";
      stack.push_back(name);
      pp(out, t->right, kAny, stack);
      stack.pop_back();
      if (prec >= kApps) out << ")";
      return;
    }
  }
}

}  // namespace

std::string show_term(const Term& t) {
  std::ostringstream out;
  std::vector<std::string> stack;
  pp(out, t, kAny, stack);
  return out.str();
}

std::string show_context(const Context& ctx) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) out << ", ";
    out << ctx[i].first << " : " << show_term(ctx[i].second);
  }
  return out.str();
}

}  // namespace thu
