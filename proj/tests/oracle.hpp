#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thu/signature.hpp"
#include "thu/term.hpp"

// Deliberately naive reimplementations of the closure pipeline, written
// against the term representation only. Tests compare the library's answers
// with these before trusting either.
namespace oracle {

inline void collect_constants(const thu::Term& t, std::set<std::string>& out) {
  if (!t) return;
  switch (t->kind) {
    case thu::TermKind::Const:
      out.insert(t->name);
      return;
    case thu::TermKind::App:
    case thu::TermKind::Prod:
    case thu::TermKind::Abs:
      collect_constants(t->left, out);
      collect_constants(t->right, out);
      return;
    default:
      return;
  }
}

inline std::set<std::string> constants_of(const thu::Term& t) {
  std::set<std::string> out;
  collect_constants(t, out);
  return out;
}

struct Closure {
  std::set<std::string> constants;
  std::set<std::string> rules;
};

// Exhaustive restarts until nothing changes: members pull the constants of
// their declared types; a rule whose left side fits pulls itself and the
// constants of its right side.
inline Closure close(const thu::Theory& th, const std::set<std::string>& seed) {
  Closure c;
  c.constants = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& d : th.sig().declarations()) {
      if (!c.constants.count(d.name)) continue;
      for (const auto& n : constants_of(d.type))
        if (c.constants.insert(n).second) changed = true;
    }
    for (const auto& r : th.rules()) {
      bool fits = true;
      for (const auto& n : constants_of(r.lhs))
        if (!c.constants.count(n)) fits = false;
      if (!fits) continue;
      if (c.rules.insert(r.name).second) changed = true;
      for (const auto& n : constants_of(r.rhs))
        if (c.constants.insert(n).second) changed = true;
    }
  }
  return c;
}

// Catalog entries whose signature and rule set contain the closure, smallest
// signature first, ties by name.
inline std::vector<std::string> matches(const Closure& c,
                                        const std::vector<thu::Theory>& catalog) {
  std::vector<std::pair<std::size_t, std::string>> hits;
  for (const thu::Theory& cand : catalog) {
    bool ok = true;
    for (const auto& n : c.constants)
      if (!cand.sig().declares(n)) ok = false;
    for (const auto& r : c.rules)
      if (!cand.find_rule(r)) ok = false;
    if (ok) hits.push_back({cand.sig().size(), cand.name()});
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::string> out;
  for (auto& [size, name] : hits) out.push_back(name);
  return out;
}

// The classification seed of a judgement: every constant of the context
// types, the subject, and the type.
inline std::set<std::string> judgement_seed(const thu::Context& ctx, const thu::Term& t,
                                            const thu::Term& type) {
  std::set<std::string> seed;
  for (const auto& [x, a] : ctx) collect_constants(a, seed);
  collect_constants(t, seed);
  collect_constants(type, seed);
  return seed;
}

}  // namespace oracle
