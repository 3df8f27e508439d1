#include "thu/fragment.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "thu/error.hpp"
#include "thu/print.hpp"
#include "thu/typing.hpp"

namespace thu {

namespace {

bool subset(const std::set<std::string>& small, const std::set<std::string>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::set<std::string> declared_names(const Theory& th) {
  std::set<std::string> out;
  for (const auto& d : th.sig().declarations()) out.insert(d.name);
  return out;
}

}  // namespace

FragmentReport fragment_closure(const Theory& base, const std::set<std::string>& seed) {
  for (const auto& s : seed)
    if (!base.sig().declares(s))
      fail(ErrorCode::UnknownConstant,
           "seed constant " + s + " is not declared in " + base.name());

  std::set<std::string> consts = seed;
  std::set<std::string> rules;
  int changing_sweeps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::string> snapshot(consts.begin(), consts.end());
    for (const auto& name : snapshot)
      for (const auto& dep : const_of(base.sig().type_of(name)))
        changed = consts.insert(dep).second || changed;
    for (const auto& r : base.rules()) {
      if (!subset(const_of(r.lhs), consts)) continue;
      changed = rules.insert(r.name).second || changed;
      for (const auto& dep : const_of(r.rhs)) changed = consts.insert(dep).second || changed;
    }
    if (changed) ++changing_sweeps;
  }

  FragmentReport rep;
  rep.seed.assign(seed.begin(), seed.end());
  rep.iterations = std::max(changing_sweeps, 1);
  for (const auto& d : base.sig().declarations())
    if (consts.count(d.name)) {
      rep.constants.push_back(d.name);
      if (d.dagger) rep.dagger_constants.push_back(d.name);
    }
  for (const auto& r : base.rules())
    if (rules.count(r.name)) rep.rules.push_back(r.name);
  return rep;
}

FragmentCheck is_fragment(const Theory& base, const Theory& candidate) {
  FragmentCheck out;
  const std::set<std::string> names = declared_names(candidate);

  for (const auto& d : candidate.sig().declarations()) {
    const Declaration* bd = base.sig().find(d.name);
    if (!bd) {
      out.violations.push_back("constant " + d.name + " is not declared in " + base.name());
      continue;
    }
    if (!alpha_eq(d.type, bd->type) || d.dagger != bd->dagger)
      out.violations.push_back("constant " + d.name + " is declared with a different type");
    for (const auto& dep : const_of(d.type))
      if (!names.count(dep))
        out.violations.push_back("type of " + d.name + " mentions " + dep +
                                 " outside the signature");
  }

  std::set<std::string> rule_names;
  for (const auto& r : candidate.rules()) {
    rule_names.insert(r.name);
    const RewriteRule* br = base.find_rule(r.name);
    if (!br || !alpha_eq(r.lhs, br->lhs) || !alpha_eq(r.rhs, br->rhs))
      out.violations.push_back("rule " + r.name + " is not a rule of " + base.name());
  }

  for (const auto& r : base.rules()) {
    if (!subset(const_of(r.lhs), names)) continue;
    if (!rule_names.count(r.name))
      out.violations.push_back("rule " + r.name +
                               " applies inside the signature but is missing");
    if (!subset(const_of(r.rhs), names))
      out.violations.push_back("rule " + r.name + " rewrites to a constant outside the signature");
  }

  out.ok = out.violations.empty();
  return out;
}

Term recheck_in_fragment(const Theory& ambient, const Theory& fragment, const Context& ctx,
                         const Term& t, const Term& expected, long fuel) {
  std::set<std::string> used = const_of(t);
  for (const auto& [name, type] : ctx)
    for (const auto& dep : const_of(type)) used.insert(dep);
  for (const auto& dep : used)
    if (!fragment.sig().declares(dep))
      fail(ErrorCode::OutsideFragment,
           "constant " + dep + " does not belong to " + fragment.name());

  Term inferred;
  try {
    well_formed_ctx(fragment, ctx, fuel);
    inferred = infer(fragment, ctx, t, fuel);
  } catch (const Error& e) {
    fail(ErrorCode::ReCheckFailed,
         "judgement does not re-check in " + fragment.name() + ": " + e.what());
  }

  if (subset(const_of(expected), declared_names(fragment))) {
    try {
      check(fragment, ctx, t, expected, fuel);
    } catch (const Error& e) {
      fail(ErrorCode::ReCheckFailed,
           "expected type does not re-check in " + fragment.name() + ": " + e.what());
    }
  } else if (!convertible(ambient.rules(), inferred, expected, fuel)) {
    fail(ErrorCode::ReCheckFailed, "re-checked type " + show_term(inferred) +
                                       " does not meet " + show_term(expected));
  }
  return inferred;
}

FragmentReport classify(const Theory& ambient, const Theory& base,
                        const std::vector<Theory>& catalog, const Context& ctx, const Term& t,
                        const Term& type, long fuel) {
  well_formed_ctx(ambient, ctx, fuel);
  check(ambient, ctx, t, type, fuel);

  std::set<std::string> judgement = const_of(t);
  for (const auto& dep : const_of(type)) judgement.insert(dep);
  for (const auto& [name, ty] : ctx)
    for (const auto& dep : const_of(ty)) judgement.insert(dep);

  std::set<std::string> seed;
  std::set<std::string> extensions;
  std::deque<std::string> pending;
  for (const auto& name : judgement) {
    if (base.sig().declares(name))
      seed.insert(name);
    else
      pending.push_back(name);
  }
  while (!pending.empty()) {
    std::string name = pending.front();
    pending.pop_front();
    if (!extensions.insert(name).second) continue;
    for (const auto& dep : const_of(ambient.sig().type_of(name))) {
      if (base.sig().declares(dep))
        seed.insert(dep);
      else if (!extensions.count(dep))
        pending.push_back(dep);
    }
  }

  FragmentReport rep = fragment_closure(base, seed);
  for (const auto& d : ambient.sig().declarations())
    if (extensions.count(d.name)) rep.context_extensions.push_back(d.name);

  std::set<std::string> closure(rep.constants.begin(), rep.constants.end());
  std::vector<std::pair<size_t, std::string>> matches;
  for (const auto& sub : catalog)
    if (subset(closure, declared_names(sub)))
      matches.push_back({sub.sig().size(), sub.name()});
  std::sort(matches.begin(), matches.end());
  for (const auto& [size, name] : matches) rep.catalog_matches.push_back(name);

  if (!rep.catalog_matches.empty()) {
    rep.smallest = rep.catalog_matches.front();
    const Theory* smallest = nullptr;
    for (const auto& sub : catalog)
      if (sub.name() == rep.smallest) smallest = &sub;
    Theory extended = *smallest;
    for (const auto& d : ambient.sig().declarations())
      if (extensions.count(d.name)) extended.append_declaration(d.name, d.type, d.dagger);
    for (const auto& r : ambient.rules()) {
      if (base.find_rule(r.name) || extended.find_rule(r.name)) continue;
      std::set<std::string> mentioned = const_of(r.lhs);
      for (const auto& dep : const_of(r.rhs)) mentioned.insert(dep);
      if (subset(mentioned, declared_names(extended))) extended.add_rule(r);
    }
    rep.rechecked_type = recheck_in_fragment(ambient, extended, ctx, t, type, fuel);
  }
  return rep;
}

}  // namespace thu
