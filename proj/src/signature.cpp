#include "thu/signature.hpp"

namespace thu {

void Signature::append_declaration(const std::string& name, const Term& type, bool dagger) {
  if (index_.count(name))
    fail(ErrorCode::DuplicateConstant, "constant already declared: " + name);
  if (!free_vars(type).empty())
    fail(ErrorCode::OpenType, "declared type of " + name + " has free variables");
  if (!locally_closed(type))
    fail(ErrorCode::OpenType, "declared type of " + name + " has dangling bound variables");
  for (const std::string& c : const_of(type))
    if (!index_.count(c))
      fail(ErrorCode::UnknownConstant, "type of " + name + " mentions undeclared constant " + c);
  index_[name] = decls_.size();
  decls_.push_back({name, type, dagger});
}

bool Signature::declares(const std::string& name) const { return index_.count(name) != 0; }

const Declaration* Signature::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &decls_[it->second];
}

const Term& Signature::type_of(const std::string& name) const {
  const Declaration* d = find(name);
  if (!d) fail(ErrorCode::UnknownConstant, "undeclared constant: " + name);
  return d->type;
}

bool Signature::in_lambda_sigma(const Term& t) const {
  if (!locally_closed(t)) return false;
  for (const std::string& c : const_of(t))
    if (!declares(c)) return false;
  return true;
}

std::optional<std::string> head_constant(const Term& t) {
  const TermNode* cur = t.get();
  while (cur->kind == TermKind::App) cur = cur->left.get();
  if (cur->kind == TermKind::Const) return cur->name;
  return std::nullopt;
}

void Theory::append_declaration(const std::string& name, const Term& type, bool dagger) {
  sig_.append_declaration(name, type, dagger);
  cluster_index_[name] = clusters_.size();
  clusters_.push_back({name, {}});
}

namespace {

bool binder_free(const Term& t) {
  switch (t->kind) {
    case TermKind::Prod:
    case TermKind::Abs:
      return false;
    case TermKind::App:
      return binder_free(t->left) && binder_free(t->right);
    default:
      return true;
  }
}

}  // namespace

void Theory::add_rule(RewriteRule rule, const std::string& cluster) {
  if (rule_index_.count(rule.name))
    fail(ErrorCode::DuplicateConstant, "rule name already used: " + rule.name);
  auto head = head_constant(rule.lhs);
  if (!head || !binder_free(rule.lhs))
    fail(ErrorCode::BadLhsShape,
         "rule " + rule.name + ": left-hand side must be a binder-free constant-headed pattern");
  if (!sig_.in_lambda_sigma(rule.lhs) || !sig_.in_lambda_sigma(rule.rhs))
    fail(ErrorCode::OutsideSignature,
         "rule " + rule.name + " mentions constants outside the signature");
  std::set<std::string> lhs_vars = free_vars(rule.lhs);
  for (const std::string& v : free_vars(rule.rhs))
    if (!lhs_vars.count(v))
      fail(ErrorCode::EscapedVariable,
           "rule " + rule.name + ": right-hand side variable " + v +
               " does not occur on the left");
  std::string where = cluster.empty() ? *head : cluster;
  auto it = cluster_index_.find(where);
  if (it == cluster_index_.end())
    fail(ErrorCode::OutsideSignature, "rule " + rule.name + ": no cluster named " + where);
  rule_index_[rule.name] = rules_.size();
  clusters_[it->second].rule_names.push_back(rule.name);
  rules_.push_back(std::move(rule));
}

const RewriteRule* Theory::find_rule(const std::string& name) const {
  auto it = rule_index_.find(name);
  return it == rule_index_.end() ? nullptr : &rules_[it->second];
}

const AxiomCluster* Theory::find_cluster(const std::string& name) const {
  auto it = cluster_index_.find(name);
  return it == cluster_index_.end() ? nullptr : &clusters_[it->second];
}

std::vector<std::string> Theory::dagger_constants() const {
  std::vector<std::string> out;
  for (const Declaration& d : sig_.declarations())
    if (d.dagger) out.push_back(d.name);
  return out;
}

}  // namespace thu
