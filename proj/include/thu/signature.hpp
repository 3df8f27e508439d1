#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thu/error.hpp"
#include "thu/term.hpp"

namespace thu {

struct Declaration {
  std::string name;
  Term type;            // closed: no free variables
  bool dagger = false;  // definitional extension marker
};

// Ordered list of typed variables; later types may mention earlier variables.
using Context = std::vector<std::pair<std::string, Term>>;

struct RewriteRule {
  std::string name;  // unique within a theory
  Term lhs;          // constant-headed, binder-free pattern
  Term rhs;
  // Typing annotations for the pattern variables, in dependency order.
  Context meta_ctx;
  // Variable-oriented equations applied as a substitution before the
  // preservation check; empty for every rule that is typable as-is.
  std::vector<std::pair<std::string, Term>> lhs_equations;
  bool dagger = false;
};

// A named axiom: one constant declaration plus the rules bundled with it.
struct AxiomCluster {
  std::string name;  // equals the declared constant's name
  std::vector<std::string> rule_names;
};

class Signature {
 public:
  // Appends c : A. The type must be closed and mention only constants
  // declared earlier (DuplicateConstant / OpenType / UnknownConstant).
  void append_declaration(const std::string& name, const Term& type, bool dagger = false);

  bool declares(const std::string& name) const;
  const Declaration* find(const std::string& name) const;
  const Term& type_of(const std::string& name) const;  // UnknownConstant if absent

  const std::vector<Declaration>& declarations() const { return decls_; }
  std::size_t size() const { return decls_.size(); }

  // Membership of t in the term algebra over this signature: locally closed
  // apart from binders, and every constant declared.
  bool in_lambda_sigma(const Term& t) const;

 private:
  std::vector<Declaration> decls_;
  std::map<std::string, std::size_t> index_;
};

class Theory {
 public:
  explicit Theory(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const Signature& sig() const { return sig_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::vector<AxiomCluster>& clusters() const { return clusters_; }

  void append_declaration(const std::string& name, const Term& type, bool dagger = false);

  // Validates the rule (BadLhsShape / EscapedVariable / OutsideSignature /
  // DuplicateConstant for a reused rule name) and appends it. The rule is
  // filed under `cluster`, defaulting to the LHS head constant's cluster.
  void add_rule(RewriteRule rule, const std::string& cluster = "");

  const RewriteRule* find_rule(const std::string& name) const;
  const AxiomCluster* find_cluster(const std::string& name) const;

  // Constants marked as definitional-extension material.
  std::vector<std::string> dagger_constants() const;

 private:
  std::string name_;
  Signature sig_;
  std::vector<RewriteRule> rules_;
  std::vector<AxiomCluster> clusters_;
  std::map<std::string, std::size_t> rule_index_;
  std::map<std::string, std::size_t> cluster_index_;
};

// The head constant of a constant-headed application spine, if any.
std::optional<std::string> head_constant(const Term& t);

}  // namespace thu
