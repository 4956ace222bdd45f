// Boolean translations built from per-variable gadgets (T(v), T'(v), gamma_v).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcls/core.hpp"

namespace gcls {

enum class Scheme { DirectWeak, DirectStrong, Nested, NestedStrong, Reduced, Log, Generic };

std::string scheme_name(Scheme s);

// Gadget clauses use local boolean variables 1..nvars; literal (x,0) is the
// positive literal x, (x,1) its negation. T[e] is gamma(e).
struct Gadget {
  std::uint32_t nvars = 0;
  std::vector<Clause> T;
  std::vector<Clause> Tprime;
};

// Throws std::invalid_argument naming the violated requirement.
void validate_gadget(const Gadget& g, std::uint32_t domain_size);

Gadget direct_gadget(std::uint32_t k, bool strong);
// order[i] is the value placed at nesting position i+1.
Gadget nested_gadget(std::uint32_t k, const std::vector<Value>& order, bool strong);
Gadget reduced_gadget(std::uint32_t k, const std::vector<Value>& order, bool strong);
Gadget log_gadget(std::uint32_t k, const std::vector<Value>& order);

struct BoolOrigin {
  Var source = 0;
  std::uint32_t index = 0;  // value for direct schemes, 1-based gadget variable otherwise
};

struct TranslationResult {
  Scheme scheme = Scheme::DirectWeak;
  MultiClauseSet cnf;
  VariableTable source;
  std::map<Var, Gadget> gadgets;
  std::map<Var, Var> block_start;
  std::map<Var, BoolOrigin> var_map;
  bool direct() const { return scheme == Scheme::DirectWeak || scheme == Scheme::DirectStrong; }
};

// Gadgets must cover var(F); they are validated.
TranslationResult generic(const MultiClauseSet& f, const std::map<Var, Gadget>& gadgets);

TranslationResult direct_weak(const MultiClauseSet& f);
TranslationResult direct_strong(const MultiClauseSet& f);
// Missing orders default to 0..k-1.
TranslationResult nested(const MultiClauseSet& f,
                         const std::map<Var, std::vector<Value>>& orders = {},
                         bool strong = false);
TranslationResult reduced(const MultiClauseSet& f, bool strong = false);
TranslationResult logarithmic(const MultiClauseSet& f);

// Values sorted by descending occurrence count, ties by value.
std::vector<Value> order_by_occurrences(const MultiClauseSet& f, Var v);
TranslationResult translate(const MultiClauseSet& f, Scheme s, bool by_occurrences = false);

// Image of a clause over var(F) under the translation.
Clause translate_clause(const TranslationResult& t, const Clause& c);

PartialAssignment push_assignment(const TranslationResult& t, const PartialAssignment& phi);
// Direct schemes use the standard completion and reject non-admissible input;
// other schemes pick the first falsified T clause after filling the block with 0.
PartialAssignment lift_assignment(const TranslationResult& t, const PartialAssignment& psi);

}  // namespace gcls
