// Satisfiability-preserving reductions with model reconstruction traces.
#pragma once

#include <optional>
#include <vector>

#include "gcls/core.hpp"

namespace gcls {

struct TraceStep {
  enum class Kind {
    Assign,     // theta overrides the model (autarkies, trivial domains)
    Eliminate,  // pick a value for var satisfying `clauses`
    Alias       // var was renamed to alias_var; value j of alias_var is alias_map[j]
  };
  Kind kind = Kind::Assign;
  PartialAssignment theta;
  Var var = 0;
  std::vector<Clause> clauses;
  Var alias_var = 0;
  std::vector<Value> alias_map;
};

// Steps are recorded in application order and undone in reverse.
struct ReductionTrace {
  std::vector<TraceStep> steps;
  void append(const ReductionTrace& later);
  // Turns a satisfying assignment of the reduced instance into one for the input.
  PartialAssignment reconstruct(const PartialAssignment& model) const;
};

struct ReductionResult {
  MultiClauseSet result;
  ReductionTrace trace;
};

ReductionResult unit_clause_propagation(const MultiClauseSet& f);

ReductionResult pure_variable_elimination_traced(const MultiClauseSet& f);
MultiClauseSet pure_variable_elimination(const MultiClauseSet& f);

// Set view of the inclusion-minimal clauses.
MultiClauseSet subsumption_elimination(const MultiClauseSet& f);

// parents must cover every value of v (domain size given).
std::optional<Clause> resolvents(Var v, const std::vector<Clause>& parents,
                                 std::uint32_t domain_size);

// Clause-set view; throws if v does not occur.
MultiClauseSet dp_resolve(const MultiClauseSet& f, Var v);
// Strict inequality in the DP clause-count bound, or v pure.
bool is_degenerate_dp(const MultiClauseSet& f, Var v);
bool is_singular(const MultiClauseSet& f, Var v);

struct SingularDpResult {
  MultiClauseSet result;
  bool degenerate = false;
};
SingularDpResult singular_dp(const MultiClauseSet& f, Var v);

bool is_blocked(const Clause& c, const MultiClauseSet& f, Var v);

ReductionResult r_reduction_traced(const MultiClauseSet& f);
MultiClauseSet r_reduction(const MultiClauseSet& f);
ReductionResult s_reduction_traced(const MultiClauseSet& f);
MultiClauseSet s_reduction(const MultiClauseSet& f);

}  // namespace gcls
