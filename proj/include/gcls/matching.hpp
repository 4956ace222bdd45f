// Clause/variable bipartite graph B(F), matchings, deficiency and surplus,
// matching autarkies and the conservative repair procedure.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gcls/core.hpp"

namespace gcls {

struct VarNode {
  Var var = 0;
  std::uint32_t copy = 0;  // 1 .. |D_v|-1
  bool operator==(const VarNode&) const = default;
};

// Clause nodes are the clause occurrences of F in canonical order; variable
// nodes are (v, j) for nontrivial v in ascending order.
struct IncidenceGraph {
  std::vector<Clause> clause_nodes;
  std::vector<std::uint32_t> occurrence;  // 0-based occurrence index per clause node
  std::vector<VarNode> var_nodes;
  std::vector<std::vector<int>> adj;      // clause node -> var nodes, ascending
  std::vector<std::vector<int>> var_adj;  // var node -> clause nodes, ascending
  std::size_t edge_count() const;
};

IncidenceGraph build_incidence(const MultiClauseSet& f);
// B_phi(F): keeps an edge iff phi assigns v a value different from the
// clause's literal on v.
IncidenceGraph build_param_graph(const MultiClauseSet& f, const PartialAssignment& phi);

struct Matching {
  std::vector<int> clause_mate;  // clause node -> var node or -1
  std::vector<int> var_mate;     // var node -> clause node or -1
  std::size_t size() const;
  bool operator==(const Matching&) const = default;
};

Matching empty_matching(const IncidenceGraph& g);
Matching maximum_matching(const IncidenceGraph& g);

struct DeficiencyResult {
  std::uint64_t max_deficiency = 0;
  std::uint64_t matching_size = 0;
  // Largest matching-satisfiable sub-multi-clause-set: the matched occurrences.
  MultiClauseSet matched_part;
};

DeficiencyResult max_deficiency_full(const MultiClauseSet& f);
std::uint64_t max_deficiency(const MultiClauseSet& f);
bool is_matching_satisfiable(const MultiClauseSet& f);
std::optional<PartialAssignment> matching_satisfying_assignment(const MultiClauseSet& f);
bool is_matching_satisfying(const PartialAssignment& phi, const MultiClauseSet& f);
bool is_matching_autarky(const PartialAssignment& phi, const MultiClauseSet& f);

struct SurplusResult {
  std::int64_t value = 0;
  VarSet witness;  // nonempty V with delta(F[V]) == value, empty iff var(F) is empty
};

SurplusResult surplus_full(const MultiClauseSet& f);
std::int64_t surplus(const MultiClauseSet& f);
bool is_matching_lean(const MultiClauseSet& f);

// Generic cross-out/oracle loop.
MultiClauseSet matching_lean_kernel(const MultiClauseSet& f);
// Same result via alternating reachability from unmatched clause nodes.
MultiClauseSet matching_lean_kernel_fast(const MultiClauseSet& f);
PartialAssignment quasi_maximal_matching_autarky(const MultiClauseSet& f);

struct Change {
  enum class Kind { Extend, Flip };
  Kind kind = Kind::Extend;
  Var var = 0;
  std::optional<Value> before;
  Value after = 0;
};

struct RepairResult {
  PartialAssignment phi;
  std::vector<Change> changes;
  Matching matching;  // maximum matching of B(F) lying inside B_phi(F)
};

RepairResult repair_to_matching_maximum(const MultiClauseSet& f, const PartialAssignment& phi0);
// Every clause satisfied by `before` is satisfied by `after`.
bool is_conservative(const MultiClauseSet& f, const PartialAssignment& before,
                     const PartialAssignment& after);
// For satisfying phi_sat: phi with n(phi) <= delta*(F) and phi*F matching satisfiable.
PartialAssignment matching_distance_assignment(const MultiClauseSet& f,
                                               const PartialAssignment& phi_sat);

// max_v #_v / min_C |C| <= min_v |D_v| - 1. Throws for F without a nonempty clause.
bool tovey_check(const MultiClauseSet& f);

}  // namespace gcls
