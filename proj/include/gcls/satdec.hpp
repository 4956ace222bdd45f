// Satisfiability decision, bounded-deficiency autarky search and MU tests.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "gcls/core.hpp"

namespace gcls {

// Raised when an exhaustive oracle would exceed its configured cap.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 2e7 unless GCLS_BRUTE_CAP is set.
std::uint64_t brute_force_cap();
// Size of PASS(var(F)) saturated at UINT64_MAX.
std::uint64_t assignment_space(const MultiClauseSet& f);

// First satisfying total assignment over var(F) in lexicographic order.
std::optional<PartialAssignment> brute_force_sat(const MultiClauseSet& f,
                                                 std::optional<std::uint64_t> cap = std::nullopt);

struct SatResult {
  bool satisfiable = false;
  PartialAssignment witness;
  std::uint64_t nodes = 0;
};

SatResult sat_bounded_deficiency(const MultiClauseSet& f);
// Search on the direct translation; nodes <= 2^delta*(fpt_kernel(F)).
SatResult sat_fpt(const MultiClauseSet& f);
// The reduced boolean instance the fpt search starts from.
MultiClauseSet fpt_kernel(const MultiClauseSet& f);

bool is_autarky(const PartialAssignment& phi, const MultiClauseSet& f);
// Touches at least one clause of F.
bool is_nontrivial_autarky(const PartialAssignment& phi, const MultiClauseSet& f);
// nullopt means F is lean.
std::optional<PartialAssignment> find_nontrivial_autarky_bounded(const MultiClauseSet& f);
MultiClauseSet lean_kernel_bounded(const MultiClauseSet& f);

bool implies(const MultiClauseSet& f, const Clause& c);
bool is_irredundant(const MultiClauseSet& f);
bool is_minimally_unsatisfiable(const MultiClauseSet& f);

}  // namespace gcls
