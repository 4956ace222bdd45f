// Conflict structure: conflict matrix, hitting/multihitting classes and
// exact inertia of symmetric rational matrices.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcls/core.hpp"

namespace gcls {

// Rows follow the clause occurrences of F in canonical order.
using ConflictMatrix = std::vector<std::vector<std::int64_t>>;

ConflictMatrix conflict_matrix(const MultiClauseSet& f);

struct HittingInfo {
  bool hitting = false;
  // Minimum number of clashes between two different clause occurrences (0 if m < 2).
  std::uint64_t hitting_degree = 0;
  // r with every pair clashing exactly r times; empty if not regular or m < 2.
  std::optional<std::uint64_t> regular;
  bool multihitting = false;
  // Blocks of clause indices (only when multihitting).
  std::vector<std::vector<std::size_t>> blocks;
};

HittingInfo classify_hitting(const MultiClauseSet& f);

// Throws std::invalid_argument for non-hitting input.
bool hitting_sat(const MultiClauseSet& f);

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t h = 0;
  std::size_t hdef = 0;
};

Inertia hermitian_rank(const ConflictMatrix& m);
bool deficiency_bound_check(const MultiClauseSet& f);

}  // namespace gcls
