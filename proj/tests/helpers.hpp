// Small builders shared by the unit tests.
#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "gcls/gcls.hpp"

namespace th {

using namespace gcls;

inline Literal L(Var v, Value e) { return Literal{v, e}; }

inline MultiClauseSet make(std::initializer_list<std::pair<const Var, std::uint32_t>> domains,
                           std::initializer_list<Clause> clauses) {
  MultiClauseSet f{VariableTable(domains)};
  for (const auto& c : clauses) f.add(c);
  return f;
}

// Boolean clause from signed DIMACS-style literals: +x is (x,0), -x is (x,1).
inline Clause B(std::initializer_list<int> lits) {
  std::vector<Literal> out;
  for (int l : lits) out.push_back(Literal{static_cast<Var>(l < 0 ? -l : l), l < 0 ? 1u : 0u});
  return Clause(out);
}

// Rows of '+', '-', '0' over boolean variables 1..width.
inline MultiClauseSet from_matrix(const std::vector<std::string>& rows) {
  MultiClauseSet f;
  const std::size_t w = rows.empty() ? 0 : rows[0].size();
  for (Var v = 1; v <= w; ++v) f.declare(v, 2);
  for (const auto& r : rows) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != '0') lits.push_back(Literal{static_cast<Var>(i + 1), r[i] == '+' ? 0u : 1u});
    f.add(Clause(lits));
  }
  return f;
}

}  // namespace th
