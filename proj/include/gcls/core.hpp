// Generalised clause-sets: literals "v != e" over finite-domain variables.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gcls {

using Var = std::uint32_t;
using Value = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;
using VarSet = std::set<Var>;

// Registry of variables; variable v has domain {0, ..., size-1}.
class VariableTable {
 public:
  VariableTable() = default;
  VariableTable(std::initializer_list<std::pair<const Var, std::uint32_t>> init);

  // Declares or re-declares v. Sizes must be >= 1 and ids >= 1.
  void declare(Var v, std::uint32_t size);
  bool contains(Var v) const { return sizes_.count(v) != 0; }
  std::uint32_t domain_size(Var v) const;
  const std::map<Var, std::uint32_t>& entries() const { return sizes_; }
  // Smallest id larger than every declared id.
  Var next_free() const { return sizes_.empty() ? 1 : sizes_.rbegin()->first + 1; }

  bool operator==(const VariableTable&) const = default;

 private:
  std::map<Var, std::uint32_t> sizes_;
};

struct Literal {
  Var var = 0;
  Value value = 0;
  auto operator<=>(const Literal&) const = default;
};

// A clash-free set of literals, stored sorted by variable.
class Clause {
 public:
  Clause() = default;
  // Sorts and deduplicates; throws std::invalid_argument on a clash.
  explicit Clause(std::vector<Literal> lits);
  Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}

  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  std::optional<Value> value_of(Var v) const;
  bool has_var(Var v) const { return value_of(v).has_value(); }
  bool contains(Literal x) const;
  bool subset_of(const Clause& other) const;
  // Number of variables on which the two clauses carry different values.
  std::size_t clash_count(const Clause& other) const;
  bool clashes_with(const Clause& other) const { return clash_count(other) > 0; }
  VarSet vars() const;

  Clause without_var(Var v) const;
  // Throws std::invalid_argument if x clashes with the clause.
  Clause with(Literal x) const;

  auto operator<=>(const Clause&) const = default;
  bool operator==(const Clause&) const = default;

 private:
  std::vector<Literal> lits_;
};

// Finite map variable -> value.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  PartialAssignment(std::initializer_list<std::pair<const Var, Value>> init) : map_(init) {}
  explicit PartialAssignment(std::map<Var, Value> m) : map_(std::move(m)) {}

  void set(Var v, Value e) { map_[v] = e; }
  void erase(Var v) { map_.erase(v); }
  std::optional<Value> get(Var v) const;
  bool assigns(Var v) const { return map_.count(v) != 0; }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  const std::map<Var, Value>& bindings() const { return map_; }
  VarSet vars() const;

  bool satisfies(Literal x) const;
  bool satisfies(const Clause& c) const;
  // Every literal of c is assigned and false.
  bool falsifies(const Clause& c) const;
  PartialAssignment restricted_to(const VarSet& vs) const;
  // Throws std::invalid_argument when a value lies outside its domain.
  void validate(const VariableTable& t) const;

  bool operator==(const PartialAssignment&) const = default;

 private:
  std::map<Var, Value> map_;
};

// Domain is the union; on overlap the inner assignment wins.
PartialAssignment compose(const PartialAssignment& outer, const PartialAssignment& inner);

// Clause -> multiplicity. In set view every multiplicity is forced to 1.
class MultiClauseSet {
 public:
  MultiClauseSet() = default;
  explicit MultiClauseSet(VariableTable table, bool set_view = false)
      : table_(std::move(table)), set_view_(set_view) {}

  const VariableTable& table() const { return table_; }
  void declare(Var v, std::uint32_t size) { table_.declare(v, size); }
  std::uint32_t domain_size(Var v) const { return table_.domain_size(v); }

  // Validates variables and values against the table.
  void add(const Clause& c, std::uint64_t mult = 1);
  // Removes up to mult occurrences.
  void remove(const Clause& c, std::uint64_t mult = 1);
  std::uint64_t multiplicity(const Clause& c) const;
  const std::map<Clause, std::uint64_t>& clauses() const { return clauses_; }

  bool set_view() const { return set_view_; }
  MultiClauseSet as_set() const;
  MultiClauseSet as_multi() const;
  // Same table and view, no clauses.
  MultiClauseSet empty_like() const { return MultiClauseSet(table_, set_view_); }

  std::uint64_t c() const { return total_; }
  std::size_t distinct() const { return clauses_.size(); }
  VarSet vars() const;
  std::size_t n() const { return vars().size(); }
  bool is_top() const { return clauses_.empty(); }
  bool has_empty_clause() const;
  // Clause occurrences in canonical order, each repeated by multiplicity.
  std::vector<Clause> expanded() const;

  bool operator==(const MultiClauseSet& o) const {
    return clauses_ == o.clauses_ && set_view_ == o.set_view_ && table_ == o.table_;
  }
  bool same_clauses(const MultiClauseSet& o) const { return clauses_ == o.clauses_; }

 private:
  VariableTable table_;
  bool set_view_ = false;
  std::map<Clause, std::uint64_t> clauses_;
  std::uint64_t total_ = 0;
};

MultiClauseSet apply(const PartialAssignment& phi, const MultiClauseSet& f);
MultiClauseSet cross_out(const VarSet& vs, const MultiClauseSet& f);
MultiClauseSet touched(const MultiClauseSet& f, const VarSet& vs);
// F[V] = (var(F) \ V) * F_V
MultiClauseSet restrict_to(const MultiClauseSet& f, const VarSet& vs);

struct Measures {
  std::uint64_t n = 0;
  std::uint64_t c = 0;
  std::uint64_t ell = 0;
  std::uint64_t rd = 0;
  std::int64_t delta = 0;
  std::map<Literal, std::uint64_t> literal_counts;
  std::map<Var, std::uint64_t> variable_counts;
  // s_(v,e) = #_v - #_(v,e), for every v in var(F) and every e in D_v.
  std::map<Literal, std::uint64_t> s_counts;
};

Measures measures(const MultiClauseSet& f);
std::uint64_t literal_count(const MultiClauseSet& f, Literal x);
std::uint64_t variable_count(const MultiClauseSet& f, Var v);
std::uint64_t reduced_deficiency_rd(const MultiClauseSet& f);
std::int64_t deficiency(const MultiClauseSet& f);
// Values of v occurring in F.
std::set<Value> occurring_values(const MultiClauseSet& f, Var v);
bool is_pure(const MultiClauseSet& f, Var v);

struct RenameResult {
  MultiClauseSet result;
  bool injective = true;  // on the values of v occurring in F
};

// Replaces v by w via h : D_v -> D_w. If w is undeclared it is declared with
// w_domain (defaulting to |D_v|).
RenameResult rename(const MultiClauseSet& f, Var v, Var w, const std::vector<Value>& h,
                    std::optional<std::uint32_t> w_domain = std::nullopt);

MultiClauseSet domain_uniformisation(const MultiClauseSet& f);

PartialAssignment clause_to_assignment(const Clause& c);
Clause assignment_to_clause(const PartialAssignment& phi);

// |modf_V({C})|; throws std::invalid_argument unless var(C) is a subset of V.
BigInt falsifying_count(const Clause& c, const VarSet& vs, const VariableTable& t);

}  // namespace gcls
