#include "gcls/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcls/matching.hpp"
#include "gcls/satdec.hpp"

namespace gcls {

void ReductionTrace::append(const ReductionTrace& later) {
  steps.insert(steps.end(), later.steps.begin(), later.steps.end());
}

PartialAssignment ReductionTrace::reconstruct(const PartialAssignment& model) const {
  PartialAssignment m = model;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->kind) {
      case TraceStep::Kind::Assign:
        m = compose(m, it->theta);
        break;
      case TraceStep::Kind::Alias: {
        Value j = m.get(it->alias_var).value_or(0);
        m.erase(it->alias_var);
        m.set(it->var, it->alias_map.at(j));
        break;
      }
      case TraceStep::Kind::Eliminate: {
        m.erase(it->var);
        for (const auto& c : it->clauses)
          for (const auto& x : c)
            if (x.var != it->var && !m.assigns(x.var)) m.set(x.var, 0);
        std::set<Value> banned;
        for (const auto& c : it->clauses) {
          if (m.satisfies(c)) continue;
          banned.insert(*c.value_of(it->var));
        }
        Value e = 0;
        while (banned.count(e)) ++e;
        m.set(it->var, e);
        break;
      }
    }
  }
  return m;
}

namespace {

MultiClauseSet without_var_clauses(const MultiClauseSet& f, Var v) {
  MultiClauseSet r = f.empty_like();
  for (const auto& [c, m] : f.clauses())
    if (!c.has_var(v)) r.add(c, m);
  return r;
}

std::vector<Clause> clauses_with(const MultiClauseSet& f, Var v) {
  std::vector<Clause> out;
  for (const auto& [c, m] : f.clauses())
    if (c.has_var(v)) out.push_back(c);
  return out;
}

TraceStep assign_step(PartialAssignment theta) {
  TraceStep s;
  s.kind = TraceStep::Kind::Assign;
  s.theta = std::move(theta);
  return s;
}

TraceStep eliminate_step(Var v, std::vector<Clause> cs) {
  TraceStep s;
  s.kind = TraceStep::Kind::Eliminate;
  s.var = v;
  s.clauses = std::move(cs);
  return s;
}

// DP_v on the set view; v need not occur.
MultiClauseSet dp_any(const MultiClauseSet& f0, Var v) {
  MultiClauseSet f = f0.as_set();
  MultiClauseSet r = without_var_clauses(f, v);
  if (!f.vars().count(v)) return r;
  std::uint32_t d = f.domain_size(v);
  std::vector<std::vector<Clause>> by_value(d);
  for (const auto& [c, m] : f.clauses())
    if (auto e = c.value_of(v)) by_value[*e].push_back(c);
  for (const auto& b : by_value)
    if (b.empty()) return r;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    std::vector<Clause> parents;
    for (std::uint32_t e = 0; e < d; ++e) parents.push_back(by_value[e][idx[e]]);
    if (auto res = resolvents(v, parents, d)) r.add(*res);
    std::uint32_t k = 0;
    while (k < d && ++idx[k] == by_value[k].size()) idx[k++] = 0;
    if (k == d) break;
  }
  return r;
}

Value smallest_unused(const MultiClauseSet& f, Var v) {
  auto used = occurring_values(f, v);
  Value e = 0;
  while (used.count(e)) ++e;
  return e;
}

}  // namespace

ReductionResult unit_clause_propagation(const MultiClauseSet& f) {
  ReductionResult r{f, {}};
  MultiClauseSet& cur = r.result;
  while (true) {
    PartialAssignment trivial;
    for (Var v : cur.vars())
      if (cur.domain_size(v) == 1) trivial.set(v, 0);
    if (!trivial.empty()) {
      r.trace.steps.push_back(assign_step(trivial));
      cur = apply(trivial, cur);
    }
    if (cur.has_empty_clause()) {
      MultiClauseSet bot = cur.empty_like();
      bot.add(Clause{});
      // Any assignment is acceptable once the instance is unsatisfiable.
      cur = bot;
      return r;
    }
    std::optional<Literal> unit;
    for (const auto& [c, m] : cur.clauses())
      if (c.size() == 1) {
        unit = c.literals().front();
        break;
      }
    if (!unit) return r;
    Var v = unit->var;
    std::uint32_t d = cur.domain_size(v);
    MultiClauseSet kept = cur.empty_like();
    for (const auto& [c, m] : cur.clauses())
      if (!c.contains(*unit)) kept.add(c, m);
    std::vector<Value> h(d, 0), back;
    for (Value e = 0; e < d; ++e) {
      if (e == unit->value) continue;
      h[e] = static_cast<Value>(back.size());
      back.push_back(e);
    }
    Var w = kept.table().next_free();
    MultiClauseSet renamed = rename(kept, v, w, h, d - 1).result;
    TraceStep s;
    s.kind = TraceStep::Kind::Alias;
    s.var = v;
    s.alias_var = w;
    s.alias_map = back;
    r.trace.steps.push_back(s);
    cur = renamed;
  }
}

ReductionResult pure_variable_elimination_traced(const MultiClauseSet& f) {
  ReductionResult r{f, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (Var v : r.result.vars())
      if (is_pure(r.result, v)) {
        PartialAssignment theta{{v, smallest_unused(r.result, v)}};
        r.trace.steps.push_back(assign_step(theta));
        r.result = apply(theta, r.result);
        changed = true;
        break;
      }
  }
  return r;
}

MultiClauseSet pure_variable_elimination(const MultiClauseSet& f) {
  return pure_variable_elimination_traced(f).result;
}

MultiClauseSet subsumption_elimination(const MultiClauseSet& f) {
  MultiClauseSet r(f.table(), true);
  std::vector<Clause> cs;
  for (const auto& [c, m] : f.clauses()) cs.push_back(c);
  for (const auto& c : cs) {
    bool minimal = std::none_of(cs.begin(), cs.end(), [&](const Clause& o) {
      return o.size() < c.size() && o.subset_of(c);
    });
    if (minimal) r.add(c);
  }
  return r;
}

std::optional<Clause> resolvents(Var v, const std::vector<Clause>& parents,
                                 std::uint32_t domain_size) {
  std::set<Value> covered;
  for (const auto& p : parents)
    if (auto e = p.value_of(v)) covered.insert(*e);
  if (covered.size() != domain_size || parents.size() != domain_size)
    throw std::invalid_argument("parent clauses must cover every value of the variable once");
  std::map<Var, Value> lits;
  for (const auto& p : parents)
    for (const auto& x : p) {
      if (x.var == v) continue;
      auto [it, fresh] = lits.emplace(x.var, x.value);
      if (!fresh && it->second != x.value) return std::nullopt;
    }
  std::vector<Literal> out;
  for (const auto& [w, e] : lits) out.push_back(Literal{w, e});
  return Clause(std::move(out));
}

MultiClauseSet dp_resolve(const MultiClauseSet& f, Var v) {
  if (!f.vars().count(v)) throw std::invalid_argument("DP variable does not occur");
  return dp_any(f, v);
}

bool is_degenerate_dp(const MultiClauseSet& f0, Var v) {
  MultiClauseSet f = f0.as_set();
  if (is_pure(f, v)) return true;
  BigInt sum = 0, prod = 1;
  for (Value e = 0; e < f.domain_size(v); ++e) {
    auto k = literal_count(f, Literal{v, e});
    sum += k;
    prod *= k;
  }
  return BigInt(dp_resolve(f, v).c()) < BigInt(f.c()) - sum + prod;
}

bool is_singular(const MultiClauseSet& f0, Var v) {
  MultiClauseSet f = f0.as_set();
  if (!f.vars().count(v) || is_pure(f, v)) return false;
  std::uint32_t d = f.domain_size(v);
  std::uint32_t big = 0;
  for (Value e = 0; e < d; ++e)
    if (literal_count(f, Literal{v, e}) > 1) ++big;
  return big <= 1;
}

SingularDpResult singular_dp(const MultiClauseSet& f, Var v) {
  if (!is_singular(f, v)) throw std::invalid_argument("variable is not singular");
  return {dp_resolve(f, v), is_degenerate_dp(f, v)};
}

bool is_blocked(const Clause& c, const MultiClauseSet& f, Var v) {
  if (!c.has_var(v)) throw std::invalid_argument("blocking variable must occur in the clause");
  MultiClauseSet with = f.as_set(), without = f.as_set();
  with.add(c);
  without.remove(c, 1);
  return subsumption_elimination(dp_any(with, v)).same_clauses(
      subsumption_elimination(dp_any(without, v)));
}

ReductionResult r_reduction_traced(const MultiClauseSet& f) {
  ReductionResult r{f.as_set(), {}};
  MultiClauseSet& cur = r.result;
  while (true) {
    const VarSet vs = cur.vars();
    bool done = false;
    for (Var v : vs) {
      if (!is_singular(cur, v) || !is_degenerate_dp(cur, v)) continue;
      for (const auto& c : clauses_with(cur, v))
        if (is_blocked(c, cur, v)) {
          r.trace.steps.push_back(eliminate_step(v, clauses_with(cur, v)));
          cur.remove(c);
          done = true;
          break;
        }
      if (done) break;
    }
    if (done) continue;
    for (Var v : vs)
      if (is_pure(cur, v)) {
        PartialAssignment theta{{v, smallest_unused(cur, v)}};
        r.trace.steps.push_back(assign_step(theta));
        cur = apply(theta, cur);
        done = true;
        break;
      }
    if (done) continue;
    if (!is_matching_lean(cur)) {
      PartialAssignment theta = quasi_maximal_matching_autarky(cur);
      r.trace.steps.push_back(assign_step(theta));
      cur = apply(theta, cur);
      continue;
    }
    for (Var v : vs)
      if (is_singular(cur, v)) {
        r.trace.steps.push_back(eliminate_step(v, clauses_with(cur, v)));
        cur = dp_resolve(cur, v);
        done = true;
        break;
      }
    if (!done) return r;
  }
}

MultiClauseSet r_reduction(const MultiClauseSet& f) { return r_reduction_traced(f).result; }

ReductionResult s_reduction_traced(const MultiClauseSet& f) {
  ReductionResult r{f, {}};
  while (true) {
    auto rr = r_reduction_traced(r.result);
    r.trace.append(rr.trace);
    r.result = rr.result;
    if (r.result.vars().empty()) return r;
    auto sp = surplus_full(r.result);
    if (sp.value >= 2) return r;
    if (sp.value != 1) throw std::logic_error("r-reduced instance is not matching lean");
    auto sub = restrict_to(r.result.as_multi(), sp.witness);
    auto sol = sat_bounded_deficiency(sub);
    if (!sol.satisfiable) throw std::logic_error("surplus-one part is unsatisfiable");
    PartialAssignment theta = sol.witness.restricted_to(sp.witness);
    r.trace.steps.push_back(assign_step(theta));
    r.result = apply(theta, r.result);
  }
}

MultiClauseSet s_reduction(const MultiClauseSet& f) { return s_reduction_traced(f).result; }

}  // namespace gcls
