#include "gcls/satdec.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>

#include "gcls/matching.hpp"
#include "gcls/reductions.hpp"
#include "gcls/translate.hpp"

namespace gcls {

std::uint64_t brute_force_cap() {
  if (const char* s = std::getenv("GCLS_BRUTE_CAP")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("GCLS_BRUTE_CAP must be a non-negative integer");
    }
  }
  return 20'000'000;
}

std::uint64_t assignment_space(const MultiClauseSet& f) {
  std::uint64_t n = 1;
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  for (Var v : f.vars()) {
    std::uint64_t d = f.domain_size(v);
    n = n > max / d ? max : n * d;
  }
  return n;
}

std::optional<PartialAssignment> brute_force_sat(const MultiClauseSet& f,
                                                 std::optional<std::uint64_t> cap) {
  std::uint64_t limit = cap ? *cap : brute_force_cap();
  if (assignment_space(f) > limit)
    throw Refusal("assignment space exceeds the brute-force cap of " + std::to_string(limit));
  if (f.has_empty_clause()) return std::nullopt;
  const VarSet vs = f.vars();
  std::vector<Var> order(vs.begin(), vs.end());
  std::map<Var, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  // Each clause is checked once its last variable is assigned.
  std::vector<std::vector<const Clause*>> due(order.size());
  for (const auto& [c, m] : f.clauses()) due[pos[c.literals().back().var]].push_back(&c);
  std::vector<Value> a(order.size());
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == order.size()) return true;
    for (Value e = 0; e < f.domain_size(order[i]); ++e) {
      a[i] = e;
      bool ok = std::all_of(due[i].begin(), due[i].end(), [&](const Clause* c) {
        return std::any_of(c->begin(), c->end(),
                           [&](const Literal& x) { return a[pos[x.var]] != x.value; });
      });
      if (ok && go(i + 1)) return true;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  PartialAssignment phi;
  for (std::size_t i = 0; i < order.size(); ++i) phi.set(order[i], a[i]);
  return phi;
}

namespace {

// Calls visit(phi) for every phi with var(phi) in vars and n(phi) == k, in
// lexicographic order of variable subsets and then values; stops when visit
// returns true.
bool for_each_assignment(const MultiClauseSet& f, const std::vector<Var>& vars, std::size_t k,
                         const std::function<bool(const PartialAssignment&)>& visit) {
  std::vector<std::size_t> idx(k);
  PartialAssignment phi;
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t depth, std::size_t from) {
    if (depth == k) return visit(phi);
    for (std::size_t i = from; i + (k - depth) <= vars.size(); ++i) {
      Var v = vars[i];
      for (Value e = 0; e < f.domain_size(v); ++e) {
        phi.set(v, e);
        if (pick(depth + 1, i + 1)) return true;
      }
      phi.erase(v);
    }
    return false;
  };
  return pick(0, 0);
}

}  // namespace

SatResult sat_bounded_deficiency(const MultiClauseSet& f) {
  std::uint64_t d = max_deficiency(f);
  const VarSet vs = f.vars();
  std::vector<Var> vars(vs.begin(), vs.end());
  SatResult r;
  for (std::size_t k = 0; k <= std::min<std::uint64_t>(d, vars.size()); ++k) {
    bool found = for_each_assignment(f, vars, k, [&](const PartialAssignment& phi) {
      ++r.nodes;
      auto psi = matching_satisfying_assignment(apply(phi, f));
      if (!psi) return false;
      r.satisfiable = true;
      r.witness = compose(*psi, phi);
      return true;
    });
    if (found) return r;
  }
  return r;
}

bool is_autarky(const PartialAssignment& phi, const MultiClauseSet& f) {
  for (const auto& [c, m] : f.clauses()) {
    bool touches = std::any_of(c.begin(), c.end(), [&](const Literal& x) { return phi.assigns(x.var); });
    if (touches && !phi.satisfies(c)) return false;
  }
  return true;
}

bool is_nontrivial_autarky(const PartialAssignment& phi, const MultiClauseSet& f) {
  if (!is_autarky(phi, f)) return false;
  for (const auto& [c, m] : f.clauses())
    for (const auto& x : c)
      if (phi.assigns(x.var)) return true;
  return false;
}

std::optional<PartialAssignment> find_nontrivial_autarky_bounded(const MultiClauseSet& f) {
  std::uint64_t d = max_deficiency(f);
  const VarSet vs = f.vars();
  std::vector<Var> vars(vs.begin(), vs.end());
  std::optional<PartialAssignment> out;
  for (std::size_t k = 0; k <= std::min<std::uint64_t>(d, vars.size()); ++k) {
    bool found = for_each_assignment(f, vars, k, [&](const PartialAssignment& phi) {
      auto psi = quasi_maximal_matching_autarky(apply(phi, f));
      auto theta = compose(psi, phi);
      if (!is_nontrivial_autarky(theta, f)) return false;
      out = theta;
      return true;
    });
    if (found) return out;
  }
  return std::nullopt;
}

MultiClauseSet lean_kernel_bounded(const MultiClauseSet& f) {
  MultiClauseSet cur = f;
  while (auto a = find_nontrivial_autarky_bounded(cur)) cur = apply(*a, cur);
  return cur;
}

namespace {

struct FptSearch {
  std::uint64_t nodes = 0;

  std::optional<PartialAssignment> solve(const MultiClauseSet& g0) {
    ++nodes;
    auto red = s_reduction_traced(g0);
    const MultiClauseSet& g = red.result;
    if (g.has_empty_clause()) return std::nullopt;
    if (auto psi = matching_satisfying_assignment(g)) return red.trace.reconstruct(*psi);
    auto ms = measures(g);
    Var best = 0;
    std::uint64_t best_m = std::numeric_limits<std::uint64_t>::max();
    for (const auto& [v, cnt] : ms.variable_counts) {
      std::uint64_t mv = std::numeric_limits<std::uint64_t>::max();
      for (Value e = 0; e < g.domain_size(v); ++e) mv = std::min(mv, ms.s_counts[Literal{v, e}]);
      if (mv < best_m) {
        best_m = mv;
        best = v;
      }
    }
    for (Value e = 0; e < g.domain_size(best); ++e) {
      PartialAssignment branch{{best, e}};
      if (auto sub = solve(apply(branch, g))) return red.trace.reconstruct(compose(*sub, branch));
    }
    return std::nullopt;
  }
};

}  // namespace

namespace {

// F*: fixpoint of pure elimination and matching-autarky reduction.
MultiClauseSet reduce_to_kernel(const MultiClauseSet& cnf, ReductionTrace& pre) {
  MultiClauseSet cur = cnf.as_set();
  while (true) {
    auto p = pure_variable_elimination_traced(cur);
    pre.append(p.trace);
    cur = p.result;
    if (is_matching_lean(cur)) return cur;
    TraceStep s;
    s.theta = quasi_maximal_matching_autarky(cur);
    pre.steps.push_back(s);
    cur = apply(s.theta, cur);
  }
}

}  // namespace

MultiClauseSet fpt_kernel(const MultiClauseSet& f) {
  ReductionTrace pre;
  return reduce_to_kernel(direct_weak(f).cnf, pre);
}

SatResult sat_fpt(const MultiClauseSet& f) {
  SatResult r;
  auto t = direct_weak(f);
  ReductionTrace pre;
  MultiClauseSet cur = reduce_to_kernel(t.cnf, pre);
  FptSearch search;
  auto model = search.solve(cur);
  r.nodes = search.nodes;
  if (!model) return r;
  auto boolean_model = pre.reconstruct(*model);
  r.satisfiable = true;
  r.witness = lift_assignment(t, boolean_model.restricted_to(t.cnf.vars()));
  for (const auto& [c, m] : f.clauses())
    if (!r.witness.satisfies(c)) throw std::logic_error("fpt witness does not satisfy the input");
  return r;
}

bool implies(const MultiClauseSet& f, const Clause& c) {
  return !brute_force_sat(apply(clause_to_assignment(c), f)).has_value();
}

bool is_irredundant(const MultiClauseSet& f) {
  for (const auto& [c, m] : f.clauses()) {
    MultiClauseSet rest = f;
    rest.remove(c, 1);
    if (implies(rest, c)) return false;
  }
  return true;
}

bool is_minimally_unsatisfiable(const MultiClauseSet& f) {
  return !brute_force_sat(f).has_value() && is_irredundant(f);
}

}  // namespace gcls
