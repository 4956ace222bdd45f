#include "gcls/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace gcls {

std::size_t IncidenceGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& a : adj) n += a.size();
  return n;
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(
      std::count_if(clause_mate.begin(), clause_mate.end(), [](int x) { return x >= 0; }));
}

namespace {

// Builds the node lists; keep(C, v) decides whether the edge exists.
template <typename Keep>
IncidenceGraph build(const MultiClauseSet& f, Keep keep) {
  IncidenceGraph g;
  std::map<Var, int> first;
  for (Var v : f.vars()) {
    std::uint32_t d = f.domain_size(v);
    if (d < 2) continue;
    first[v] = static_cast<int>(g.var_nodes.size());
    for (std::uint32_t j = 1; j < d; ++j) g.var_nodes.push_back(VarNode{v, j});
  }
  g.var_adj.resize(g.var_nodes.size());
  for (const auto& [c, m] : f.clauses())
    for (std::uint64_t i = 0; i < m; ++i) {
      int id = static_cast<int>(g.clause_nodes.size());
      g.clause_nodes.push_back(c);
      g.occurrence.push_back(static_cast<std::uint32_t>(i));
      std::vector<int> a;
      for (const auto& x : c) {
        auto it = first.find(x.var);
        if (it == first.end() || !keep(x)) continue;
        for (std::uint32_t j = 0; j + 1 < f.domain_size(x.var); ++j) {
          a.push_back(it->second + static_cast<int>(j));
          g.var_adj[it->second + j].push_back(id);
        }
      }
      g.adj.push_back(std::move(a));
    }
  return g;
}

bool augment_from_clause(const IncidenceGraph& g, Matching& m, int c, std::vector<char>& seen) {
  for (int x : g.adj[c]) {
    if (seen[x]) continue;
    seen[x] = 1;
    if (m.var_mate[x] < 0 || augment_from_clause(g, m, m.var_mate[x], seen)) {
      m.var_mate[x] = c;
      m.clause_mate[c] = x;
      return true;
    }
  }
  return false;
}

bool augment_from_var(const IncidenceGraph& g, Matching& m, int x, std::vector<char>& seen) {
  seen[x] = 1;
  for (int c : g.var_adj[x]) {
    int y = m.clause_mate[c];
    if (y == x) continue;
    if (y < 0 || (!seen[y] && augment_from_var(g, m, y, seen))) {
      m.clause_mate[c] = x;
      m.var_mate[x] = c;
      return true;
    }
  }
  return false;
}

// Alternating reachability starting from the given var nodes.
void reach_from_vars(const IncidenceGraph& g, const Matching& m, std::vector<int> start,
                     std::vector<char>& var_seen, std::vector<char>& clause_seen) {
  std::deque<int> q(start.begin(), start.end());
  for (int x : start) var_seen[x] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int c : g.var_adj[x]) {
      if (clause_seen[c] || m.var_mate[x] == c) continue;
      clause_seen[c] = 1;
      int y = m.clause_mate[c];
      if (y >= 0 && !var_seen[y]) {
        var_seen[y] = 1;
        q.push_back(y);
      }
    }
  }
}

VarSet vars_of_nodes(const IncidenceGraph& g, const std::vector<char>& var_seen) {
  VarSet s;
  for (std::size_t i = 0; i < var_seen.size(); ++i)
    if (var_seen[i]) s.insert(g.var_nodes[i].var);
  return s;
}

}  // namespace

IncidenceGraph build_incidence(const MultiClauseSet& f) {
  return build(f, [](const Literal&) { return true; });
}

IncidenceGraph build_param_graph(const MultiClauseSet& f, const PartialAssignment& phi) {
  return build(f, [&](const Literal& x) { return phi.satisfies(x); });
}

Matching empty_matching(const IncidenceGraph& g) {
  return Matching{std::vector<int>(g.clause_nodes.size(), -1),
                  std::vector<int>(g.var_nodes.size(), -1)};
}

Matching maximum_matching(const IncidenceGraph& g) {
  Matching m = empty_matching(g);
  std::vector<char> seen(g.var_nodes.size());
  for (std::size_t c = 0; c < g.clause_nodes.size(); ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    augment_from_clause(g, m, static_cast<int>(c), seen);
  }
  return m;
}

DeficiencyResult max_deficiency_full(const MultiClauseSet& f) {
  auto g = build_incidence(f);
  auto m = maximum_matching(g);
  DeficiencyResult r{0, m.size(), f.as_multi().empty_like()};
  r.max_deficiency = f.c() - r.matching_size;
  for (std::size_t c = 0; c < g.clause_nodes.size(); ++c)
    if (m.clause_mate[c] >= 0) r.matched_part.add(g.clause_nodes[c]);
  return r;
}

std::uint64_t max_deficiency(const MultiClauseSet& f) {
  auto g = build_incidence(f);
  return f.c() - maximum_matching(g).size();
}

bool is_matching_satisfiable(const MultiClauseSet& f) { return max_deficiency(f) == 0; }

namespace {
PartialAssignment witness_from_matching(const IncidenceGraph& g, const Matching& m,
                                        const MultiClauseSet& f) {
  std::map<Var, std::set<Value>> used;
  for (std::size_t c = 0; c < g.clause_nodes.size(); ++c) {
    int x = m.clause_mate[c];
    if (x < 0) continue;
    Var v = g.var_nodes[x].var;
    used[v].insert(*g.clause_nodes[c].value_of(v));
  }
  PartialAssignment phi;
  for (const auto& [v, vals] : used) {
    Value e = 0;
    while (vals.count(e)) ++e;
    if (e >= f.domain_size(v)) throw std::logic_error("matching-satisfying witness overflow");
    phi.set(v, e);
  }
  return phi;
}
}  // namespace

std::optional<PartialAssignment> matching_satisfying_assignment(const MultiClauseSet& f) {
  auto g = build_incidence(f);
  auto m = maximum_matching(g);
  if (m.size() != f.c()) return std::nullopt;
  return witness_from_matching(g, m, f);
}

bool is_matching_satisfying(const PartialAssignment& phi, const MultiClauseSet& f) {
  auto g = build_param_graph(f, phi);
  return maximum_matching(g).size() == f.c();
}

bool is_matching_autarky(const PartialAssignment& phi, const MultiClauseSet& f) {
  return is_matching_satisfying(phi, restrict_to(f.as_multi(), phi.vars()));
}

SurplusResult surplus_full(const MultiClauseSet& f) {
  VarSet vs = f.vars();
  if (vs.empty()) return {};
  auto g = build_incidence(f);
  auto m = maximum_matching(g);
  std::int64_t rd = static_cast<std::int64_t>(g.var_nodes.size());
  std::int64_t nu = static_cast<std::int64_t>(m.size());
  if (nu < rd) {
    std::vector<int> start;
    for (std::size_t x = 0; x < g.var_nodes.size(); ++x)
      if (m.var_mate[x] < 0) start.push_back(static_cast<int>(x));
    std::vector<char> vseen(g.var_nodes.size()), cseen(g.clause_nodes.size());
    reach_from_vars(g, m, start, vseen, cseen);
    return {nu - rd, vars_of_nodes(g, vseen)};
  }

  SurplusResult best{std::numeric_limits<std::int64_t>::max(), {}};
  for (Var v : vs) {
    if (f.domain_size(v) >= 2) continue;
    auto cnt = static_cast<std::int64_t>(variable_count(f, v));
    if (cnt < best.value) best = {cnt, VarSet{v}};
  }

  // Add extra copies of v one at a time; the number of successful
  // augmentations is min over V containing v of delta(F[V]).
  for (Var v : vs) {
    if (f.domain_size(v) < 2) continue;
    IncidenceGraph h = g;
    Matching mm = m;
    int proto = -1;
    for (std::size_t x = 0; x < h.var_nodes.size() && proto < 0; ++x)
      if (h.var_nodes[x].var == v) proto = static_cast<int>(x);
    std::int64_t s = 0;
    while (true) {
      int nx = static_cast<int>(h.var_nodes.size());
      h.var_nodes.push_back(VarNode{v, f.domain_size(v) + static_cast<std::uint32_t>(s)});
      h.var_adj.push_back(h.var_adj[proto]);
      for (int c : h.var_adj[proto]) h.adj[c].push_back(nx);
      mm.var_mate.push_back(-1);
      std::vector<char> seen(h.var_nodes.size());
      if (augment_from_var(h, mm, nx, seen)) {
        ++s;
        if (s >= best.value) break;
        continue;
      }
      if (s < best.value) {
        std::vector<char> vseen(h.var_nodes.size()), cseen(h.clause_nodes.size());
        reach_from_vars(h, mm, {nx}, vseen, cseen);
        VarSet w = vars_of_nodes(h, vseen);
        best.value = s;
        best.witness = deficiency(restrict_to(f.as_multi(), w)) == s ? w : VarSet{};
      }
      break;
    }
  }
  if (best.witness.empty()) throw std::logic_error("surplus witness extraction failed");
  return best;
}

std::int64_t surplus(const MultiClauseSet& f) { return surplus_full(f).value; }

bool is_matching_lean(const MultiClauseSet& f) { return f.vars().empty() || surplus(f) >= 1; }

MultiClauseSet matching_lean_kernel(const MultiClauseSet& f) {
  MultiClauseSet cur = f.as_multi();
  while (!is_matching_lean(cur)) {
    const VarSet all = cur.vars();
    std::vector<Var> order(all.begin(), all.end());
    VarSet crossed;
    Var pick = order.back();
    for (Var v : order) {
      crossed.insert(v);
      if (is_matching_lean(cross_out(crossed, cur))) {
        pick = v;
        break;
      }
    }
    MultiClauseSet next = cur.empty_like();
    for (const auto& [c, m] : cur.clauses())
      if (!c.has_var(pick)) next.add(c, m);
    cur = std::move(next);
  }
  return f.set_view() ? cur.as_set() : cur;
}

MultiClauseSet matching_lean_kernel_fast(const MultiClauseSet& f) {
  auto g = build_incidence(f);
  auto m = maximum_matching(g);
  std::vector<char> cseen(g.clause_nodes.size()), vseen(g.var_nodes.size());
  std::deque<int> q;
  for (std::size_t c = 0; c < g.clause_nodes.size(); ++c)
    if (m.clause_mate[c] < 0) {
      cseen[c] = 1;
      q.push_back(static_cast<int>(c));
    }
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    for (int x : g.adj[c]) {
      if (vseen[x]) continue;
      vseen[x] = 1;
      int d = m.var_mate[x];
      if (d >= 0 && !cseen[d]) {
        cseen[d] = 1;
        q.push_back(d);
      }
    }
  }
  MultiClauseSet r = f.empty_like();
  for (std::size_t c = 0; c < g.clause_nodes.size(); ++c)
    if (cseen[c]) r.add(g.clause_nodes[c]);
  return r;
}

PartialAssignment quasi_maximal_matching_autarky(const MultiClauseSet& f) {
  VarSet keep = matching_lean_kernel_fast(f).vars();
  VarSet vs;
  for (Var v : f.vars())
    if (!keep.count(v)) vs.insert(v);
  auto phi = matching_satisfying_assignment(restrict_to(f.as_multi(), vs));
  if (!phi) throw std::logic_error("autark part is not matching satisfiable");
  return *phi;
}

namespace {

bool edge_in(const MultiClauseSet& f, const IncidenceGraph& g, const PartialAssignment& phi,
             int c, int x) {
  (void)f;
  return phi.satisfies(Literal{g.var_nodes[x].var, *g.clause_nodes[c].value_of(g.var_nodes[x].var)});
}

// Adds edges of B_phi between free nodes in canonical order; true if any added.
bool extend_greedily(const MultiClauseSet& f, const IncidenceGraph& g,
                     const PartialAssignment& phi, Matching& m) {
  bool any = false;
  for (std::size_t c = 0; c < g.clause_nodes.size(); ++c) {
    if (m.clause_mate[c] >= 0) continue;
    for (int x : g.adj[c])
      if (m.var_mate[x] < 0 && edge_in(f, g, phi, static_cast<int>(c), x)) {
        m.clause_mate[c] = x;
        m.var_mate[x] = static_cast<int>(c);
        any = true;
        break;
      }
  }
  return any;
}

// Augmenting path in B(F) from an uncovered var node to an uncovered clause
// node: var, clause, var, ..., clause.
bool find_path(const IncidenceGraph& g, const Matching& m, int x, std::vector<char>& seen,
               std::vector<int>& path) {
  seen[x] = 1;
  path.push_back(x);
  for (int c : g.var_adj[x]) {
    if (m.var_mate[x] == c) continue;
    int y = m.clause_mate[c];
    path.push_back(c);
    if (y < 0) return true;
    if (!seen[y] && find_path(g, m, y, seen, path)) return true;
    path.pop_back();
  }
  path.pop_back();
  return false;
}

// Makes edge {c, x} usable with one conservative change (both ends free in m).
void conditional_extension(const MultiClauseSet& f, const IncidenceGraph& g,
                           PartialAssignment& phi, Matching& m, int c, int x,
                           std::vector<Change>& log) {
  Var v = g.var_nodes[x].var;
  Value e0 = *g.clause_nodes[c].value_of(v);
  if (!edge_in(f, g, phi, c, x)) {
    auto cur = phi.get(v);
    std::set<Value> banned{e0};
    if (cur) {
      for (std::size_t d = 0; d < g.clause_nodes.size(); ++d) {
        int y = m.clause_mate[d];
        if (y >= 0 && g.var_nodes[y].var == v) banned.insert(*g.clause_nodes[d].value_of(v));
      }
    }
    Value e = 0;
    while (banned.count(e)) ++e;
    if (e >= f.domain_size(v)) throw std::logic_error("no conservative value available");
    log.push_back(Change{cur ? Change::Kind::Flip : Change::Kind::Extend, v, cur, e});
    phi.set(v, e);
  }
  m.clause_mate[c] = x;
  m.var_mate[x] = c;
}

}  // namespace

RepairResult repair_to_matching_maximum(const MultiClauseSet& f, const PartialAssignment& phi0) {
  auto g = build_incidence(f);
  std::size_t nu = maximum_matching(g).size();
  RepairResult r{phi0, {}, empty_matching(g)};
  Matching& m = r.matching;
  while (true) {
    extend_greedily(f, g, r.phi, m);
    if (m.size() == nu) break;
    std::vector<int> path;
    std::vector<char> seen(g.var_nodes.size());
    for (std::size_t x = 0; x < g.var_nodes.size() && path.empty(); ++x)
      if (m.var_mate[x] < 0 && !seen[x]) find_path(g, m, static_cast<int>(x), seen, path);
    if (path.empty()) throw std::logic_error("no augmenting path below maximum");
    // path = x0, c1, x2, c3, ..., c_m
    const std::size_t len = path.size() - 1;
    bool restarted = false;
    for (std::size_t i = 1; i < len; i += 2) {
      if (extend_greedily(f, g, r.phi, m)) {
        restarted = true;
        break;
      }
      int c = path[i], old_x = path[i + 1], new_x = path[i - 1];
      m.clause_mate[c] = -1;
      m.var_mate[old_x] = -1;
      conditional_extension(f, g, r.phi, m, c, new_x, r.changes);
    }
    if (restarted) continue;
    if (extend_greedily(f, g, r.phi, m)) continue;
    conditional_extension(f, g, r.phi, m, path[len], path[len - 1], r.changes);
  }
  return r;
}

bool is_conservative(const MultiClauseSet& f, const PartialAssignment& before,
                     const PartialAssignment& after) {
  for (const auto& [c, m] : f.clauses())
    if (before.satisfies(c) && !after.satisfies(c)) return false;
  return true;
}

PartialAssignment matching_distance_assignment(const MultiClauseSet& f,
                                               const PartialAssignment& phi_sat) {
  for (const auto& [c, m] : f.clauses())
    if (!phi_sat.satisfies(c)) throw std::invalid_argument("assignment does not satisfy F");
  auto rep = repair_to_matching_maximum(f, phi_sat);
  auto g = build_incidence(f);
  PartialAssignment phi;
  for (std::size_t c = 0; c < g.clause_nodes.size(); ++c) {
    if (rep.matching.clause_mate[c] >= 0) continue;
    const Clause& cl = g.clause_nodes[c];
    if (rep.phi.satisfies(cl) && phi.satisfies(cl)) continue;
    for (const auto& x : cl)
      if (rep.phi.satisfies(x)) {
        phi.set(x.var, *rep.phi.get(x.var));
        break;
      }
  }
  return phi;
}

bool tovey_check(const MultiClauseSet& f) {
  bool nonempty = false;
  std::uint64_t min_len = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [c, m] : f.clauses()) {
    nonempty = nonempty || !c.empty();
    min_len = std::min<std::uint64_t>(min_len, c.size());
  }
  if (!nonempty) throw std::invalid_argument("tovey_check needs a non-empty clause");
  if (min_len == 0) return false;
  auto ms = measures(f);
  std::uint64_t max_occ = 0, min_dom = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [v, k] : ms.variable_counts) {
    max_occ = std::max(max_occ, k);
    min_dom = std::min<std::uint64_t>(min_dom, f.domain_size(v));
  }
  return max_occ <= (min_dom - 1) * min_len;
}

}  // namespace gcls
