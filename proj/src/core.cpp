#include "gcls/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcls {

namespace {
[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

VariableTable::VariableTable(std::initializer_list<std::pair<const Var, std::uint32_t>> init) {
  for (const auto& [v, s] : init) declare(v, s);
}

void VariableTable::declare(Var v, std::uint32_t size) {
  if (v == 0) bad("variable ids must be positive");
  if (size == 0) bad("domain size must be at least 1");
  sizes_[v] = size;
}

std::uint32_t VariableTable::domain_size(Var v) const {
  auto it = sizes_.find(v);
  if (it == sizes_.end()) bad("undeclared variable " + std::to_string(v));
  return it->second;
}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i].var == lits_[i - 1].var)
      bad("clashing literals on variable " + std::to_string(lits_[i].var));
}

std::optional<Value> Clause::value_of(Var v) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), Literal{v, 0});
  if (it != lits_.end() && it->var == v) return it->value;
  return std::nullopt;
}

bool Clause::contains(Literal x) const { return std::binary_search(lits_.begin(), lits_.end(), x); }

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

std::size_t Clause::clash_count(const Clause& other) const {
  std::size_t n = 0;
  auto a = lits_.begin();
  auto b = other.lits_.begin();
  while (a != lits_.end() && b != other.lits_.end()) {
    if (a->var < b->var) {
      ++a;
    } else if (b->var < a->var) {
      ++b;
    } else {
      if (a->value != b->value) ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

VarSet Clause::vars() const {
  VarSet s;
  for (const auto& x : lits_) s.insert(x.var);
  return s;
}

Clause Clause::without_var(Var v) const {
  Clause r;
  for (const auto& x : lits_)
    if (x.var != v) r.lits_.push_back(x);
  return r;
}

Clause Clause::with(Literal x) const {
  auto l = lits_;
  l.push_back(x);
  return Clause(std::move(l));
}

std::optional<Value> PartialAssignment::get(Var v) const {
  auto it = map_.find(v);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

VarSet PartialAssignment::vars() const {
  VarSet s;
  for (const auto& [v, e] : map_) s.insert(v);
  return s;
}

bool PartialAssignment::satisfies(Literal x) const {
  auto e = get(x.var);
  return e && *e != x.value;
}

bool PartialAssignment::satisfies(const Clause& c) const {
  return std::any_of(c.begin(), c.end(), [&](const Literal& x) { return satisfies(x); });
}

bool PartialAssignment::falsifies(const Clause& c) const {
  return std::all_of(c.begin(), c.end(), [&](const Literal& x) {
    auto e = get(x.var);
    return e && *e == x.value;
  });
}

PartialAssignment PartialAssignment::restricted_to(const VarSet& vs) const {
  PartialAssignment r;
  for (const auto& [v, e] : map_)
    if (vs.count(v)) r.set(v, e);
  return r;
}

void PartialAssignment::validate(const VariableTable& t) const {
  for (const auto& [v, e] : map_)
    if (e >= t.domain_size(v))
      bad("value " + std::to_string(e) + " outside domain of variable " + std::to_string(v));
}

PartialAssignment compose(const PartialAssignment& outer, const PartialAssignment& inner) {
  auto m = inner.bindings();
  for (const auto& [v, e] : outer.bindings()) m.emplace(v, e);
  return PartialAssignment(std::move(m));
}

void MultiClauseSet::add(const Clause& c, std::uint64_t mult) {
  if (mult == 0) return;
  for (const auto& x : c)
    if (x.value >= table_.domain_size(x.var))
      bad("value " + std::to_string(x.value) + " outside domain of variable " +
          std::to_string(x.var));
  auto& m = clauses_[c];
  if (set_view_) {
    total_ += (m == 0);
    m = 1;
  } else {
    m += mult;
    total_ += mult;
  }
}

void MultiClauseSet::remove(const Clause& c, std::uint64_t mult) {
  auto it = clauses_.find(c);
  if (it == clauses_.end()) return;
  std::uint64_t k = std::min(mult, it->second);
  it->second -= k;
  total_ -= k;
  if (it->second == 0) clauses_.erase(it);
}

std::uint64_t MultiClauseSet::multiplicity(const Clause& c) const {
  auto it = clauses_.find(c);
  return it == clauses_.end() ? 0 : it->second;
}

MultiClauseSet MultiClauseSet::as_set() const {
  MultiClauseSet r(table_, true);
  for (const auto& [c, m] : clauses_) r.add(c);
  return r;
}

MultiClauseSet MultiClauseSet::as_multi() const {
  MultiClauseSet r = *this;
  r.set_view_ = false;
  return r;
}

VarSet MultiClauseSet::vars() const {
  VarSet s;
  for (const auto& [c, m] : clauses_)
    for (const auto& x : c) s.insert(x.var);
  return s;
}

bool MultiClauseSet::has_empty_clause() const { return clauses_.count(Clause{}) != 0; }

std::vector<Clause> MultiClauseSet::expanded() const {
  std::vector<Clause> out;
  out.reserve(total_);
  for (const auto& [c, m] : clauses_)
    for (std::uint64_t i = 0; i < m; ++i) out.push_back(c);
  return out;
}

MultiClauseSet apply(const PartialAssignment& phi, const MultiClauseSet& f) {
  MultiClauseSet r = f.empty_like();
  for (const auto& [c, m] : f.clauses()) {
    if (phi.satisfies(c)) continue;
    std::vector<Literal> keep;
    for (const auto& x : c)
      if (!phi.assigns(x.var)) keep.push_back(x);
    r.add(Clause(std::move(keep)), m);
  }
  return r;
}

MultiClauseSet cross_out(const VarSet& vs, const MultiClauseSet& f) {
  MultiClauseSet r = f.empty_like();
  for (const auto& [c, m] : f.clauses()) {
    std::vector<Literal> keep;
    for (const auto& x : c)
      if (!vs.count(x.var)) keep.push_back(x);
    r.add(Clause(std::move(keep)), m);
  }
  return r;
}

MultiClauseSet touched(const MultiClauseSet& f, const VarSet& vs) {
  MultiClauseSet r = f.empty_like();
  for (const auto& [c, m] : f.clauses())
    if (std::any_of(c.begin(), c.end(), [&](const Literal& x) { return vs.count(x.var) != 0; }))
      r.add(c, m);
  return r;
}

MultiClauseSet restrict_to(const MultiClauseSet& f, const VarSet& vs) {
  VarSet others;
  for (Var v : f.vars())
    if (!vs.count(v)) others.insert(v);
  return cross_out(others, touched(f, vs));
}

std::uint64_t literal_count(const MultiClauseSet& f, Literal x) {
  std::uint64_t n = 0;
  for (const auto& [c, m] : f.clauses())
    if (c.contains(x)) n += m;
  return n;
}

std::uint64_t variable_count(const MultiClauseSet& f, Var v) {
  std::uint64_t n = 0;
  for (const auto& [c, m] : f.clauses())
    if (c.has_var(v)) n += m;
  return n;
}

std::uint64_t reduced_deficiency_rd(const MultiClauseSet& f) {
  std::uint64_t rd = 0;
  for (Var v : f.vars()) rd += f.domain_size(v) - 1;
  return rd;
}

std::int64_t deficiency(const MultiClauseSet& f) {
  return static_cast<std::int64_t>(f.c()) - static_cast<std::int64_t>(reduced_deficiency_rd(f));
}

Measures measures(const MultiClauseSet& f) {
  Measures r;
  for (const auto& [c, m] : f.clauses())
    for (const auto& x : c) {
      r.literal_counts[x] += m;
      r.variable_counts[x.var] += m;
      r.ell += m;
    }
  r.n = r.variable_counts.size();
  r.c = f.c();
  r.rd = reduced_deficiency_rd(f);
  r.delta = static_cast<std::int64_t>(r.c) - static_cast<std::int64_t>(r.rd);
  for (const auto& [v, cnt] : r.variable_counts)
    for (Value e = 0; e < f.domain_size(v); ++e) {
      auto it = r.literal_counts.find(Literal{v, e});
      r.s_counts[Literal{v, e}] = cnt - (it == r.literal_counts.end() ? 0 : it->second);
    }
  return r;
}

std::set<Value> occurring_values(const MultiClauseSet& f, Var v) {
  std::set<Value> s;
  for (const auto& [c, m] : f.clauses())
    if (auto e = c.value_of(v)) s.insert(*e);
  return s;
}

bool is_pure(const MultiClauseSet& f, Var v) {
  return occurring_values(f, v).size() < f.domain_size(v);
}

RenameResult rename(const MultiClauseSet& f, Var v, Var w, const std::vector<Value>& h,
                    std::optional<std::uint32_t> w_domain) {
  std::uint32_t dv = f.domain_size(v);
  if (h.size() != dv) bad("value map must cover the whole domain of the renamed variable");
  if (v != w && f.vars().count(w)) bad("target variable already occurs in the clause-set");
  VariableTable t = f.table();
  std::uint32_t dw;
  if (w_domain) {
    dw = *w_domain;
    t.declare(w, dw);
  } else if (v != w && t.contains(w)) {
    dw = t.domain_size(w);
  } else {
    dw = dv;
    t.declare(w, dw);
  }
  for (Value e : h)
    if (e >= dw) bad("value map leaves the target domain");
  RenameResult r{MultiClauseSet(t, f.set_view()), true};
  std::map<Value, Value> seen;
  for (Value e : occurring_values(f, v)) {
    for (const auto& [a, b] : seen)
      if (b == h[e] && a != e) r.injective = false;
    seen[e] = h[e];
  }
  for (const auto& [c, m] : f.clauses()) {
    std::vector<Literal> l;
    for (const auto& x : c) l.push_back(x.var == v ? Literal{w, h[x.value]} : x);
    r.result.add(Clause(std::move(l)), m);
  }
  return r;
}

MultiClauseSet domain_uniformisation(const MultiClauseSet& f) {
  std::uint32_t d = 1;
  auto vs = f.vars();
  for (Var v : vs) d = std::max(d, f.domain_size(v));
  VariableTable t = f.table();
  for (Var v : vs) t.declare(v, d);
  MultiClauseSet r(t, f.set_view());
  for (const auto& [c, m] : f.clauses()) r.add(c, m);
  for (Var v : vs)
    for (Value e = f.domain_size(v); e < d; ++e) r.add(Clause{Literal{v, e}});
  return r;
}

PartialAssignment clause_to_assignment(const Clause& c) {
  PartialAssignment p;
  for (const auto& x : c) p.set(x.var, x.value);
  return p;
}

Clause assignment_to_clause(const PartialAssignment& phi) {
  std::vector<Literal> l;
  for (const auto& [v, e] : phi.bindings()) l.push_back(Literal{v, e});
  return Clause(std::move(l));
}

BigInt falsifying_count(const Clause& c, const VarSet& vs, const VariableTable& t) {
  for (const auto& x : c)
    if (!vs.count(x.var)) bad("clause variable outside the given variable set");
  BigInt r = 1;
  for (Var v : vs)
    if (!c.has_var(v)) r *= t.domain_size(v);
  return r;
}

}  // namespace gcls
