#include "gcls/translate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcls {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::DirectWeak: return "direct";
    case Scheme::DirectStrong: return "direct-strong";
    case Scheme::Nested: return "nested";
    case Scheme::NestedStrong: return "nested-strong";
    case Scheme::Reduced: return "reduced";
    case Scheme::Log: return "log";
    case Scheme::Generic: return "generic";
  }
  return "generic";
}

namespace {

Literal pos(Var x) { return Literal{x, 0}; }
Literal neg(Var x) { return Literal{x, 1}; }

std::vector<Value> identity_order(std::uint32_t k) {
  std::vector<Value> o(k);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

void check_order(const std::vector<Value>& order, std::uint32_t k) {
  auto s = order;
  std::sort(s.begin(), s.end());
  if (s != identity_order(k)) throw std::invalid_argument("value order is not a permutation");
}

// Lexicographically first total assignment of local vars 1..n satisfying all clauses.
std::optional<std::vector<Value>> first_model(std::uint32_t n, const std::vector<Clause>& cs) {
  if (n > 24) throw std::invalid_argument("gadget too large for exhaustive checks");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<Value> a(n + 1);
    for (std::uint32_t i = 1; i <= n; ++i) a[i] = (bits >> (n - i)) & 1U;
    bool ok = std::all_of(cs.begin(), cs.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](const Literal& x) { return a[x.var] != x.value; });
    });
    if (ok) return a;
  }
  return std::nullopt;
}

std::vector<Clause> all_clauses(const Gadget& g) {
  std::vector<Clause> cs = g.T;
  cs.insert(cs.end(), g.Tprime.begin(), g.Tprime.end());
  return cs;
}

std::vector<Literal> global_literals(const TranslationResult& t, Var v, const Clause& local) {
  std::vector<Literal> l;
  for (const auto& x : local) l.push_back(Literal{t.block_start.at(v) + x.var - 1, x.value});
  return l;
}

TranslationResult build(const MultiClauseSet& f, const std::map<Var, Gadget>& gadgets,
                        Scheme scheme) {
  TranslationResult t;
  t.scheme = scheme;
  t.source = f.table();
  VariableTable bt;
  Var next = 1;
  for (Var v : f.vars()) {
    auto it = gadgets.find(v);
    if (it == gadgets.end()) throw std::invalid_argument("missing gadget for a variable");
    if (it->second.T.size() != f.domain_size(v))
      throw std::invalid_argument("gadget T(v) size differs from the domain size");
    t.gadgets[v] = it->second;
    t.block_start[v] = next;
    for (std::uint32_t j = 1; j <= it->second.nvars; ++j) {
      bt.declare(next, 2);
      t.var_map[next] = BoolOrigin{v, t.direct() ? j - 1 : j};
      ++next;
    }
  }
  t.cnf = MultiClauseSet(bt, f.set_view());
  for (const auto& [c, m] : f.clauses()) t.cnf.add(translate_clause(t, c), m);
  for (const auto& [v, g] : t.gadgets)
    for (const auto& c : g.Tprime) t.cnf.add(Clause(global_literals(t, v, c)));
  return t;
}

}  // namespace

Clause translate_clause(const TranslationResult& t, const Clause& c) {
  std::vector<Literal> l;
  for (const auto& x : c) {
    auto part = global_literals(t, x.var, t.gadgets.at(x.var).T[x.value]);
    l.insert(l.end(), part.begin(), part.end());
  }
  return Clause(std::move(l));
}

void validate_gadget(const Gadget& g, std::uint32_t k) {
  if (g.T.size() != k) throw std::invalid_argument("T(v) must have one clause per value");
  for (const auto& c : all_clauses(g))
    for (const auto& x : c)
      if (x.var < 1 || x.var > g.nvars || x.value > 1)
        throw std::invalid_argument("gadget literal outside its boolean variables");
  for (std::size_t i = 0; i < g.T.size(); ++i)
    for (std::size_t j = i + 1; j < g.T.size(); ++j)
      if (g.T[i] == g.T[j]) throw std::invalid_argument("T(v) clauses must be distinct");
  if (first_model(g.nvars, all_clauses(g)))
    throw std::invalid_argument("T(v) together with T'(v) must be unsatisfiable");
  for (std::size_t i = 0; i < g.T.size(); ++i) {
    std::vector<Clause> rest;
    for (std::size_t j = 0; j < g.T.size(); ++j)
      if (j != i) rest.push_back(g.T[j]);
    rest.insert(rest.end(), g.Tprime.begin(), g.Tprime.end());
    if (!first_model(g.nvars, rest))
      throw std::invalid_argument("every clause of T(v) must be necessary");
  }
}

Gadget direct_gadget(std::uint32_t k, bool strong) {
  Gadget g;
  g.nvars = k;
  std::vector<Literal> alo;
  for (Var i = 1; i <= k; ++i) {
    g.T.push_back(Clause{pos(i)});
    alo.push_back(neg(i));
  }
  g.Tprime.push_back(Clause(alo));
  if (strong)
    for (Var i = 1; i <= k; ++i)
      for (Var j = i + 1; j <= k; ++j) g.Tprime.push_back(Clause{pos(i), pos(j)});
  return g;
}

Gadget nested_gadget(std::uint32_t k, const std::vector<Value>& order, bool strong) {
  check_order(order, k);
  Gadget g;
  g.nvars = k - 1;
  g.T.resize(k);
  for (std::uint32_t i = 1; i <= k; ++i) {
    std::vector<Literal> l;
    for (Var j = 1; j < i && j < k; ++j) l.push_back(neg(j));
    if (i < k) l.push_back(pos(i));
    g.T[order[i - 1]] = Clause(l);
  }
  if (strong)
    for (Var i = 1; i < k; ++i)
      for (Var j = i + 1; j < k; ++j) g.Tprime.push_back(Clause{pos(i), pos(j)});
  return g;
}

Gadget reduced_gadget(std::uint32_t k, const std::vector<Value>& order, bool strong) {
  check_order(order, k);
  Gadget g;
  g.nvars = k - 1;
  g.T.resize(k);
  std::vector<Literal> all_neg;
  for (Var i = 1; i < k; ++i) {
    g.T[order[i - 1]] = Clause{pos(i)};
    all_neg.push_back(neg(i));
  }
  g.T[order[k - 1]] = Clause(all_neg);
  if (strong)
    for (Var i = 1; i < k; ++i)
      for (Var j = i + 1; j < k; ++j) g.Tprime.push_back(Clause{pos(i), pos(j)});
  return g;
}

Gadget log_gadget(std::uint32_t k, const std::vector<Value>& order) {
  check_order(order, k);
  std::uint32_t p = 0;
  while ((std::uint64_t{1} << p) < k) ++p;
  Gadget g;
  g.nvars = p;
  g.T.resize(k);
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << p); ++j) {
    std::vector<Literal> l;
    for (Var b = 1; b <= p; ++b) l.push_back(((j >> (p - b)) & 1U) ? neg(b) : pos(b));
    if (j < k)
      g.T[order[j]] = Clause(l);
    else
      g.Tprime.push_back(Clause(l));
  }
  return g;
}

TranslationResult generic(const MultiClauseSet& f, const std::map<Var, Gadget>& gadgets) {
  for (Var v : f.vars()) {
    auto it = gadgets.find(v);
    if (it == gadgets.end()) throw std::invalid_argument("missing gadget for a variable");
    validate_gadget(it->second, f.domain_size(v));
  }
  return build(f, gadgets, Scheme::Generic);
}

namespace {
template <typename Make>
TranslationResult per_var(const MultiClauseSet& f, Scheme s, Make make) {
  std::map<Var, Gadget> gs;
  for (Var v : f.vars()) gs[v] = make(v, f.domain_size(v));
  return build(f, gs, s);
}
}  // namespace

TranslationResult direct_weak(const MultiClauseSet& f) {
  return per_var(f, Scheme::DirectWeak, [](Var, std::uint32_t k) { return direct_gadget(k, false); });
}

TranslationResult direct_strong(const MultiClauseSet& f) {
  return per_var(f, Scheme::DirectStrong, [](Var, std::uint32_t k) { return direct_gadget(k, true); });
}

TranslationResult nested(const MultiClauseSet& f, const std::map<Var, std::vector<Value>>& orders,
                         bool strong) {
  return per_var(f, strong ? Scheme::NestedStrong : Scheme::Nested, [&](Var v, std::uint32_t k) {
    auto it = orders.find(v);
    return nested_gadget(k, it == orders.end() ? identity_order(k) : it->second, strong);
  });
}

TranslationResult reduced(const MultiClauseSet& f, bool strong) {
  return per_var(f, Scheme::Reduced,
                 [&](Var, std::uint32_t k) { return reduced_gadget(k, identity_order(k), strong); });
}

TranslationResult logarithmic(const MultiClauseSet& f) {
  return per_var(f, Scheme::Log,
                 [](Var, std::uint32_t k) { return log_gadget(k, identity_order(k)); });
}

std::vector<Value> order_by_occurrences(const MultiClauseSet& f, Var v) {
  std::uint32_t k = f.domain_size(v);
  auto o = identity_order(k);
  std::vector<std::uint64_t> cnt(k);
  for (Value e = 0; e < k; ++e) cnt[e] = literal_count(f, Literal{v, e});
  std::stable_sort(o.begin(), o.end(), [&](Value a, Value b) { return cnt[a] > cnt[b]; });
  return o;
}

TranslationResult translate(const MultiClauseSet& f, Scheme s, bool by_occurrences) {
  auto order = [&](Var v, std::uint32_t k) {
    return by_occurrences ? order_by_occurrences(f, v) : identity_order(k);
  };
  switch (s) {
    case Scheme::DirectWeak: return direct_weak(f);
    case Scheme::DirectStrong: return direct_strong(f);
    case Scheme::Nested:
    case Scheme::NestedStrong: {
      bool strong = s == Scheme::NestedStrong;
      return per_var(f, s, [&](Var v, std::uint32_t k) { return nested_gadget(k, order(v, k), strong); });
    }
    case Scheme::Reduced:
      return per_var(f, s, [&](Var v, std::uint32_t k) { return reduced_gadget(k, order(v, k), false); });
    case Scheme::Log:
      return per_var(f, s, [&](Var v, std::uint32_t k) { return log_gadget(k, order(v, k)); });
    case Scheme::Generic: break;
  }
  throw std::invalid_argument("generic translation needs explicit gadgets");
}

PartialAssignment push_assignment(const TranslationResult& t, const PartialAssignment& phi) {
  PartialAssignment out;
  for (const auto& [v, e] : phi.bindings()) {
    auto it = t.gadgets.find(v);
    if (it == t.gadgets.end()) continue;
    const Gadget& g = it->second;
    if (e >= g.T.size()) throw std::invalid_argument("value outside the domain");
    std::vector<Clause> rest;
    for (std::size_t j = 0; j < g.T.size(); ++j)
      if (j != e) rest.push_back(g.T[j]);
    rest.insert(rest.end(), g.Tprime.begin(), g.Tprime.end());
    auto model = first_model(g.nvars, rest);
    if (!model) throw std::logic_error("gadget clause is not necessary");
    for (std::uint32_t j = 1; j <= g.nvars; ++j) out.set(t.block_start.at(v) + j - 1, (*model)[j]);
  }
  return out;
}

PartialAssignment lift_assignment(const TranslationResult& t, const PartialAssignment& psi) {
  PartialAssignment out;
  for (const auto& [v, g] : t.gadgets) {
    Var b = t.block_start.at(v);
    bool touched = false;
    std::vector<Value> local(g.nvars + 1, 0);
    std::vector<char> known(g.nvars + 1, 0);
    for (std::uint32_t j = 1; j <= g.nvars; ++j)
      if (auto x = psi.get(b + j - 1)) {
        touched = true;
        known[j] = 1;
        local[j] = *x;
      }
    if (!touched) continue;
    std::optional<Value> pick;
    for (Value e = 0; e < g.T.size() && !pick; ++e) {
      const Clause& c = g.T[e];
      bool falsified = std::all_of(c.begin(), c.end(), [&](const Literal& x) {
        return (!t.direct() || known[x.var]) && local[x.var] == x.value;
      });
      if (falsified) pick = e;
    }
    if (!pick) throw std::invalid_argument("boolean assignment is not admissible");
    out.set(v, *pick);
  }
  return out;
}

}  // namespace gcls
