#include "gcls/encode.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace gcls {

namespace {

using Tuple = std::vector<std::uint32_t>;

void check_vertices(const Hypergraph& g) {
  for (const auto& e : g.edges)
    for (auto v : e)
      if (v == 0 || v > g.num_vertices)
        throw std::invalid_argument("hyperedge vertex " + std::to_string(v) + " out of range");
}

std::vector<std::uint32_t> as_set(std::vector<std::uint32_t> e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

MultiClauseSet declared(std::uint32_t n, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("at least one colour is required");
  MultiClauseSet f;
  for (Var v = 1; v <= n; ++v) f.declare(v, k);
  return f;
}

// Builds a clause from (var, value) pairs; nullopt if two of them clash.
std::optional<Clause> clause_of(const std::vector<Literal>& lits) {
  std::map<Var, Value> m;
  for (const auto& x : lits) {
    auto [it, fresh] = m.emplace(x.var, x.value);
    if (!fresh && it->second != x.value) return std::nullopt;
  }
  std::vector<Literal> out;
  for (const auto& [v, e] : m) out.push_back(Literal{v, e});
  return Clause(out);
}

std::uint32_t check_structures(const RelationalStructure& a, const RelationalStructure& b,
                               std::vector<std::size_t>& arity) {
  if (a.relations.size() != b.relations.size())
    throw std::invalid_argument("structures have different numbers of relations");
  arity.assign(a.relations.size(), SIZE_MAX);
  auto check = [&](const RelationalStructure& s) {
    for (std::size_t i = 0; i < s.relations.size(); ++i)
      for (const auto& t : s.relations[i]) {
        if (arity[i] == SIZE_MAX) arity[i] = t.size();
        if (t.size() != arity[i]) throw std::invalid_argument("arity mismatch in relation " + std::to_string(i));
        for (auto x : t)
          if (x >= s.size) throw std::invalid_argument("tuple element out of range");
      }
  };
  check(a);
  check(b);
  return b.size;
}

}  // namespace

MultiClauseSet hypergraph_coloring(const Hypergraph& g, std::uint32_t k) {
  check_vertices(g);
  MultiClauseSet f = declared(g.num_vertices, k);
  for (const auto& e0 : g.edges) {
    auto e = as_set(e0);
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    for (Value c = 0; c < k; ++c) {
      std::vector<Literal> lits;
      for (auto v : e) lits.push_back(Literal{v, c});
      f.add(Clause(lits));
    }
  }
  return f;
}

MultiClauseSet strong_coloring(const Hypergraph& g, std::uint32_t k) {
  check_vertices(g);
  MultiClauseSet f = declared(g.num_vertices, k);
  for (const auto& e0 : g.edges) {
    auto e = as_set(e0);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        for (Value c = 0; c < k; ++c) f.add(Clause{Literal{e[i], c}, Literal{e[j], c}});
  }
  return f;
}

MultiClauseSet list_hom(const Hypergraph& g1, const Hypergraph& g2,
                        const std::vector<std::vector<std::uint32_t>>& lists) {
  check_vertices(g1);
  check_vertices(g2);
  if (lists.size() != g1.num_vertices) throw std::invalid_argument("one list per vertex is required");
  MultiClauseSet f;
  for (Var v = 1; v <= g1.num_vertices; ++v) {
    const auto& l = lists[v - 1];
    if (l.empty()) throw std::invalid_argument("empty list for vertex " + std::to_string(v));
    if (as_set(l).size() != l.size()) throw std::invalid_argument("repeated list entry");
    for (auto w : l)
      if (w == 0 || w > g2.num_vertices) throw std::invalid_argument("list entry out of range");
    f.declare(v, static_cast<std::uint32_t>(l.size()));
  }
  std::set<std::vector<std::uint32_t>> target;
  for (const auto& e : g2.edges) target.insert(as_set(e));
  for (const auto& e0 : g1.edges) {
    auto h = as_set(e0);
    std::vector<Value> idx(h.size(), 0);
    while (true) {
      std::vector<std::uint32_t> img;
      std::vector<Literal> lits;
      for (std::size_t i = 0; i < h.size(); ++i) {
        img.push_back(lists[h[i] - 1][idx[i]]);
        lits.push_back(Literal{h[i], idx[i]});
      }
      if (!target.count(as_set(img))) f.add(Clause(lits));
      std::size_t p = 0;
      while (p < h.size() && ++idx[p] == lists[h[p] - 1].size()) idx[p++] = 0;
      if (p == h.size()) break;
    }
  }
  return f;
}

MultiClauseSet relational_hom(const RelationalStructure& a, const RelationalStructure& b,
                              bool injective, bool indirect) {
  std::vector<std::size_t> arity;
  check_structures(a, b, arity);
  if (indirect && injective)
    throw std::invalid_argument("injectivity is only supported by the direct encoding");
  MultiClauseSet f;
  if (!indirect) {
    if (b.size == 0) {
      if (a.size > 0) f.add(Clause{});
      return f;
    }
    for (Var v = 1; v <= a.size; ++v) f.declare(v, b.size);
    for (std::size_t i = 0; i < a.relations.size(); ++i) {
      std::set<Tuple> allowed(b.relations[i].begin(), b.relations[i].end());
      const std::size_t m = arity[i] == SIZE_MAX ? 0 : arity[i];
      for (const auto& x : std::set<Tuple>(a.relations[i].begin(), a.relations[i].end())) {
        Tuple y(m, 0);
        while (true) {
          if (!allowed.count(y)) {
            std::vector<Literal> lits;
            for (std::size_t k = 0; k < m; ++k) lits.push_back(Literal{x[k] + 1, y[k]});
            if (auto c = clause_of(lits)) f.add(*c);
          }
          std::size_t p = 0;
          while (p < m && ++y[p] == b.size) y[p++] = 0;
          if (p == m) break;
        }
      }
    }
    if (injective)
      for (Var x = 1; x <= a.size; ++x)
        for (Var y = x + 1; y <= a.size; ++y)
          for (Value e = 0; e < b.size; ++e) f.add(Clause{Literal{x, e}, Literal{y, e}});
    return f;
  }

  struct Node {
    Var var;
    Tuple x;
    std::vector<Tuple> dom;
  };
  std::vector<Node> nodes;
  Var next = 1;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    std::set<Tuple> xs(a.relations[i].begin(), a.relations[i].end());
    std::set<Tuple> ys(b.relations[i].begin(), b.relations[i].end());
    std::vector<Tuple> dom(ys.begin(), ys.end());
    for (const auto& x : xs) {
      if (dom.empty()) {
        f.add(Clause{});
        continue;
      }
      f.declare(next, static_cast<std::uint32_t>(dom.size()));
      nodes.push_back({next++, x, dom});
    }
  }
  auto inconsistent = [](const Tuple& x, const Tuple& y, const Tuple& x2, const Tuple& y2) {
    for (std::size_t k = 0; k < x.size(); ++k)
      for (std::size_t k2 = 0; k2 < x2.size(); ++k2)
        if (x[k] == x2[k2] && y[k] != y2[k2]) return true;
    return false;
  };
  for (const auto& nd : nodes)
    for (Value e = 0; e < nd.dom.size(); ++e)
      if (inconsistent(nd.x, nd.dom[e], nd.x, nd.dom[e])) f.add(Clause{Literal{nd.var, e}});
  for (std::size_t p = 0; p < nodes.size(); ++p)
    for (std::size_t q = p + 1; q < nodes.size(); ++q)
      for (Value e = 0; e < nodes[p].dom.size(); ++e)
        for (Value e2 = 0; e2 < nodes[q].dom.size(); ++e2)
          if (inconsistent(nodes[p].x, nodes[p].dom[e], nodes[q].x, nodes[q].dom[e2]))
            f.add(Clause{Literal{nodes[p].var, e}, Literal{nodes[q].var, e2}});
  return f;
}

std::uint64_t count_arithmetic_progressions(std::uint32_t k, std::uint32_t n) {
  if (k == 0) throw std::invalid_argument("progression length must be positive");
  if (k == 1) return n;
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t d = 1; a + (k - 1) * d <= n; ++d) ++count;
  return count;
}

MultiClauseSet vdw_instance(std::uint32_t m, std::uint32_t k, std::uint32_t n) {
  if (k == 0) throw std::invalid_argument("progression length must be positive");
  MultiClauseSet f = declared(n, m);
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t d = 1; a + (k - 1) * d <= n; ++d) {
      for (Value c = 0; c < m; ++c) {
        std::vector<Literal> lits;
        for (std::uint64_t i = 0; i < k; ++i) lits.push_back(Literal{static_cast<Var>(a + i * d), c});
        f.add(Clause(lits));
      }
      if (k == 1) break;
    }
  return f;
}

}  // namespace gcls
