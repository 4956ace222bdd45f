#include "gcls/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace gcls {

using Rational = boost::multiprecision::cpp_rational;

ConflictMatrix conflict_matrix(const MultiClauseSet& f) {
  auto cs = f.expanded();
  ConflictMatrix m(cs.size(), std::vector<std::int64_t>(cs.size(), 0));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      m[i][j] = m[j][i] = static_cast<std::int64_t>(cs[i].clash_count(cs[j]));
  return m;
}

namespace {
std::size_t find_root(std::vector<std::size_t>& p, std::size_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}
}  // namespace

HittingInfo classify_hitting(const MultiClauseSet& f) {
  auto m = conflict_matrix(f);
  const std::size_t n = m.size();
  HittingInfo r;
  r.hitting = true;
  bool first = true;
  bool regular = true;
  std::uint64_t common = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto x = static_cast<std::uint64_t>(m[i][j]);
      if (x == 0) r.hitting = false;
      if (first) {
        common = x;
        r.hitting_degree = x;
        first = false;
      } else {
        regular = regular && x == common;
        r.hitting_degree = std::min(r.hitting_degree, x);
      }
    }
  if (n >= 2 && regular && common >= 1) r.regular = common;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] == 0) parent[find_root(parent, i)] = find_root(parent, j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find_root(parent, i)].push_back(i);
  r.multihitting = true;
  for (std::size_t i = 0; i < n && r.multihitting; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool same = find_root(parent, i) == find_root(parent, j);
      if (same != (m[i][j] == 0)) {
        r.multihitting = false;
        break;
      }
    }
  if (r.multihitting) {
    for (auto& [root, members] : groups) r.blocks.push_back(members);
    std::sort(r.blocks.begin(), r.blocks.end());
  }
  return r;
}

bool hitting_sat(const MultiClauseSet& f) {
  if (!classify_hitting(f).hitting) throw std::invalid_argument("clause-set is not hitting");
  VarSet vs = f.vars();
  BigInt total = 0, space = 1;
  for (const auto& [c, k] : f.clauses()) total += falsifying_count(c, vs, f.table()) * k;
  for (Var v : vs) space *= f.domain_size(v);
  return total != space;
}

Inertia hermitian_rank(const ConflictMatrix& input) {
  const std::size_t n = input.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (input[i][j] != input[j][i]) throw std::invalid_argument("matrix must be symmetric");
      a[i][j] = input[i][j];
    }
  }
  std::vector<char> active(n, 1);
  Inertia r;
  while (true) {
    // 1x1 pivot: largest |diagonal|, smallest index on ties.
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && a[i][i] != 0 && (!p || abs(a[i][i]) > abs(a[*p][*p]))) p = i;
    if (p) {
      std::size_t i = *p;
      (a[i][i] > 0 ? r.n_plus : r.n_minus)++;
      active[i] = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (!active[k] || a[k][i] == 0) continue;
        Rational f = a[k][i] / a[i][i];
        for (std::size_t l = 0; l < n; ++l)
          if (active[l]) a[k][l] -= f * a[i][l];
      }
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> q;
    for (std::size_t i = 0; i < n && !q; ++i)
      for (std::size_t j = i + 1; j < n && active[i]; ++j)
        if (active[j] && a[i][j] != 0) {
          q = std::make_pair(i, j);
          break;
        }
    if (!q) break;
    auto [i, j] = *q;
    Rational b = a[i][j];
    ++r.n_plus;
    ++r.n_minus;
    active[i] = active[j] = 0;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k)
      if (active[k]) rest.push_back(k);
    std::vector<std::vector<Rational>> upd(rest.size(), std::vector<Rational>(rest.size()));
    for (std::size_t x = 0; x < rest.size(); ++x)
      for (std::size_t y = 0; y < rest.size(); ++y) {
        std::size_t k = rest[x], l = rest[y];
        upd[x][y] = a[k][l] - (a[k][i] * a[j][l] + a[k][j] * a[i][l]) / b;
      }
    for (std::size_t x = 0; x < rest.size(); ++x)
      for (std::size_t y = 0; y < rest.size(); ++y) a[rest[x]][rest[y]] = upd[x][y];
  }
  r.h = std::max(r.n_plus, r.n_minus);
  r.hdef = n - r.h;
  return r;
}

bool deficiency_bound_check(const MultiClauseSet& f) {
  auto in = hermitian_rank(conflict_matrix(f));
  return deficiency(f) <= static_cast<std::int64_t>(in.hdef);
}

}  // namespace gcls
