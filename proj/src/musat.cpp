#include "gcls/musat.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gcls/reductions.hpp"
#include "gcls/satdec.hpp"
#include "gcls/structure.hpp"

namespace gcls {

namespace {

void collect_vars(const DeficiencyOneTree& t, std::set<Var>& seen) {
  if (t.is_leaf()) return;
  if (!seen.insert(t.var).second)
    throw std::invalid_argument("variable " + std::to_string(t.var) + " labels two inner nodes");
  for (const auto& c : t.children) collect_vars(c, seen);
}

void leaf_clauses(const DeficiencyOneTree& t, std::vector<Literal>& path, MultiClauseSet& out) {
  if (t.is_leaf()) {
    out.add(Clause(path));
    return;
  }
  out.declare(t.var, static_cast<std::uint32_t>(t.children.size()));
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(Literal{t.var, static_cast<Value>(i)});
    leaf_clauses(t.children[i], path, out);
    path.pop_back();
  }
}

class TreeParser {
 public:
  explicit TreeParser(const std::string& s) : s_(s) {}

  DeficiencyOneTree parse() {
    DeficiencyOneTree t = node();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("tree parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::uint64_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(s_.substr(start, pos_ - start));
  }
  DeficiencyOneTree node() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      return {};
    }
    expect('(');
    DeficiencyOneTree t;
    t.var = static_cast<Var>(number());
    std::vector<std::pair<std::uint64_t, DeficiencyOneTree>> kids;
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == ')') break;
      expect('(');
      std::uint64_t val = number();
      DeficiencyOneTree sub = node();
      expect(')');
      kids.emplace_back(val, std::move(sub));
    }
    expect(')');
    if (kids.empty()) fail("inner node without children");
    std::sort(kids.begin(), kids.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (kids[i].first != i) fail("edge labels must be exactly 0..k-1");
      t.children.push_back(std::move(kids[i].second));
    }
    return t;
  }
};

std::optional<DeficiencyOneTree> rebuild(const std::vector<Clause>& cls, const VariableTable& table) {
  if (cls.empty()) return std::nullopt;
  if (cls.size() == 1 && cls[0].empty()) return DeficiencyOneTree{};
  VarSet common = cls[0].vars();
  for (const auto& c : cls) {
    if (c.empty()) return std::nullopt;
    VarSet keep;
    for (Var v : common)
      if (c.has_var(v)) keep.insert(v);
    common = std::move(keep);
  }
  std::optional<Var> root;
  for (Var v : common)
    if (table.domain_size(v) == 1) {
      root = v;
      break;
    }
  if (!root) {
    if (common.size() != 1) return std::nullopt;
    root = *common.begin();
  }
  std::uint32_t d = table.domain_size(*root);
  std::vector<std::vector<Clause>> classes(d);
  for (const auto& c : cls) classes[*c.value_of(*root)].push_back(c.without_var(*root));
  DeficiencyOneTree t;
  t.var = *root;
  for (auto& cl : classes) {
    auto sub = rebuild(cl, table);
    if (!sub) return std::nullopt;
    t.children.push_back(std::move(*sub));
  }
  return t;
}

MultiClauseSet with_clauses(const MultiClauseSet& like, const std::vector<Clause>& cls) {
  MultiClauseSet out = like.empty_like();
  for (const auto& c : cls) out.add(c);
  return out;
}

bool unsat(const MultiClauseSet& f) { return !brute_force_sat(f).has_value(); }

}  // namespace

void validate_tree(const DeficiencyOneTree& t) {
  std::set<Var> seen;
  collect_vars(t, seen);
}

MultiClauseSet tree_to_clause_set(const DeficiencyOneTree& t) {
  validate_tree(t);
  MultiClauseSet out;
  std::vector<Literal> path;
  leaf_clauses(t, path, out);
  return out;
}

std::size_t tree_size(const DeficiencyOneTree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += tree_size(c);
  return n;
}

std::string serialize_tree(const DeficiencyOneTree& t) {
  if (t.is_leaf()) return "*";
  std::string s = "(" + std::to_string(t.var);
  for (std::size_t i = 0; i < t.children.size(); ++i)
    s += " (" + std::to_string(i) + " " + serialize_tree(t.children[i]) + ")";
  return s + ")";
}

DeficiencyOneTree parse_tree(const std::string& text) {
  DeficiencyOneTree t = TreeParser(text).parse();
  validate_tree(t);
  return t;
}

Mu1Recognition recognize_mu1(const MultiClauseSet& f) {
  Mu1Recognition r;
  for (const auto& [c, m] : f.clauses())
    if (m > 1) {
      r.reason = "repeated clause";
      return r;
    }
  MultiClauseSet cur = f.as_set();
  while (true) {
    if (cur.has_empty_clause()) {
      if (cur.c() == 1) {
        r.verdict = Mu1Verdict::Mu1;
        return r;
      }
      r.reason = "empty clause beside other clauses";
      return r;
    }
    if (cur.is_top()) {
      r.reason = "no clauses left";
      return r;
    }
    std::optional<Var> pick;
    for (Var v : cur.vars())
      if (is_singular(cur, v)) {
        pick = v;
        break;
      }
    if (!pick) {
      r.reason = "no singular variable";
      return r;
    }
    auto step = singular_dp(cur, *pick);
    if (step.degenerate) {
      r.reason = "degenerate singular DP on variable " + std::to_string(*pick);
      return r;
    }
    r.eliminated.push_back(*pick);
    cur = step.result;
  }
}

std::string mu1_class_name(Mu1Class c) {
  switch (c) {
    case Mu1Class::Saturated: return "saturated";
    case Mu1Class::Marginal: return "marginal";
    case Mu1Class::Intermediate: return "intermediate";
  }
  return "intermediate";
}

std::optional<DeficiencyOneTree> reconstruct_tree(const MultiClauseSet& f) {
  auto t = rebuild(f.expanded(), f.table());
  if (!t) return std::nullopt;
  try {
    validate_tree(*t);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  MultiClauseSet img = tree_to_clause_set(*t);
  if (!img.same_clauses(f.as_multi())) return std::nullopt;
  for (const auto& [v, d] : img.table().entries())
    if (f.domain_size(v) != d) return std::nullopt;
  return t;
}

Mu1Classification classify_mu1(const MultiClauseSet& f) {
  if (recognize_mu1(f).verdict != Mu1Verdict::Mu1)
    throw std::invalid_argument("clause-set is not minimally unsatisfiable of deficiency 1");
  Mu1Classification r;
  auto info = classify_hitting(f);
  if (f.c() == 1 || info.regular == std::uint64_t{1}) {
    if (auto t = reconstruct_tree(f)) {
      r.cls = Mu1Class::Saturated;
      r.tree = std::move(t);
      return r;
    }
    r.diagnostic = "1-regular hitting but no tree reconstruction";
  }
  bool marginal = true;
  for (Var v : f.vars())
    for (Value e = 0; e < f.domain_size(v) && marginal; ++e)
      if (literal_count(f, Literal{v, e}) > 1) marginal = false;
  r.cls = marginal ? Mu1Class::Marginal : Mu1Class::Intermediate;
  return r;
}

MultiClauseSet saturate(const MultiClauseSet& f) {
  if (!is_minimally_unsatisfiable(f))
    throw std::invalid_argument("saturation needs a minimally unsatisfiable clause-set");
  std::vector<Clause> cls = f.expanded();
  const VarSet vs = f.vars();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Var v : vs) {
        if (f.domain_size(v) < 2 || cls[i].has_var(v)) continue;
        for (Value e = 0; e < f.domain_size(v); ++e) {
          std::vector<Clause> trial = cls;
          trial[i] = cls[i].with(Literal{v, e});
          if (unsat(with_clauses(f, trial))) {
            cls = std::move(trial);
            changed = true;
            break;
          }
        }
      }
  }
  return with_clauses(f, cls);
}

bool is_saturated_mu(const MultiClauseSet& f) {
  if (!is_minimally_unsatisfiable(f)) return false;
  const std::vector<Clause> cls = f.expanded();
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (Var v : f.vars()) {
      if (f.domain_size(v) < 2 || cls[i].has_var(v)) continue;
      for (Value e = 0; e < f.domain_size(v); ++e) {
        std::vector<Clause> trial = cls;
        trial[i] = cls[i].with(Literal{v, e});
        if (unsat(with_clauses(f, trial))) return false;
      }
    }
  return true;
}

bool stability_at_least(const MultiClauseSet& f, std::size_t k) {
  const VarSet vs = f.vars();
  const std::vector<Var> vars(vs.begin(), vs.end());
  PartialAssignment phi;
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t from, std::size_t left) {
    if (!is_irredundant(apply(phi, f))) return false;
    if (left == 0) return true;
    for (std::size_t i = from; i < vars.size(); ++i)
      for (Value e = 0; e < f.domain_size(vars[i]); ++e) {
        phi.set(vars[i], e);
        bool ok = go(i + 1, left - 1);
        phi.erase(vars[i]);
        if (!ok) return false;
      }
    return true;
  };
  return go(0, k);
}

DegreeMeasures degree_measures(const MultiClauseSet& f) {
  const VarSet vs = f.vars();
  if (vs.empty()) throw std::invalid_argument("degree measures need at least one variable");
  DegreeMeasures d{UINT64_MAX, UINT64_MAX};
  for (Var v : vs) {
    std::uint64_t mx = 0;
    for (Value e = 0; e < f.domain_size(v); ++e) mx = std::max(mx, literal_count(f, Literal{v, e}));
    d.mmvd = std::min(d.mmvd, mx);
    d.mvd = std::min(d.mvd, variable_count(f, v));
  }
  return d;
}

}  // namespace gcls
