// Minimal unsatisfiability of deficiency one: tree images, recognition,
// saturation and degree measures.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcls/core.hpp"

namespace gcls {

// A leaf has no children. An inner node is labelled by `var` and its
// i-th child hangs off the edge labelled with value i.
struct DeficiencyOneTree {
  Var var = 0;
  std::vector<DeficiencyOneTree> children;

  bool is_leaf() const { return children.empty(); }
  bool operator==(const DeficiencyOneTree&) const = default;
};

// Throws std::invalid_argument if a variable labels two inner nodes.
void validate_tree(const DeficiencyOneTree& t);
MultiClauseSet tree_to_clause_set(const DeficiencyOneTree& t);
std::size_t tree_size(const DeficiencyOneTree& t);

// "*" for a leaf, "(var (val subtree) ...)" otherwise.
std::string serialize_tree(const DeficiencyOneTree& t);
DeficiencyOneTree parse_tree(const std::string& text);

enum class Mu1Verdict { NotMu1, Mu1 };

struct Mu1Recognition {
  Mu1Verdict verdict = Mu1Verdict::NotMu1;
  std::vector<Var> eliminated;  // singular DP order
  std::string reason;           // why the verdict is negative
};

Mu1Recognition recognize_mu1(const MultiClauseSet& f);

enum class Mu1Class { Saturated, Marginal, Intermediate };
std::string mu1_class_name(Mu1Class c);

struct Mu1Classification {
  Mu1Class cls = Mu1Class::Intermediate;
  std::optional<DeficiencyOneTree> tree;  // set when saturated
  std::string diagnostic;
};

// Throws std::invalid_argument unless recognize_mu1 accepts F.
Mu1Classification classify_mu1(const MultiClauseSet& f);

// Rebuilds a tree whose image is F, if one exists.
std::optional<DeficiencyOneTree> reconstruct_tree(const MultiClauseSet& f);

// Throws std::invalid_argument unless F is minimally unsatisfiable.
MultiClauseSet saturate(const MultiClauseSet& f);
bool is_saturated_mu(const MultiClauseSet& f);
// phi*F irredundant for every phi over var(F) with n(phi) <= k.
bool stability_at_least(const MultiClauseSet& f, std::size_t k);

struct DegreeMeasures {
  std::uint64_t mmvd = 0;
  std::uint64_t mvd = 0;
};
DegreeMeasures degree_measures(const MultiClauseSet& f);

}  // namespace gcls
