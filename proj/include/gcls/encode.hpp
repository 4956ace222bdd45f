// Instance generators: hypergraph colourings, homomorphisms, van der Waerden.
#pragma once

#include <cstdint>
#include <vector>

#include "gcls/core.hpp"

namespace gcls {

// Vertices are 1..num_vertices; they become the variables of the same id.
struct Hypergraph {
  std::uint32_t num_vertices = 0;
  std::vector<std::vector<std::uint32_t>> edges;
};

// Weak colourings with k colours (values 0..k-1).
MultiClauseSet hypergraph_coloring(const Hypergraph& g, std::uint32_t k);
MultiClauseSet strong_coloring(const Hypergraph& g, std::uint32_t k);

// lists[v-1] holds the allowed images of vertex v; value i of v means lists[v-1][i].
MultiClauseSet list_hom(const Hypergraph& g1, const Hypergraph& g2,
                        const std::vector<std::vector<std::uint32_t>>& lists);

// Elements are 0..size-1; relation i of A pairs with relation i of B.
struct RelationalStructure {
  std::uint32_t size = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> relations;
};

// Direct: variable a+1 takes value b for f(a) = b.
// Indirect: one variable per tuple of A (ids from 1, relation-major order),
// whose value indexes the tuples of the matching relation of B.
MultiClauseSet relational_hom(const RelationalStructure& a, const RelationalStructure& b,
                              bool injective, bool indirect);

// Values 0..m-1 stand for the colours 1..m.
MultiClauseSet vdw_instance(std::uint32_t m, std::uint32_t k, std::uint32_t n);
std::uint64_t count_arithmetic_progressions(std::uint32_t k, std::uint32_t n);

}  // namespace gcls
