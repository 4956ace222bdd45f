#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gcls;
using th::L;

namespace {

MultiClauseSet matrix_9x8() {
  return th::from_matrix({"+0+0000+", "+0-+0000", "--000++0", "--00--00", "0+---000", "000-+0--",
                          "-000+-0+", "-00+0+-0", "0++000+-"});
}

bool is_matching_in(const IncidenceGraph& g, const Matching& m) {
  std::size_t size = 0;
  for (std::size_t i = 0; i < g.clause_nodes.size(); ++i) {
    int x = m.clause_mate[i];
    if (x < 0) continue;
    ++size;
    if (m.var_mate[x] != static_cast<int>(i)) return false;
    if (!g.clause_nodes[i].has_var(g.var_nodes[x].var)) return false;
  }
  return size == m.size();
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("incidence graph of the three-clause example") {
    MultiClauseSet f = th::make({{1, 3}, {2, 3}, {3, 3}}, {Clause{L(1, 0), L(2, 0)}, Clause{L(2, 1), L(3, 1)},
                                                           Clause{L(3, 2), L(1, 2)}});
    IncidenceGraph g = build_incidence(f);
    CHECK(g.clause_nodes.size() == 3);
    CHECK(g.var_nodes.size() == 6);
    CHECK(g.edge_count() == 12);
    Matching m = maximum_matching(g);
    CHECK(m.size() == 3);
    CHECK(is_matching_in(g, m));
    CHECK(max_deficiency(f) == 0);
    CHECK(is_matching_satisfiable(f));
  }

  TEST_CASE("trivial-domain variables have no nodes") {
    MultiClauseSet f = th::make({{1, 1}, {2, 2}}, {Clause{L(1, 0), L(2, 0)}});
    IncidenceGraph g = build_incidence(f);
    CHECK(g.var_nodes.size() == 1);
    CHECK(g.edge_count() == 1);
  }

  TEST_CASE("multi-clause-set with repeated unit clause") {
    MultiClauseSet f1{VariableTable{{1, 3}}};
    f1.add(Clause{L(1, 0)}, 2);
    CHECK(is_matching_satisfiable(f1));
    auto phi = matching_satisfying_assignment(f1);
    REQUIRE(phi);
    CHECK(is_matching_satisfying(*phi, f1));
    CHECK(phi->satisfies(Clause{L(1, 0)}));
  }

  TEST_CASE("the 9x8 matrix is matching lean of deficiency one and satisfiable") {
    MultiClauseSet f = matrix_9x8();
    CHECK(deficiency(f) == 1);
    CHECK(max_deficiency(f) == 1);
    CHECK(is_matching_lean(f));
    CHECK(surplus(f) == 1);
    CHECK(oracle::sat(f));
    CHECK(matching_lean_kernel(f) == f);
  }

  TEST_CASE("deficiency and surplus agree with subset enumeration") {
    std::mt19937 rng(101);
    for (int it = 0; it < 300; ++it) {
      MultiClauseSet f = oracle::random_instance(rng);
      CAPTURE(emit_gcls(f));
      CHECK(static_cast<std::int64_t>(max_deficiency(f)) == oracle::max_deficiency(f));
      SurplusResult s = surplus_full(f);
      CHECK(s.value == oracle::surplus(f));
      if (!f.vars().empty()) {
        REQUIRE_FALSE(s.witness.empty());
        CHECK(deficiency(restrict_to(f.as_multi(), s.witness)) == s.value);
      }
      CHECK(is_matching_lean(f) == (f.vars().empty() || oracle::surplus(f) >= 1));
    }
  }

  TEST_CASE("matching lean kernels agree with the autarky fixpoint") {
    std::mt19937 rng(202);
    for (int it = 0; it < 200; ++it) {
      MultiClauseSet f = oracle::random_instance(rng, {5, 3, 10, 3});
      CAPTURE(emit_gcls(f));
      MultiClauseSet k = matching_lean_kernel(f);
      CHECK(k.same_clauses(oracle::matching_lean_kernel(f)));
      CHECK(matching_lean_kernel_fast(f).same_clauses(k));
      PartialAssignment q = quasi_maximal_matching_autarky(f);
      CHECK(is_matching_autarky(q, f));
      CHECK(apply(q, f.as_multi()).same_clauses(k.as_multi()));
      // Tarsi: a non-empty matching lean clause-set has deficiency at least one.
      if (!k.is_top()) CHECK(deficiency(k) >= 1);
    }
  }

  TEST_CASE("matching-satisfying assignments satisfy") {
    std::mt19937 rng(303);
    for (int it = 0; it < 200; ++it) {
      MultiClauseSet f = oracle::random_instance(rng);
      auto phi = matching_satisfying_assignment(f);
      CHECK(phi.has_value() == (max_deficiency(f) == 0));
      if (phi) CHECK(oracle::satisfies_all(*phi, f));
    }
  }

  TEST_CASE("repair keeps satisfaction and reaches a maximum matching") {
    std::mt19937 rng(404);
    int checked = 0;
    while (checked < 150) {
      MultiClauseSet f = oracle::random_instance(rng);
      std::optional<PartialAssignment> sat;
      oracle::each_total(f, oracle::var_list(f), [&](const PartialAssignment& phi) {
        if (!oracle::satisfies_all(phi, f)) return false;
        sat = phi;
        return true;
      });
      if (!sat) continue;
      ++checked;
      RepairResult r = repair_to_matching_maximum(f, *sat);
      CHECK(oracle::satisfies_all(r.phi, f));
      IncidenceGraph g = build_incidence(f);
      CHECK(r.matching.size() == maximum_matching(g).size());
      CHECK(is_matching_in(build_param_graph(f, r.phi), r.matching));
      PartialAssignment cur = *sat;
      for (const auto& ch : r.changes) {
        PartialAssignment next = cur;
        next.set(ch.var, ch.after);
        CHECK(cur.get(ch.var) == ch.before);
        CHECK(is_conservative(f, cur, next));
        cur = next;
      }
      CHECK(cur == r.phi);
      PartialAssignment d = matching_distance_assignment(f, *sat);
      CHECK(d.size() <= max_deficiency(f));
      CHECK(is_matching_satisfiable(apply(d, f)));
    }
  }

  TEST_CASE("Tovey bound implies satisfiability") {
    std::mt19937 rng(505);
    for (int it = 0; it < 200; ++it) {
      MultiClauseSet f = oracle::random_instance(rng);
      bool nonempty = false;
      for (const auto& [cl, m] : f.clauses()) nonempty = nonempty || !cl.empty();
      if (!nonempty) {
        CHECK_THROWS(tovey_check(f));
        continue;
      }
      if (tovey_check(f)) CHECK(oracle::sat(f));
    }
  }
}
