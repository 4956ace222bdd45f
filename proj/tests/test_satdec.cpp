#include <doctest.h>

#include <cstdlib>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gcls;
using th::L;

namespace {

MultiClauseSet autarky_example() {
  return th::make({{1, 3}, {2, 3}, {3, 2}, {4, 2}},
                  {Clause{L(1, 0), L(2, 0)}, Clause{L(1, 0), L(2, 1)}, Clause{L(1, 0), L(2, 2)}, Clause{L(1, 1)},
                   Clause{L(1, 2)}, Clause{L(1, 0), L(3, 0), L(4, 1)}, Clause{L(2, 0), L(3, 1), L(4, 0)}});
}

}  // namespace

TEST_SUITE("satdec") {
  TEST_CASE("brute force returns the lexicographically first model") {
    MultiClauseSet f = th::make({{1, 3}, {2, 2}}, {Clause{L(1, 0)}, Clause{L(1, 1), L(2, 0)}});
    auto w = brute_force_sat(f);
    REQUIRE(w);
    CHECK(*w == PartialAssignment{{1, 1}, {2, 1}});
    CHECK_FALSE(brute_force_sat(th::make({}, {Clause{}})).has_value());
    CHECK(brute_force_sat(MultiClauseSet{}).has_value());
  }

  TEST_CASE("brute force refuses oversized spaces") {
    MultiClauseSet f;
    for (Var v = 1; v <= 30; ++v) {
      f.declare(v, 2);
      f.add(Clause{L(v, 0)});
    }
    CHECK_THROWS_AS(brute_force_sat(f, 1000), Refusal);
    CHECK(assignment_space(f) == (std::uint64_t{1} << 30));
  }

  TEST_CASE("all decision methods agree with the oracle") {
    std::mt19937 rng(21);
    for (int it = 0; it < 300; ++it) {
      MultiClauseSet f = oracle::random_instance(rng);
      CAPTURE(emit_gcls(f));
      bool expect = oracle::sat(f);
      auto bf = brute_force_sat(f);
      CHECK(bf.has_value() == expect);
      SatResult bd = sat_bounded_deficiency(f);
      CHECK(bd.satisfiable == expect);
      if (bd.satisfiable) CHECK(oracle::satisfies_all(bd.witness, f));
      SatResult fp = sat_fpt(f);
      CHECK(fp.satisfiable == expect);
      if (fp.satisfiable) CHECK(oracle::satisfies_all(fp.witness, f));
      // Search-tree size bound against the reduced start instance.
      std::uint64_t d = max_deficiency(fpt_kernel(f));
      REQUIRE(d < 63);
      CHECK(fp.nodes <= (std::uint64_t{1} << d));
    }
  }

  TEST_CASE("bounded autarky search and lean kernel") {
    MultiClauseSet f = autarky_example();
    MultiClauseSet f1 = th::make({{1, 3}, {2, 3}, {3, 2}, {4, 2}},
                                 {Clause{L(1, 0), L(2, 0)}, Clause{L(1, 0), L(2, 1)}, Clause{L(1, 0), L(2, 2)},
                                  Clause{L(1, 1)}, Clause{L(1, 2)}});
    CHECK(lean_kernel_bounded(f).same_clauses(f1));
    CHECK(is_autarky(PartialAssignment{{3, 0}, {4, 0}}, f));
    CHECK(is_autarky(PartialAssignment{{3, 1}, {4, 1}}, f));
    CHECK_FALSE(is_autarky(PartialAssignment{{3, 0}, {4, 1}}, f));
    auto a = find_nontrivial_autarky_bounded(f);
    REQUIRE(a);
    CHECK(is_nontrivial_autarky(*a, f));
    CHECK_FALSE(find_nontrivial_autarky_bounded(f1).has_value());

    std::mt19937 rng(22);
    for (int it = 0; it < 200; ++it) {
      MultiClauseSet g = oracle::random_instance(rng, {5, 3, 10, 3});
      CAPTURE(emit_gcls(g));
      MultiClauseSet k = lean_kernel_bounded(g);
      CHECK(k.same_clauses(oracle::lean_kernel(g)));
      auto b = find_nontrivial_autarky_bounded(g);
      CHECK(b.has_value() == !(k == g));
      if (b) CHECK(oracle::is_autarky(*b, g));
    }
  }

  TEST_CASE("implication, irredundancy and minimal unsatisfiability") {
    MultiClauseSet f = th::make({{1, 2}, {2, 2}}, {Clause{L(1, 0)}, Clause{L(1, 1), L(2, 0)}});
    CHECK(implies(f, Clause{L(2, 0)}));
    CHECK_FALSE(implies(f, Clause{L(2, 1)}));
    MultiClauseSet mu = th::make({{1, 2}}, {Clause{L(1, 0)}, Clause{L(1, 1)}});
    CHECK(is_minimally_unsatisfiable(mu));
    mu.add(Clause{L(1, 1)});
    CHECK_FALSE(is_minimally_unsatisfiable(mu));
    CHECK_FALSE(is_irredundant(mu));
    std::mt19937 rng(23);
    for (int it = 0; it < 200; ++it) {
      MultiClauseSet g = oracle::random_instance(rng, {4, 3, 8, 3});
      bool mu_ok = is_minimally_unsatisfiable(g);
      CHECK(mu_ok == oracle::is_mu(g));
      // Minimally unsatisfiable implies delta* = delta >= 1.
      if (mu_ok) {
        CHECK(deficiency(g) >= 1);
        CHECK(static_cast<std::int64_t>(max_deficiency(g)) == deficiency(g));
      }
    }
  }
}
