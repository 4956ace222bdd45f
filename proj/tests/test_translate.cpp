#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gcls;
using th::B;
using th::L;

namespace {

// Boolean variable of (source, index) in a translation.
Var bvar(const TranslationResult& t, Var v, std::uint32_t index) {
  for (const auto& [b, o] : t.var_map)
    if (o.source == v && o.index == index) return b;
  FAIL("no boolean variable for the requested origin");
  return 0;
}

MultiClauseSet example_31() {
  return th::make({{1, 3}, {2, 3}}, {Clause{L(1, 0), L(2, 1)}, Clause{L(1, 1), L(2, 0)}, Clause{L(1, 2), L(2, 2)}});
}

}  // namespace

TEST_SUITE("translate") {
  TEST_CASE("direct translation of the three-clause example") {
    TranslationResult t = direct_weak(example_31());
    const MultiClauseSet& g = t.cnf;
    CHECK(g.c() == 5);
    CHECK(g.vars().size() == 6);
    auto a = [&](Value e) { return bvar(t, 1, e); };
    auto b = [&](Value e) { return bvar(t, 2, e); };
    CHECK(g.multiplicity(Clause{L(a(0), 0), L(b(1), 0)}) == 1);
    CHECK(g.multiplicity(Clause{L(a(1), 0), L(b(0), 0)}) == 1);
    CHECK(g.multiplicity(Clause{L(a(2), 0), L(b(2), 0)}) == 1);
    CHECK(g.multiplicity(Clause{L(a(0), 1), L(a(1), 1), L(a(2), 1)}) == 1);
    CHECK(g.multiplicity(Clause{L(b(0), 1), L(b(1), 1), L(b(2), 1)}) == 1);
    CHECK(deficiency(g) == deficiency(example_31()));
  }

  TEST_CASE("pushing an assignment through the direct translation") {
    TranslationResult t = direct_weak(example_31());
    PartialAssignment psi = push_assignment(t, PartialAssignment{{1, 1}, {2, 2}});
    auto a = [&](Value e) { return bvar(t, 1, e); };
    auto b = [&](Value e) { return bvar(t, 2, e); };
    CHECK(psi.size() == 6);
    CHECK(psi.get(a(0)) == 1u);
    CHECK(psi.get(a(1)) == 0u);
    CHECK(psi.get(a(2)) == 1u);
    CHECK(psi.get(b(0)) == 1u);
    CHECK(psi.get(b(1)) == 1u);
    CHECK(psi.get(b(2)) == 0u);
    CHECK(lift_assignment(t, psi) == PartialAssignment{{1, 1}, {2, 2}});
  }

  TEST_CASE("matching behaviour of the direct translation on multi-clause-sets") {
    MultiClauseSet f1{VariableTable{{1, 3}}};
    f1.add(Clause{L(1, 0)}, 2);
    TranslationResult t1 = direct_weak(f1);
    CHECK(is_matching_satisfiable(f1));
    CHECK_FALSE(is_matching_satisfiable(t1.cnf));
    MultiClauseSet k1 = matching_lean_kernel(t1.cnf);
    CHECK(k1.c() == 2);
    CHECK(k1.multiplicity(Clause{L(bvar(t1, 1, 0), 0)}) == 2);

    MultiClauseSet f2 = th::make({{1, 3}, {2, 2}, {3, 2}}, {Clause{L(1, 0), L(2, 0)}, Clause{L(1, 0), L(3, 0)},
                                                           Clause{L(2, 1)}, Clause{L(3, 1)}});
    CHECK(max_deficiency(f2) == 0);
    CHECK(max_deficiency(direct_weak(f2).cnf) == 1);

    MultiClauseSet f3{VariableTable{{1, 3}}};
    f3.add(Clause{L(1, 1)});
    f3.add(Clause{L(1, 2)}, 2);
    CHECK(is_matching_lean(f3));
    TranslationResult t3 = direct_weak(f3);
    MultiClauseSet k3 = matching_lean_kernel(t3.cnf);
    CHECK(k3.c() == 2);
    CHECK(k3.multiplicity(Clause{L(bvar(t3, 1, 2), 0)}) == 2);

    MultiClauseSet f4 = th::make({{1, 3}, {2, 2}}, {Clause{L(1, 1)}, Clause{L(1, 2)}, Clause{L(1, 2), L(2, 0)},
                                                   Clause{L(2, 1)}});
    CHECK(is_matching_lean(f4));
    CHECK_FALSE(is_matching_lean(direct_weak(f4).cnf));
  }

  TEST_CASE("nested translation example with custom orders") {
    MultiClauseSet f = th::make({{1, 4}, {2, 4}}, {Clause{L(1, 0)}, Clause{L(2, 0)}, Clause{L(1, 0), L(2, 0)},
                                                   Clause{L(1, 1), L(2, 1)}, Clause{L(1, 2), L(2, 2)},
                                                   Clause{L(1, 3), L(2, 3)}});
    TranslationResult t = nested(f, {{2, {0, 3, 2, 1}}});
    auto v = [&](int i) { return bvar(t, 1, i + 1); };
    auto w = [&](int i) { return bvar(t, 2, i + 1); };
    auto pos = [](Var x) { return L(x, 0); };
    auto neg = [](Var x) { return L(x, 1); };
    MultiClauseSet expect(t.cnf.table());
    expect.add(Clause{pos(v(0))});
    expect.add(Clause{pos(w(0))});
    expect.add(Clause{pos(v(0)), pos(w(0))});
    expect.add(Clause{neg(v(0)), pos(v(1)), neg(w(0)), neg(w(1)), neg(w(2))});
    expect.add(Clause{neg(v(0)), neg(v(1)), pos(v(2)), neg(w(0)), neg(w(1)), pos(w(2))});
    expect.add(Clause{neg(v(0)), neg(v(1)), neg(v(2)), neg(w(0)), pos(w(1))});
    CHECK(t.cnf.same_clauses(expect));
    CHECK(deficiency(t.cnf) == 0);
    CHECK(max_deficiency(f) == 0);
    CHECK(max_deficiency(t.cnf) == 1);
    MultiClauseSet kernel(t.cnf.table());
    kernel.add(Clause{pos(v(0))});
    kernel.add(Clause{pos(w(0))});
    kernel.add(Clause{pos(v(0)), pos(w(0))});
    CHECK(matching_lean_kernel(t.cnf).same_clauses(kernel));
  }

  TEST_CASE("gadgets validate and bad gadgets are rejected") {
    for (std::uint32_t k = 1; k <= 5; ++k) {
      std::vector<Value> id(k);
      for (Value e = 0; e < k; ++e) id[e] = e;
      CHECK_NOTHROW(validate_gadget(direct_gadget(k, false), k));
      CHECK_NOTHROW(validate_gadget(direct_gadget(k, true), k));
      CHECK_NOTHROW(validate_gadget(nested_gadget(k, id, false), k));
      CHECK_NOTHROW(validate_gadget(nested_gadget(k, id, true), k));
      CHECK_NOTHROW(validate_gadget(reduced_gadget(k, id, false), k));
      CHECK_NOTHROW(validate_gadget(log_gadget(k, id), k));
    }
    Gadget bad{1, {B({1}), B({1})}, {}};
    CHECK_THROWS_AS(validate_gadget(bad, 2), std::invalid_argument);
    Gadget sat_gadget{1, {B({1})}, {}};
    CHECK_THROWS_AS(validate_gadget(sat_gadget, 1), std::invalid_argument);
    CHECK_THROWS_AS(validate_gadget(direct_gadget(3, false), 2), std::invalid_argument);
  }

  TEST_CASE("translations preserve satisfiability, deficiency and structure") {
    std::mt19937 rng(31);
    for (int it = 0; it < 200; ++it) {
      MultiClauseSet f = oracle::random_instance(rng, {4, 3, 8, 3});
      CAPTURE(emit_gcls(f));
      bool s = oracle::sat(f);
      for (Scheme sc : {Scheme::DirectWeak, Scheme::DirectStrong, Scheme::Nested, Scheme::NestedStrong,
                        Scheme::Reduced, Scheme::Log}) {
        CAPTURE(scheme_name(sc));
        TranslationResult t = translate(f, sc, it % 2 == 1);
        auto m = brute_force_sat(t.cnf);
        CHECK(m.has_value() == s);
        if (m) CHECK(oracle::satisfies_all(lift_assignment(t, *m), f));
      }
      TranslationResult d = direct_weak(f);
      CHECK(deficiency(d.cnf) == deficiency(f));
      TranslationResult nt = nested(f);
      CHECK(nt.cnf.c() == f.c());
      std::vector<Clause> images;
      for (const auto& c : f.expanded()) images.push_back(translate_clause(nt, c));
      const ConflictMatrix scf = conflict_matrix(f);
      bool same = true;
      for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = 0; j < images.size(); ++j)
          same = same && static_cast<std::int64_t>(images[i].clash_count(images[j])) == scf[i][j];
      CHECK(same);
      // Pushed models of F satisfy the translation.
      if (auto w = brute_force_sat(f)) CHECK(oracle::satisfies_all(push_assignment(nt, *w), nt.cnf));
    }
  }

  TEST_CASE("generic translation with hand-made gadgets") {
    MultiClauseSet f = th::make({{1, 3}, {2, 2}}, {Clause{L(1, 0), L(2, 0)}, Clause{L(1, 1)}, Clause{L(1, 2)},
                                                   Clause{L(2, 1)}});
    std::map<Var, Gadget> gs{{1, log_gadget(3, {0, 1, 2})}, {2, direct_gadget(2, false)}};
    TranslationResult t = generic(f, gs);
    CHECK_FALSE(brute_force_sat(t.cnf).has_value());
    CHECK_THROWS(generic(f, {{1, log_gadget(3, {0, 1, 2})}}));
  }
}
