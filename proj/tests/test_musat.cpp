#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace gcls;
using th::L;

namespace {

constexpr Var a = 1, b = 2, c = 3, d = 4, e = 5, f_ = 6;

DeficiencyOneTree leaf() { return {}; }
DeficiencyOneTree node(Var v, std::vector<DeficiencyOneTree> kids) { return {v, std::move(kids)}; }

DeficiencyOneTree tree_r() {
  return node(a, {node(b, {leaf(), node(e, {leaf()})}), node(c, {leaf(), leaf(), leaf()}),
                  node(d, {node(f_, {leaf(), leaf()})})});
}

MultiClauseSet f_of_r() {
  return th::make({{a, 3}, {b, 2}, {c, 3}, {d, 1}, {e, 1}, {f_, 2}},
                  {Clause{L(a, 0), L(b, 0)}, Clause{L(a, 0), L(b, 1), L(e, 0)}, Clause{L(a, 1), L(c, 0)},
                   Clause{L(a, 1), L(c, 1)}, Clause{L(a, 1), L(c, 2)}, Clause{L(a, 2), L(d, 0), L(f_, 0)},
                   Clause{L(a, 2), L(d, 0), L(f_, 1)}});
}

MultiClauseSet smusat_example() {
  return th::make({{a, 3}, {b, 3}}, {Clause{L(a, 0), L(b, 0)}, Clause{L(a, 1), L(b, 0)}, Clause{L(a, 0), L(b, 1)},
                                     Clause{L(a, 1), L(b, 1)}, Clause{L(a, 2)}, Clause{L(b, 2)}});
}

// Removes literal occurrences greedily while the result stays minimally unsatisfiable.
MultiClauseSet eliminate_literals(const MultiClauseSet& f, std::size_t limit) {
  std::vector<Clause> cls = f.expanded();
  std::size_t done = 0;
  for (std::size_t i = 0; i < cls.size() && done < limit; ++i)
    for (std::size_t j = 0; j < cls[i].size() && done < limit;) {
      Clause shorter = cls[i].without_var(cls[i].literals()[j].var);
      std::vector<Clause> trial = cls;
      trial[i] = shorter;
      MultiClauseSet g = oracle::from_list(f, trial);
      bool pure = false;
      for (Var v : f.vars()) pure = pure || is_pure(g, v) || !g.vars().count(v);
      if (!pure && oracle::is_mu(g)) {
        cls = trial;
        ++done;
      } else {
        ++j;
      }
    }
  return oracle::from_list(f, cls);
}

}  // namespace

TEST_SUITE("musat") {
  TEST_CASE("tree image of the example tree") {
    MultiClauseSet img = tree_to_clause_set(tree_r());
    CHECK(img.same_clauses(f_of_r()));
    CHECK(img.table() == f_of_r().table());
    BigInt total = 0;
    for (const auto& cl : img.expanded()) total += falsifying_count(cl, img.vars(), img.table());
    CHECK(total == 36);
    CHECK(deficiency(img) == 1);
    CHECK(tree_to_clause_set(leaf()).has_empty_clause());
    CHECK_THROWS(tree_to_clause_set(node(a, {node(a, {leaf()})})));
  }

  TEST_CASE("recognition and classification of the example") {
    MultiClauseSet f = f_of_r();
    auto rec = recognize_mu1(f);
    CHECK(rec.verdict == Mu1Verdict::Mu1);
    CHECK(rec.eliminated.size() == 6);
    Mu1Classification cl = classify_mu1(f);
    CHECK(cl.cls == Mu1Class::Saturated);
    REQUIRE(cl.tree);
    CHECK(*cl.tree == tree_r());
    CHECK(serialize_tree(*cl.tree) == "(1 (0 (2 (0 *) (1 (5 (0 *))))) (1 (3 (0 *) (1 *) (2 *))) (2 (4 (0 (6 (0 *) (1 *))))))");
    CHECK(degree_measures(f).mmvd == 1);
  }

  TEST_CASE("the satisfiable deficiency-one matrix is rejected") {
    MultiClauseSet f = th::from_matrix({"+0+0000+", "+0-+0000", "--000++0", "--00--00", "0+---000", "000-+0--",
                                        "-000+-0+", "-00+0+-0", "0++000+-"});
    CHECK(recognize_mu1(f).verdict == Mu1Verdict::NotMu1);
    CHECK_THROWS(classify_mu1(f));
  }

  TEST_CASE("marginal and intermediate instances by literal elimination") {
    MultiClauseSet marginal = eliminate_literals(f_of_r(), 100);
    CAPTURE(emit_gcls(marginal));
    CHECK(oracle::is_mu1(marginal));
    CHECK(recognize_mu1(marginal).verdict == Mu1Verdict::Mu1);
    CHECK(classify_mu1(marginal).cls == Mu1Class::Marginal);
    MultiClauseSet one = eliminate_literals(f_of_r(), 1);
    CHECK(classify_mu1(one).cls == Mu1Class::Intermediate);
    MultiClauseSet sat = saturate(marginal);
    CHECK(classify_mu1(sat).cls == Mu1Class::Saturated);
  }

  TEST_CASE("recognition agrees with the brute-force oracle") {
    std::mt19937 rng(51);
    int positives = 0;
    for (int it = 0; it < 1500; ++it) {
      MultiClauseSet f = oracle::random_instance(rng, {4, 3, 8, 3});
      bool expect = oracle::is_mu1(f);
      positives += expect;
      CHECK(expect == (recognize_mu1(f).verdict == Mu1Verdict::Mu1));
    }
    for (int it = 0; it < 60; ++it) {
      MultiClauseSet t = tree_to_clause_set(oracle::random_tree(rng, 5, 3));
      MultiClauseSet g = eliminate_literals(t, rng() % 4);
      CHECK(oracle::is_mu1(g));
      CHECK(recognize_mu1(g).verdict == Mu1Verdict::Mu1);
      ++positives;
    }
    CHECK(positives > 60);
  }

  TEST_CASE("random trees round-trip through classification") {
    std::mt19937 rng(52);
    for (int it = 0; it < 200; ++it) {
      DeficiencyOneTree t = oracle::random_tree(rng, 8, 3);
      REQUIRE(tree_size(t) <= 25);
      MultiClauseSet f = tree_to_clause_set(t);
      CHECK_FALSE(oracle::sat(f));
      CHECK(classify_hitting(f).hitting);
      Mu1Classification cl = classify_mu1(f);
      CHECK(cl.cls == Mu1Class::Saturated);
      REQUIRE(cl.tree);
      CHECK(*cl.tree == t);
      CHECK(parse_tree(serialize_tree(t)) == t);
      if (f.c() > 1) CHECK(degree_measures(f).mmvd == 1);
    }
  }

  TEST_CASE("saturation and stability on the generalised example") {
    MultiClauseSet f = smusat_example();
    CHECK(is_saturated_mu(f));
    CHECK(saturate(f) == f);
    CHECK_FALSE(stability_at_least(f, 1));
    CHECK(stability_at_least(f, 0));
    MultiClauseSet reduced = apply(PartialAssignment{{a, 2}}, f);
    CHECK(reduced.has_empty_clause());
    CHECK(reduced.c() == 2);
    CHECK_FALSE(oracle::is_mu(reduced));
    CHECK_THROWS(saturate(th::make({{a, 2}}, {Clause{L(a, 0)}})));
  }

  TEST_CASE("hitting clause-sets are fully stable") {
    std::mt19937 rng(53);
    for (int it = 0; it < 30; ++it) {
      MultiClauseSet f = tree_to_clause_set(oracle::random_tree(rng, 4, 3));
      CHECK(stability_at_least(f, f.vars().size()));
    }
  }

  TEST_CASE("boolean MU: stability one iff saturated") {
    std::mt19937 rng(54);
    int seen = 0;
    for (int it = 0; it < 4000 && seen < 40; ++it) {
      MultiClauseSet f = oracle::random_instance(rng, {4, 2, 8, 3});
      bool boolean = true;
      for (Var v : f.vars()) boolean = boolean && f.domain_size(v) == 2;
      if (!boolean || !oracle::is_mu(f)) continue;
      ++seen;
      CHECK(stability_at_least(f, 1) == is_saturated_mu(f));
      CHECK(is_saturated_mu(saturate(f)));
    }
    CHECK(seen >= 10);
  }

  TEST_CASE("degree measures") {
    CHECK(degree_measures(th::make({{a, 2}}, {Clause{L(a, 0)}})).mmvd == 1);
    CHECK(degree_measures(th::make({{a, 2}}, {Clause{L(a, 0)}})).mvd == 1);
    CHECK_THROWS(degree_measures(MultiClauseSet{}));
    DegreeMeasures m = degree_measures(smusat_example());
    CHECK(m.mmvd == 2);
    CHECK(m.mvd == 5);
  }

  TEST_CASE("tree parser rejects malformed input") {
    CHECK_THROWS(parse_tree("(1 (0 *)"));
    CHECK_THROWS(parse_tree("(1 (1 *))"));
    CHECK_THROWS(parse_tree("(1)"));
    CHECK_THROWS(parse_tree("(1 (0 (1 (0 *))))"));
    CHECK(parse_tree("  *  ") == leaf());
  }
}
