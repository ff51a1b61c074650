#include <gtest/gtest.h>

#include "genaff/actions.hpp"
#include "genaff/error.hpp"
#include "genaff/workbench.hpp"
#include "oracles.hpp"

using namespace genaff;

namespace {

const Action& example(const std::string& name) { return std::get<Action>(example_catalog().at(name)); }

// Brute-force closedness in the set sense.
bool closed_as_sets(const Action& a) {
  for (const auto& f : a.maps()) {
    for (const auto& g : a.maps()) {
      bool found = false;
      for (const auto& h : a.maps()) found = found || h == compose(f, g);
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Actions, EpsilonPhiExample) {
  const auto rep = classify(example("epsilon_phi.action"));
  EXPECT_TRUE(rep.holds(Flag::closed_group_covariant));
  EXPECT_TRUE(rep.image.is_group);
  EXPECT_FALSE(rep.image.identity_is_identity_map);
  EXPECT_FALSE(rep.holds(Flag::unital_set));
  EXPECT_FALSE(rep.holds(Flag::reversible));
  EXPECT_FALSE(rep.holds(Flag::monoidal));
  EXPECT_EQ(*rep.flag(Flag::reversible).witness, (Witness{{"e", "a"}}));
}

TEST(Actions, C8OnQExample) {
  const Action& a = example("c8_on_q.action");
  const auto rep = classify(a);
  for (Flag f : {Flag::unital_group, Flag::closed_set, Flag::regular, Flag::premonoidal}) {
    EXPECT_TRUE(rep.holds(f)) << flag_name(f);
  }
  EXPECT_FALSE(rep.holds(Flag::monoidal));
  const auto t = image_group(a);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->order(), 8u);
  EXPECT_FALSE(is_abelian(*t));
  EXPECT_TRUE(is_isomorphic(*t, catalog_group("Q")));
  EXPECT_FALSE(is_isomorphic(*t, catalog_group("C8")));
  // σ(g⁻¹) = σ(g)⁻¹ by design.
  const auto& c8 = catalog_group("C8");
  for (Index g = 0; g < 8; ++g) EXPECT_EQ(a.map(c8.inverse(g)), inverse(a.map(g)));
}

TEST(Actions, C8OnQImageIsLeftMultiplication) {
  const Action& a = example("c8_on_q.action");
  const char* z[] = {"1", "i", "j", "k", "-1", "-k", "-j", "-i"};
  for (Index g = 0; g < 8; ++g) {
    for (Index x = 0; x < 8; ++x) {
      const auto expect = oracle::qmul(oracle::qparse(z[g]), oracle::qparse(a.carrier().label(x)));
      EXPECT_EQ(a.carrier().label(a.apply(g, x)), oracle::qlabel(expect));
    }
  }
}

TEST(Actions, RegularRepresentationsAreMonoidal) {
  for (const auto& [name, g] : builtin_catalog()) {
    const auto l = classify(left_regular_action(g), Variance::covariant);
    EXPECT_TRUE(l.holds(Flag::monoidal)) << name;
    EXPECT_TRUE(l.holds(Flag::regular)) << name;
    const auto r = classify(right_regular_action(g), Variance::contravariant);
    EXPECT_TRUE(r.holds(Flag::monoidal)) << name;
    EXPECT_EQ(r.holds(Flag::closed_group_covariant), is_abelian(g)) << name;
  }
}

TEST(Actions, TrivialActionOnSets) {
  const FiniteSet d("D", {"p", "q"});
  const auto rep = classify(trivial_action(d, FiniteSet::range("X", 3)));
  EXPECT_TRUE(rep.holds(Flag::unital_set));
  EXPECT_TRUE(rep.holds(Flag::closed_set));
  EXPECT_FALSE(rep.holds(Flag::transitive));
  EXPECT_FALSE(rep.holds(Flag::injective_as_function));
  EXPECT_FALSE(rep.has(Flag::unital_group));
  EXPECT_THROW(rep.flag(Flag::monoidal), PreconditionError);
}

TEST(Actions, EnumerationCountsAndOrder) {
  std::size_t count = 0;
  std::optional<Action> prev;
  for_each_action(catalog_group("Z2"), FiniteSet::range("X", 3), [&](const Action& a) {
    if (prev) {
      std::vector<Index> p, c;
      for (const auto& f : prev->maps()) p.insert(p.end(), f.images().begin(), f.images().end());
      for (const auto& f : a.maps()) c.insert(c.end(), f.images().begin(), f.images().end());
      EXPECT_LT(p, c);
    }
    prev = a;
    ++count;
    return true;
  });
  EXPECT_EQ(count, 729u);
}

// Exhaustive flag checks against direct definitions.
TEST(Actions, FlagsMatchDefinitionsExhaustively) {
  for_each_action(catalog_group("Z3"), FiniteSet::range("X", 2), [&](const Action& a) {
    const auto rep = classify(a);
    bool unital = false, reversible = true;
    for (const auto& f : a.maps()) {
      unital = unital || is_identity(f);
      reversible = reversible && is_bijection(f);
    }
    EXPECT_EQ(rep.holds(Flag::unital_set), unital);
    EXPECT_EQ(rep.holds(Flag::reversible), reversible);
    EXPECT_EQ(rep.holds(Flag::closed_set), closed_as_sets(a));
    bool transitive = true, free = true;
    for (Index x = 0; x < 2; ++x) {
      transitive = transitive && orbit(a, x).size() == 2;
      const auto d = dual(a, x);
      for (Index g = 0; g < 3; ++g) {
        for (Index h = g + 1; h < 3; ++h) free = free && d[g] != d[h];
      }
    }
    EXPECT_EQ(rep.holds(Flag::transitive), transitive);
    EXPECT_EQ(rep.holds(Flag::free), free);
    EXPECT_EQ(rep.holds(Flag::regular), transitive && free);
    const auto& g = a.domain().group();
    bool closed_co = true, closed_contra = true;
    for (Index p = 0; p < 3; ++p) {
      for (Index q = 0; q < 3; ++q) {
        closed_co = closed_co && compose(a.map(p), a.map(q)) == a.map(g.op(p, q));
        closed_contra = closed_contra && seq(a.map(p), a.map(q)) == a.map(g.op(p, q));
      }
    }
    EXPECT_EQ(rep.holds(Flag::closed_group_covariant), closed_co);
    EXPECT_EQ(rep.holds(Flag::closed_group_contravariant), closed_contra);
    EXPECT_EQ(rep.holds(Flag::unital_group), is_identity(a.map(g.identity())));
    EXPECT_EQ(rep.holds(Flag::monoidal), is_identity(a.map(g.identity())) && closed_co);
    return true;
  });
}

TEST(Actions, FreeActionLemmas) {
  for_each_action(catalog_group("Z2"), FiniteSet::range("X", 3), [&](const Action& a) {
    const auto rep = classify(a);
    if (!rep.holds(Flag::free)) return true;
    EXPECT_TRUE(rep.holds(Flag::injective_as_function));
    for (const auto& f : a.image()) {
      bool fixed = false;
      for (Index x = 0; x < 3; ++x) fixed = fixed || f(x) == x;
      if (fixed && rep.holds(Flag::unital_group)) {
        EXPECT_TRUE(is_identity(f));
      }
    }
    return true;
  });
}

TEST(Actions, DualOrbitConduit) {
  const Action& a = example("epsilon_phi.action");
  EXPECT_EQ(dual(a, 2), (std::vector<Index>{2, 3}));
  EXPECT_EQ(orbit(a, 1), (std::vector<Index>{0}));
  EXPECT_EQ(conduit(a, 2, 3), (std::vector<Index>{1}));
  EXPECT_EQ(stabilizer(a, 0), (std::vector<Index>{0, 1}));
}

TEST(Actions, DivisionOnRegularActions) {
  const Action& a = example("c8_on_q.action");
  for (Index x = 0; x < 8; ++x) {
    for (Index y = 0; y < 8; ++y) EXPECT_EQ(a.apply(division(a, x, y), x), y);
  }
  EXPECT_THROW(division(example("epsilon_phi.action"), 0, 1), PreconditionError);
}

TEST(Actions, BinaryRoundTrip) {
  for (const auto& name : {"c8_on_q.action", "epsilon_phi.action"}) {
    const Action& a = example(name);
    const auto b = to_binary(a);
    EXPECT_EQ(from_binary(b), a);
    for (Index g = 0; g < a.domain().size(); ++g) {
      for (Index x = 0; x < a.carrier().size(); ++x) EXPECT_EQ(b.cells[g][x], a.apply(g, x));
    }
  }
}

TEST(Actions, OppositeSwapsVariance) {
  const auto& s3 = catalog_group("S3");
  const Action l = left_regular_action(s3);
  const Action op = opposite_action(l);
  EXPECT_TRUE(classify(op, Variance::contravariant).holds(Flag::closed_group_contravariant));
  EXPECT_FALSE(classify(op, Variance::covariant).holds(Flag::closed_group_covariant));
  EXPECT_THROW(opposite_action(trivial_action(FiniteSet::range("D", 2), FiniteSet::range("X", 2))),
               PreconditionError);
}

TEST(Actions, ClassificationIsDeterministic) {
  const Action& a = example("epsilon_phi.action");
  const auto r1 = classify(a), r2 = classify(a);
  for (Flag f : all_flags()) {
    EXPECT_EQ(r1.holds(f), r2.holds(f));
    EXPECT_EQ(r1.flag(f).witness, r2.flag(f).witness);
  }
}
