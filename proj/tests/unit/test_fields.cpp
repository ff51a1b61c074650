#include <gtest/gtest.h>

#include "genaff/error.hpp"
#include "genaff/fields.hpp"
#include "genaff/generators.hpp"
#include "oracles.hpp"

using namespace genaff;

namespace {

// Every assignment of Z3 automorphisms to the three points.
std::vector<std::vector<Index>> z3_assignments() {
  std::vector<std::vector<Index>> out;
  for (Index m = 0; m < 8; ++m) out.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
  return out;
}

void expect_all_laws(const FieldLaws& l) {
  for (const LawCheck* c : {&l.unital, &l.closed_group, &l.reg1, &l.reg2, &l.inv1, &l.inv1b, &l.inv2}) {
    EXPECT_TRUE(c->holds);
    EXPECT_GT(c->checked, 0u);
  }
}

}  // namespace

TEST(Fields, Z3AutomorphismFieldsMatchOracle) {
  const auto v = elementary_abelian(3, 1);
  for (const auto& asg : z3_assignments()) {
    const auto f = certify_field(automorphism_field(v, asg));
    EXPECT_EQ(f.kind(), FieldKind::monoidal);
    EXPECT_EQ(f.constant(), asg[0] == asg[1] && asg[1] == asg[2]);
    oracle::Z3Field o{{}};
    for (Index a : asg) o.a.push_back(a == 0 ? 1 : 2);
    for (int p = 0; p < 3; ++p) {
      for (int w = 0; w < 3; ++w) {
        for (int x = 0; x < 3; ++x) {
          EXPECT_EQ(f.apply(p, w, x), static_cast<Index>(o.apply(p, w, x)));
          EXPECT_EQ(f.division_at(p, w, x), static_cast<Index>(o.division_at(p, w, x)));
        }
        for (int q = 0; q < 3; ++q) EXPECT_EQ(f.pullback(w, q, p), static_cast<Index>(o.pullback(w, q, p)));
      }
    }
    expect_all_laws(field_laws(f));
  }
}

TEST(Fields, Z2SquaredAutomorphismFieldsSatisfyLaws) {
  const auto v = elementary_abelian(2, 2);
  std::size_t count = 0;
  for (Index a = 0; a < 6; ++a) {
    for (Index b = 0; b < 6; b += 2) {
      const std::vector<Index> asg = {0, a, b, (a + b) % 6};
      const auto f = certify_field(automorphism_field(v, asg));
      expect_all_laws(field_laws(f));
      ++count;
    }
  }
  EXPECT_EQ(count, 18u);
}

TEST(Fields, CommonImageIsSharedByEveryPoint) {
  const auto f = certify_field(automorphism_field(elementary_abelian(3, 1), std::vector<Index>{0, 1, 0}));
  ASSERT_EQ(f.common_image().size(), 3u);
  for (Index p = 0; p < 3; ++p) {
    for (Index w = 0; w < 3; ++w) {
      EXPECT_EQ(f.translation(p, w), f.at(p).map(w));
      EXPECT_EQ(f.vector_for(p, f.translation_index(p, w)), w);
    }
  }
}

TEST(Fields, PremonoidalBijectionField) {
  const auto v = elementary_abelian(2, 2);
  const auto& z4 = catalog_group("Z4");
  std::vector<std::vector<Index>> bij;
  for_each_identity_preserving_bijection(v.base, z4, [&](std::span<const Index> b) {
    bij.emplace_back(b.begin(), b.end());
    return true;
  });
  ASSERT_EQ(bij.size(), 6u);
  const auto f = certify_field(bijection_field(v, z4, {bij[0], bij[1], bij[2], bij[3]}));
  EXPECT_EQ(f.kind(), FieldKind::premonoidal);
  const auto laws = field_laws(f);
  EXPECT_TRUE(laws.unital.holds);
  EXPECT_FALSE(laws.closed_group.holds);
  EXPECT_TRUE(laws.reg1.holds);
  EXPECT_TRUE(laws.reg2.holds);
  EXPECT_TRUE(laws.inv1.holds);
  EXPECT_TRUE(laws.inv1b.holds);
  EXPECT_TRUE(laws.inv2.holds);
}

TEST(Fields, RejectsMismatchedImages) {
  const auto v = elementary_abelian(2, 2);
  const auto z4 = right_regular_action(catalog_group("Z4"));
  const auto klein = right_regular_action(catalog_group("Z2^2"));
  // Same carrier labels 0..3 for both.
  const FiniteSet x = FiniteSet::range("X", 4);
  auto relabel = [&](const Action& a) {
    std::vector<Endofunction> maps;
    for (const auto& m : a.maps()) maps.emplace_back(x, std::vector<Index>(m.images().begin(), m.images().end()));
    return Action(v.base, x, maps);
  };
  try {
    verify_field(v, x, {relabel(klein), relabel(z4), relabel(klein), relabel(klein)}, FieldKind::premonoidal);
    FAIL();
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.rule(), "common_image");
  }
  EXPECT_THROW(verify_field(v, x, {relabel(klein)}, FieldKind::monoidal), PreconditionError);
}

TEST(Fields, ConstantFieldOfAffineSpace) {
  const auto s = affine_space_family(1, 8, 0).front();
  const auto f = constant_field(s);
  EXPECT_TRUE(f.constant());
  EXPECT_EQ(f.kind(), FieldKind::monoidal);
  const auto ind = induced_action(f);
  EXPECT_EQ(ind.action, s.action());
  EXPECT_EQ(ind.space.kind(), SpaceKind::affine);
}

TEST(Fields, InducedActionOfNonconstantField) {
  const auto f = certify_field(automorphism_field(elementary_abelian(3, 1), std::vector<Index>{0, 1, 0}));
  const auto ind = induced_action(f);
  for (Index w = 0; w < 3; ++w) {
    for (Index x = 0; x < 3; ++x) EXPECT_EQ(ind.action.apply(w, x), f.apply(x, w, x));
  }
}
