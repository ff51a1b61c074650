#include <gtest/gtest.h>

#include <numeric>

#include "genaff/error.hpp"
#include "genaff/groups.hpp"
#include "oracles.hpp"

using namespace genaff;

TEST(Groups, QuaternionCatalogMatchesHamiltonRules) {
  const auto& q = catalog_group("Q");
  ASSERT_EQ(q.order(), 8u);
  for (Index a = 0; a < 8; ++a) {
    for (Index b = 0; b < 8; ++b) {
      const auto expect = oracle::qmul(oracle::qparse(q.carrier().label(a)), oracle::qparse(q.carrier().label(b)));
      EXPECT_EQ(q.carrier().label(q.op(a, b)), oracle::qlabel(expect));
    }
  }
  EXPECT_EQ(q.carrier().label(q.identity()), "1");
  EXPECT_FALSE(is_abelian(q));
}

TEST(Groups, C8IsCyclicOfOrderEight) {
  const auto& c8 = catalog_group("C8");
  EXPECT_TRUE(is_abelian(c8));
  EXPECT_EQ(c8.element_order(c8.carrier().index_of("a")), 8u);
  EXPECT_TRUE(is_isomorphic(c8, cyclic_group(8)));
  EXPECT_FALSE(is_isomorphic(c8, catalog_group("Q")));
}

TEST(Groups, ValidationReportsFirstFailedAxiom) {
  const FiniteSet x("X", {"e", "a"});
  auto rule = [&](CayleyTable t) {
    try {
      validate_group(x, std::move(t));
    } catch (const VerificationError& e) {
      return e.rule();
    }
    return std::string("ok");
  };
  EXPECT_EQ(rule({{0, 1}, {1, 0}}), "ok");
  EXPECT_EQ(rule({{0, 1}}), "dimension");
  EXPECT_EQ(rule({{0, 0}, {1, 0}}), "latin_row");
  EXPECT_EQ(rule({{0, 1}, {0, 1}}), "latin_column");
  EXPECT_EQ(rule({{1, 0}, {0, 1}}), "ok");  // a is the identity
}

TEST(Groups, LatinSquareWithoutAssociativity) {
  // A loop of order 5 that is not a group.
  const CayleyTable t = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    validate_group(FiniteSet::range("L", 5), t);
    FAIL() << "accepted a non-associative loop";
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.rule(), "associativity");
    EXPECT_EQ(e.witness().elements.size(), 3u);
  }
}

TEST(Groups, ElementaryAbelianAndCertification) {
  const auto v = elementary_abelian(3, 2);
  EXPECT_EQ(v.order(), 9u);
  EXPECT_EQ(v.prime, 3u);
  EXPECT_EQ(v.dimension, 2u);
  for (Index a = 0; a < 9; ++a) {
    for (Index b = 0; b < 9; ++b) {
      for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(v.coords[v.add(a, b)][i], (v.coords[a][i] + v.coords[b][i]) % 3);
      }
    }
  }
  const auto c = certify_vector_group(v.base);
  EXPECT_EQ(c.dimension, 2u);
  EXPECT_THROW(certify_vector_group(catalog_group("Z4")), VerificationError);
  EXPECT_THROW(certify_vector_group(catalog_group("Q")), VerificationError);
  EXPECT_EQ(certify_vector_group(catalog_group("Z2^3")).dimension, 3u);
}

TEST(Groups, WeightCountsNonzeroCoordinates) {
  const auto v = elementary_abelian(2, 3);
  for (Index a = 0; a < v.order(); ++a) {
    std::size_t w = 0;
    for (auto c : v.coords[a]) w += c != 0;
    EXPECT_EQ(v.weight(a), w);
  }
  EXPECT_EQ(v.weight(v.zero()), 0u);
}

TEST(Groups, IsomorphismWitnessIsAHomomorphism) {
  const auto& d4 = catalog_group("D4");
  for (const auto& [name, h] : builtin_catalog()) {
    if (h.order() != d4.order()) continue;
    auto phi = find_isomorphism(d4, h);
    EXPECT_EQ(phi.has_value(), name == "D4") << name;
    if (!phi) continue;
    for (Index a = 0; a < 8; ++a) {
      for (Index b = 0; b < 8; ++b) EXPECT_EQ((*phi)[d4.op(a, b)], h.op((*phi)[a], (*phi)[b]));
    }
  }
}

TEST(Groups, OrderEightCatalogIsPairwiseDistinct) {
  const std::vector<std::string> names = {"C8", "Z2^3", "Z2xZ4", "D4", "Q"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      EXPECT_EQ(is_isomorphic(catalog_group(names[i]), catalog_group(names[j])), i == j);
    }
  }
}

TEST(Groups, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(catalog_group("Z3")).size(), 2u);
  EXPECT_EQ(automorphisms(catalog_group("Z2^2")).size(), 6u);
  EXPECT_EQ(automorphisms(catalog_group("Z2^3")).size(), 168u);
  EXPECT_EQ(automorphisms(catalog_group("Q")).size(), 24u);
  EXPECT_EQ(automorphisms(catalog_group("S3")).size(), 6u);
  EXPECT_THROW(automorphisms(catalog_group("Z2^3"), 100), BudgetExceeded);
}

TEST(Groups, DirectAndOppositeProducts) {
  const auto p = direct_product(catalog_group("Z2"), catalog_group("Z4"));
  EXPECT_TRUE(is_isomorphic(p, catalog_group("Z2xZ4")));
  const auto op = opposite_group(catalog_group("S3"));
  EXPECT_EQ(op.name(), "S3^op");
  EXPECT_TRUE(is_isomorphic(op, catalog_group("S3")));
  for (Index a = 0; a < 6; ++a) {
    for (Index b = 0; b < 6; ++b) EXPECT_EQ(op.op(a, b), catalog_group("S3").op(b, a));
  }
}

TEST(Groups, IsomorphismCap) {
  EXPECT_THROW(is_isomorphic(cyclic_group(13), cyclic_group(13)), PreconditionError);
}
