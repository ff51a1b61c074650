#include <gtest/gtest.h>

#include "genaff/deformation.hpp"
#include "genaff/error.hpp"
#include "genaff/generators.hpp"
#include "oracles.hpp"

using namespace genaff;

namespace {

std::vector<ActionField> z3_fields() {
  const auto v = elementary_abelian(3, 1);
  std::vector<ActionField> out;
  for (Index m = 0; m < 8; ++m) {
    out.push_back(certify_field(automorphism_field(v, std::vector<Index>{m & 1, (m >> 1) & 1, (m >> 2) & 1})));
  }
  return out;
}

std::vector<ActionField> klein_fields() {
  const auto v = elementary_abelian(2, 2);
  std::vector<ActionField> out;
  for (Index a = 0; a < 6; ++a) {
    out.push_back(certify_field(automorphism_field(v, std::vector<Index>{0, a, (a + 1) % 6, (a + 3) % 6})));
  }
  return out;
}

std::vector<std::vector<Index>> klein_to_z4_bijections() {
  std::vector<std::vector<Index>> out;
  for_each_identity_preserving_bijection(catalog_group("Z2^2"), catalog_group("Z4"),
                                         [&](std::span<const Index> b) {
                                           out.emplace_back(b.begin(), b.end());
                                           return true;
                                         });
  return out;
}

template <class F>
void for_tuples(std::size_t nx, std::size_t nv, F&& f) {
  for (Index x = 0; x < nx; ++x) {
    for (Index w = 0; w < nv; ++w) {
      for (Index u = 0; u < nv; ++u) {
        for (Index v = 0; v < nv; ++v) f(x, w, u, v);
      }
    }
  }
}

}  // namespace

TEST(Deformation, Torsion1StarMatchesMod3Oracle) {
  Index m = 0;
  for (const auto& f : z3_fields()) {
    oracle::Z3Field o{{(m & 1) ? 2 : 1, ((m >> 1) & 1) ? 2 : 1, ((m >> 2) & 1) ? 2 : 1}};
    for (Index x = 0; x < 3; ++x) {
      for (Index u = 0; u < 3; ++u) {
        for (Index v = 0; v < 3; ++v) {
          EXPECT_EQ(torsion1_star(f, x, u, v).vector, static_cast<Index>(o.torsion1_star(x, u, v)));
        }
      }
    }
    ++m;
  }
}

TEST(Deformation, Z3Field121HasTorsion) {
  const auto f = certify_field(automorphism_field(elementary_abelian(3, 1), std::vector<Index>{0, 1, 0}));
  EXPECT_EQ(torsion1_star(f, 0, 1, 2).vector, 1u);
}

TEST(Deformation, ConstantFieldsAreTorsionFreeAndFlat) {
  for (const auto& s : affine_space_family(6, 9, 11)) {
    const auto f = constant_field(s);
    const std::size_t nv = s.vectors().order();
    for_tuples(s.size(), nv, [&](Index x, Index w, Index u, Index v) {
      EXPECT_EQ(curvature0(f, x, w, u, v).vector, 0u);
      if (w == 0) {
        EXPECT_EQ(torsion1_star(f, x, u, v).vector, s.vectors().zero());
      }
    });
  }
}

TEST(Deformation, Curvature0ZeroLawsOnMultiaffineFields) {
  auto fields = z3_fields();
  for (auto& f : klein_fields()) fields.push_back(std::move(f));
  for (const auto& f : fields) {
    const Index zero = f.vectors().zero();
    for_tuples(f.points().size(), f.vectors().order(), [&](Index x, Index w, Index u, Index v) {
      if (w == zero || u == zero || v == zero) {
        EXPECT_EQ(curvature0(f, x, w, u, v).vector, zero);
      }
    });
  }
}

TEST(Deformation, Curvature0MatchesOracleOnPremonoidalFields) {
  const auto bij = klein_to_z4_bijections();
  const auto v = elementary_abelian(2, 2);
  bool nonzero = false;
  for (Index a = 0; a < bij.size(); ++a) {
    for (Index b = 0; b < bij.size(); ++b) {
      const std::vector<std::vector<Index>> betas = {bij[0], bij[a], bij[b], bij[(a + b) % bij.size()]};
      const auto f = certify_field(bijection_field(v, catalog_group("Z4"), betas));
      const oracle::Z4BijectionField o{betas};
      for_tuples(4, 4, [&](Index x, Index w, Index u, Index vv) {
        const Index got = curvature0(f, x, w, u, vv).vector;
        EXPECT_EQ(static_cast<int>(got), o.curvature0(x, w, u, vv));
        nonzero = nonzero || got != 0;
        // u = 0 and v = 0 vanish on every premonoidal field.
        if (u == 0 || vv == 0) {
          EXPECT_EQ(got, 0u);
        }
      });
    }
  }
  EXPECT_TRUE(nonzero);
}

TEST(Deformation, Curvature1SkewAndVanishing) {
  const auto bij = klein_to_z4_bijections();
  const auto f = certify_field(bijection_field(elementary_abelian(2, 2), catalog_group("Z4"),
                                               {bij[0], bij[1], bij[2], bij[3]}));
  for_tuples(4, 4, [&](Index x, Index w, Index u, Index v) {
    const auto a = curvature1(f, x, w, u, v), b = curvature1(f, x, w, v, u);
    EXPECT_EQ(a.translation, inverse(b.translation));
    if (u == v || u == 0 || v == 0) {
      EXPECT_EQ(a.vector, 0u);
    }
  });
}

TEST(Deformation, DstarVanishesOnZeroDisplacement) {
  auto fields = z3_fields();
  for (auto& f : klein_fields()) fields.push_back(std::move(f));
  for (const auto& f : fields) {
    for_tuples(f.points().size(), f.vectors().order(), [&](Index x, Index p, Index, Index v) {
      if (p < f.points().size()) {
        EXPECT_EQ(dstar(f, x, p, f.vectors().zero(), v).vector, f.vectors().zero());
      }
    });
  }
}

TEST(Deformation, Torsion1SkewOnQuaternionSpace) {
  const auto v = elementary_abelian(2, 3);
  const auto& q = catalog_group("Q");
  std::vector<Index> beta;
  for_each_identity_preserving_bijection(v.base, q, [&](std::span<const Index> b) {
    beta.assign(b.begin(), b.end());
    return false;
  });
  const auto s = verify_preaffine(v, bijection_action(v, q, beta));
  for (Index x = 0; x < 8; ++x) {
    for (Index a = 0; a < 8; ++a) {
      for (Index b = 0; b < 8; ++b) {
        EXPECT_EQ(torsion1(s, x, a, b).translation, inverse(torsion1(s, x, b, a).translation));
      }
    }
  }
}

TEST(Deformation, ParallelTransportOnAffineSpace) {
  const auto s = verify_preaffine(elementary_abelian(3, 2), right_regular_action(elementary_abelian(3, 2).base));
  const std::size_t n = s.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        const auto moved = parallel_transport(s, {x, z}, {x, y});
        EXPECT_EQ(moved.origin, y);
        // The bound vector keeps its free part.
        EXPECT_EQ(s.division(moved.origin, moved.tip), s.division(x, z));
        for (Index r = 0; r < n; r += 4) EXPECT_EQ(transport_curvature(s, x, r, y, z).vector, s.vectors().zero());
      }
    }
  }
  EXPECT_THROW(parallel_transport(s, {0, 1}, {2, 3}), PreconditionError);
}

TEST(Deformation, FieldTransportConsistentWithTorsion) {
  const auto f = certify_field(automorphism_field(elementary_abelian(3, 1), std::vector<Index>{0, 1, 0}));
  const auto constant = certify_field(automorphism_field(elementary_abelian(3, 1), std::vector<Index>{1, 1, 1}));
  bool nonzero = false;
  for (Index x = 0; x < 3; ++x) {
    for (Index r = 0; r < 3; ++r) {
      for (Index y = 0; y < 3; ++y) {
        for (Index z = 0; z < 3; ++z) {
          EXPECT_EQ(transport_curvature(constant, x, r, y, z).vector, 0u);
          nonzero = nonzero || transport_curvature(f, x, r, y, z).vector != 0;
        }
      }
    }
  }
  EXPECT_TRUE(nonzero);
}
