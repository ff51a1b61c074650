#include "genaff/affine.hpp"

#include <stdexcept>

namespace genaff {

namespace {

void require_domain(const VectorGroup& v, const Action& alpha) {
  if (!alpha.domain().is_group() || !(alpha.domain().group() == v.base)) {
    throw PreconditionError("action domain is not the vector group '" + v.base.name() + "'");
  }
}

void require_unital(const VectorGroup& v, const Action& alpha) {
  for (Index x = 0; x < alpha.carrier().size(); ++x) {
    if (alpha.apply(v.zero(), x) != x) {
      throw VerificationError("unital",
                              {{v.base.carrier().label(v.zero()), alpha.carrier().label(x)}},
                              "x + 0̄ differs from x");
    }
  }
}

std::vector<std::vector<Index>> require_regular(const Action& alpha) {
  auto rep = classify(alpha);
  if (!rep.holds(Flag::regular)) {
    throw VerificationError("regular", *rep.flag(Flag::regular).witness,
                            rep.holds(Flag::transitive) ? "action is not free"
                                                        : "action is not transitive");
  }
  return division_table(alpha);
}

// First (x, y, z) where overline(x→y) then overline(y→z) is not overline(x→z).
std::optional<Witness> closed_set_violation(const Action& alpha,
                                            const std::vector<std::vector<Index>>& div) {
  const std::size_t n = alpha.carrier().size();
  const auto& X = alpha.carrier();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const Endofunction& a = alpha.map(div[x][y]);
      for (Index z = 0; z < n; ++z) {
        const Endofunction& b = alpha.map(div[y][z]);
        const Endofunction& c = alpha.map(div[x][z]);
        for (Index p = 0; p < n; ++p) {
          if (b(a(p)) != c(p)) return Witness{{X.label(x), X.label(y), X.label(z)}};
        }
      }
    }
  }
  return std::nullopt;
}

bool closed_group_holds(const VectorGroup& v, const Action& alpha, Variance variance) {
  const std::size_t n = alpha.carrier().size();
  for (Index a = 0; a < v.order(); ++a) {
    for (Index b = 0; b < v.order(); ++b) {
      const Index s = v.add(a, b);
      for (Index x = 0; x < n; ++x) {
        const Index lhs = variance == Variance::contravariant ? alpha.apply(b, alpha.apply(a, x))
                                                              : alpha.apply(a, alpha.apply(b, x));
        if (lhs != alpha.apply(s, x)) return false;
      }
    }
  }
  return true;
}

SpaceKind affine_or_strict(const VectorGroup& v, const Action& alpha) {
  const bool contra = closed_group_holds(v, alpha, Variance::contravariant);
  const bool co = closed_group_holds(v, alpha, Variance::covariant);
  if (is_abelian(v.base) && co != contra) {
    throw std::logic_error("variance changed affinity over an abelian vector group");
  }
  return contra ? SpaceKind::affine : SpaceKind::strictly_preaffine;
}

}  // namespace

std::string_view kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::affine:
      return "affine";
    case SpaceKind::strictly_preaffine:
      return "strictly_preaffine";
    case SpaceKind::strictly_semipreaffine:
      return "strictly_semipreaffine";
  }
  return "unknown";
}

PreaffineSpace::PreaffineSpace(VectorGroup v, Action alpha, std::vector<std::vector<Index>> div,
                               SpaceKind kind)
    : v_(std::move(v)), alpha_(std::move(alpha)), div_(std::move(div)), kind_(kind) {}

PreaffineSpace verify_preaffine(const VectorGroup& v, const Action& alpha) {
  require_domain(v, alpha);
  require_unital(v, alpha);
  auto div = require_regular(alpha);
  if (auto w = closed_set_violation(alpha, div)) {
    throw VerificationError("closed_set", *w, "composite of translations is not overline(x→z)");
  }
  return PreaffineSpace(v, alpha, std::move(div), affine_or_strict(v, alpha));
}

PreaffineSpace verify_semipreaffine(const VectorGroup& v, const Action& alpha) {
  require_domain(v, alpha);
  require_unital(v, alpha);
  auto div = require_regular(alpha);
  const SpaceKind kind = closed_set_violation(alpha, div) ? SpaceKind::strictly_semipreaffine
                                                          : affine_or_strict(v, alpha);
  return PreaffineSpace(v, alpha, std::move(div), kind);
}

TranslationGroup translation_group(const PreaffineSpace& s) {
  if (s.kind() == SpaceKind::strictly_semipreaffine) {
    throw PreconditionError("a semipreaffine space has no translation group");
  }
  const Action& a = s.action();
  const auto& img = a.image();
  const std::size_t n = img.size();
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) {
    // The action is free, so the image is in vector order.
    labels.push_back("bar(" + s.vectors().base.carrier().label(i) + ")");
  }
  CayleyTable table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      auto k = a.find_in_image(seq(img[i], img[j]));
      if (!k) {
        throw VerificationError("closed_set", {{labels[i], labels[j]}},
                                "composite translation outside the image");
      }
      table[i][j] = *k;
    }
  }
  TranslationGroup t{validate_group(FiniteSet("T(" + s.points().name() + ")", labels), std::move(table)),
                     img, {}};
  if (!is_identity(img[t.group.identity()])) {
    throw VerificationError("translation_identity", {{labels[t.group.identity()]}},
                            "group identity is not the identity map");
  }
  for (Index i = 0; i < n; ++i) {
    if (is_identity(img[i])) continue;
    for (Index x = 0; x < s.size(); ++x) {
      if (img[i](x) == x) {
        throw VerificationError("fixed_point", {{labels[i], s.points().label(x)}},
                                "a non-identity translation has a fixed point");
      }
    }
  }
  for (Index v = 0; v < s.vectors().order(); ++v) t.of_vector.push_back(a.image_index(v));
  return t;
}

ChaslesReport chasles_holds(const PreaffineSpace& s) {
  ChaslesReport r;
  const auto& X = s.points();
  const auto& V = s.vectors();
  for (Index x = 0; x < s.size(); ++x) {
    for (Index y = 0; y < s.size(); ++y) {
      for (Index z = 0; z < s.size(); ++z) {
        const std::vector<std::string> tuple = {X.label(x), X.label(y), X.label(z)};
        const Index xy = s.division(x, y), yz = s.division(y, z), xz = s.division(x, z);
        r.vector_level.record(V.add(xy, yz) == xz, tuple);
        r.translation_level.record(seq(s.translation(xy), s.translation(yz)) == s.translation(xz),
                                   tuple);
      }
    }
  }
  return r;
}

Endofunction neg_translation(const PreaffineSpace& s, Index x, Index y) {
  for (Index p = 0; p < s.size(); ++p) {
    if (s.division(p, p) != s.vectors().zero()) {
      throw std::logic_error("(x→x) is not the zero vector at " + s.points().label(p));
    }
  }
  const Endofunction& t = s.translation(s.division(x, y));
  const auto& img = s.action().image();
  for (const auto& cand : img) {
    if (is_identity(seq(t, cand)) && is_identity(seq(cand, t))) {
      if (!(cand == s.translation(s.division(y, x)))) {
        throw std::logic_error("−overline(x→y) differs from overline(y→x)");
      }
      return cand;
    }
  }
  throw VerificationError("inverse", {{s.points().label(x), s.points().label(y)}},
                          "translation has no inverse in the image");
}

LawCheck parallelogram_holds(const PreaffineSpace& s) {
  LawCheck r;
  const auto& X = s.points();
  const auto& V = s.vectors().base.carrier();
  for (Index x = 0; x < s.size(); ++x) {
    for (Index u = 0; u < V.size(); ++u) {
      for (Index v = 0; v < V.size(); ++v) {
        r.record(s.add(s.add(x, u), v) == s.add(s.add(x, v), u), {X.label(x), V.label(u), V.label(v)});
      }
    }
  }
  return r;
}

}  // namespace genaff
