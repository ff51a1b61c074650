#include "genaff/deformation.hpp"

#include "genaff/error.hpp"

namespace genaff {

namespace {

DeformationValue at_space(const PreaffineSpace& s, Index from, Index to) {
  const Index v = s.division(from, to);
  return DeformationValue{v, s.translation(v), from};
}

DeformationValue at_field(const ActionField& f, Index base, Index from, Index to) {
  const Index v = f.division_at(base, from, to);
  return DeformationValue{v, f.translation(base, v), base};
}

// x + v̄^x
Index step(const ActionField& f, Index x, Index v) { return f.apply(x, v, x); }

}  // namespace

DeformationValue torsion0(const PreaffineSpace& s, Index x, Index u, Index v) {
  const Index lhs = s.add(s.add(x, u), v);
  const Index rhs = s.add(x, s.vectors().add(u, v));
  return at_space(s, lhs, rhs);
}

DeformationValue torsion1(const PreaffineSpace& s, Index x, Index u, Index v) {
  const Index lhs = s.add(s.add(x, u), v);
  const Index rhs = s.add(s.add(x, v), u);
  return at_space(s, lhs, rhs);
}

DeformationValue torsion1_star(const ActionField& f, Index x, Index u, Index v) {
  const Index y = step(f, x, u);
  const Index z = step(f, x, v);
  const Index t = step(f, y, v);
  const Index t2 = step(f, z, u);
  return at_field(f, t, t, t2);
}

DeformationValue torsion0_star(const ActionField& f, Index x, Index u, Index v) {
  const Index a = step(f, step(f, x, u), v);
  const Index b = step(f, x, f.vectors().add(u, v));
  return at_field(f, a, a, b);
}

DeformationValue curvature0(const ActionField& f, Index x, Index w, Index u, Index v) {
  const Index r = step(f, x, w);
  const Index s = step(f, r, u);
  const Index t = step(f, s, v);
  const Index pulled = f.pullback(v, s, r);
  const Index t2 = f.apply(r, f.vectors().add(u, pulled), r);
  return at_field(f, t, t, t2);
}

DeformationValue curvature1(const ActionField& f, Index x, Index w, Index u, Index v,
                            std::optional<Index> base) {
  const auto a = curvature0(f, x, w, u, v);
  const auto b = curvature0(f, x, w, v, u);
  Endofunction t = seq(a.translation, inverse(b.translation));
  const Index p = base.value_or(x);
  for (Index i = 0; i < f.common_image().size(); ++i) {
    if (f.common_image()[i] == t) return DeformationValue{f.vector_for(p, i), std::move(t), p};
  }
  throw VerificationError("closed_set", {{f.points().label(x)}},
                          "difference of curvature translations left the translation set");
}

DeformationValue dstar(const ActionField& f, Index x, Index p, Index d, Index v) {
  const Index p2 = f.apply(p, d, p);
  return at_field(f, p, f.apply(p, v, x), f.apply(p2, v, x));
}

BoundVector parallel_transport(const PreaffineSpace& s, BoundVector bv, BoundVector along) {
  if (bv.origin != along.origin) throw PreconditionError("transport along a vector with another origin");
  return {along.tip, s.add(bv.tip, s.division(along.origin, along.tip))};
}

BoundVector parallel_transport(const ActionField& f, BoundVector bv, BoundVector along) {
  if (bv.origin != along.origin) throw PreconditionError("transport along a vector with another origin");
  const Index v = f.division_at(along.origin, along.origin, along.tip);
  return {along.tip, f.apply(bv.tip, v, bv.tip)};
}

DeformationValue transport_curvature(const PreaffineSpace& s, Index x, Index r, Index y, Index z) {
  const auto mid = parallel_transport(s, {x, r}, {x, y});
  const auto via = parallel_transport(s, mid, {y, z});
  const auto direct = parallel_transport(s, {x, r}, {x, z});
  return at_space(s, via.tip, direct.tip);
}

DeformationValue transport_curvature(const ActionField& f, Index x, Index r, Index y, Index z) {
  const auto mid = parallel_transport(f, {x, r}, {x, y});
  const auto via = parallel_transport(f, mid, {y, z});
  const auto direct = parallel_transport(f, {x, r}, {x, z});
  return at_field(f, via.tip, via.tip, direct.tip);
}

}  // namespace genaff
