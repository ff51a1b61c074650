#pragma once

// Deformation measures. Each returns the vector together with the point at
// which it was divided out and the translation it names there.
//
//   torsion0(x,u,v)        = ((x+ū+v̄) → (x+overline(u+v)))
//   torsion1(x,u,v)        = ((x+ū+v̄) → (x+v̄+ū))
//   torsion1_star(x,u,v)   = (t → t')_t,  y = x+ū^x, z = x+v̄^x,
//                            t = y+v̄^y, t' = z+ū^z
//   torsion0_star(x,u,v)   = (a → x+overline(u+v)^x)_a,  a = y+v̄^y
//   curvature0(x,w,u,v)    = (t → r+overline(u+(v̄^s)_r)^r)_t,
//                            r = x+w̄^x, s = r+ū^r, t = s+v̄^s
//   curvature1(x,w,u,v)    = overline(curvature0(x,w,u,v)) then
//                            −overline(curvature0(x,w,v,u))
//   dstar(x,p,d,v)         = ((x+v̄^p) → (x+v̄^p'))_p,  p' = p+d̄^p

#include <optional>

#include "genaff/affine.hpp"
#include "genaff/carriers.hpp"
#include "genaff/fields.hpp"

namespace genaff {

struct BoundVector {
  Index origin;
  Index tip;
  bool operator==(const BoundVector&) const = default;
};

struct DeformationValue {
  Index vector;
  Endofunction translation;
  Index base;
};

DeformationValue torsion0(const PreaffineSpace& s, Index x, Index u, Index v);
DeformationValue torsion1(const PreaffineSpace& s, Index x, Index u, Index v);

DeformationValue torsion1_star(const ActionField& f, Index x, Index u, Index v);
DeformationValue torsion0_star(const ActionField& f, Index x, Index u, Index v);
DeformationValue curvature0(const ActionField& f, Index x, Index w, Index u, Index v);
// The vector is read off at `base` (default x).
DeformationValue curvature1(const ActionField& f, Index x, Index w, Index u, Index v,
                            std::optional<Index> base = std::nullopt);
DeformationValue dstar(const ActionField& f, Index x, Index p, Index d, Index v);

// Moves bv along `along` (same origin; PreconditionError otherwise).
// Preaffine: (x,z) ↦ (y, z + overline(x→y)).
// Field: (x,z) ↦ (y, z + overline((x→y)_x)^z), the translation realized at
// the tip being moved.
BoundVector parallel_transport(const PreaffineSpace& s, BoundVector bv, BoundVector along);
BoundVector parallel_transport(const ActionField& f, BoundVector bv, BoundVector along);

// Transport (x,r) along (x,y) then along (y,z), and separately along (x,z).
// Returns the displacement from the first tip to the second, divided at the
// first tip.
DeformationValue transport_curvature(const PreaffineSpace& s, Index x, Index r, Index y, Index z);
DeformationValue transport_curvature(const ActionField& f, Index x, Index r, Index y, Index z);

}  // namespace genaff
