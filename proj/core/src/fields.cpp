#include "genaff/fields.hpp"

#include <unordered_map>

namespace genaff {

std::string_view field_kind_name(FieldKind k) {
  return k == FieldKind::monoidal ? "monoidal" : "premonoidal";
}

ActionField::ActionField(VectorGroup v, FiniteSet x, std::vector<Action> per_point, FieldKind kind)
    : v_(std::move(v)),
      x_(std::move(x)),
      per_point_(std::move(per_point)),
      kind_(kind),
      nv_(v_.order()),
      nx_(x_.size()) {
  image_ = per_point_.front().image();
  std::unordered_map<Endofunction, Index, EndofunctionHash> lookup;
  for (Index t = 0; t < image_.size(); ++t) lookup.emplace(image_[t], t);

  apply_.resize(nx_ * nv_ * nx_);
  div_.resize(nx_ * nx_ * nx_);
  tindex_.resize(nx_ * nv_);
  vfor_.resize(nx_ * nv_);
  for (Index p = 0; p < nx_; ++p) {
    const Action& a = per_point_[p];
    for (Index v = 0; v < nv_; ++v) {
      const Index t = lookup.at(a.map(v));
      tindex_[p * nv_ + v] = t;
      vfor_[p * nv_ + t] = v;
      for (Index x = 0; x < nx_; ++x) {
        const Index y = a.apply(v, x);
        apply_[(p * nv_ + v) * nx_ + x] = y;
        div_[(p * nx_ + x) * nx_ + y] = v;
      }
      if (!(a.map(v) == per_point_.front().map(v))) constant_ = false;
    }
  }
}

ActionField verify_field(const VectorGroup& v, const FiniteSet& x, std::vector<Action> per_point,
                         FieldKind kind) {
  const std::size_t nx = x.size();
  if (per_point.size() != nx) {
    throw PreconditionError("action field needs one action per point: expected " +
                            std::to_string(nx) + ", got " + std::to_string(per_point.size()));
  }
  if (nx * v.order() * nx > kFieldTableCap) {
    throw PreconditionError("action field exceeds the table cap of " + std::to_string(kFieldTableCap));
  }
  auto prefixed = [&](Index p, const Witness& w) {
    Witness out{{x.label(p)}};
    out.elements.insert(out.elements.end(), w.elements.begin(), w.elements.end());
    return out;
  };
  for (Index p = 0; p < nx; ++p) {
    const Action& a = per_point[p];
    if (!a.domain().is_group() || !(a.domain().group() == v.base) || !(a.carrier() == x)) {
      throw PreconditionError("action at point " + x.label(p) +
                              " does not act by the vector group on the field's carrier");
    }
    const auto rep = classify(a, Variance::contravariant);
    for (Flag f : {Flag::regular, Flag::unital_group}) {
      if (!rep.holds(f)) {
        throw VerificationError(std::string(flag_name(f)), prefixed(p, *rep.flag(f).witness),
                                "action at point " + x.label(p));
      }
    }
    const Flag closed = kind == FieldKind::monoidal ? Flag::closed_group_contravariant : Flag::closed_set;
    if (!rep.holds(closed)) {
      throw VerificationError(std::string(flag_name(closed)), prefixed(p, *rep.flag(closed).witness),
                              "action at point " + x.label(p));
    }
  }
  // Each image has |V| elements (free actions), so containment in the first
  // point's image is equality.
  const Action& first = per_point.front();
  for (Index p = 1; p < nx; ++p) {
    for (Index g = 0; g < v.order(); ++g) {
      if (!first.find_in_image(per_point[p].map(g))) {
        throw VerificationError("common_image",
                                {{x.label(p), x.label(0), v.base.carrier().label(g)}},
                                "translation at one point is missing at another");
      }
    }
  }
  return ActionField(v, x, std::move(per_point), kind);
}

FieldLaws field_laws(const ActionField& f) {
  FieldLaws r;
  const auto& X = f.points();
  const auto& V = f.vectors();
  const auto& VL = V.base.carrier();
  const std::size_t nx = X.size(), nv = V.order();
  for (Index p = 0; p < nx; ++p) {
    for (Index x = 0; x < nx; ++x) {
      r.unital.record(f.apply(p, V.zero(), x) == x, {X.label(p), X.label(x)});
      for (Index u = 0; u < nv; ++u) {
        for (Index v = 0; v < nv; ++v) {
          r.closed_group.record(f.apply(p, v, f.apply(p, u, x)) == f.apply(p, V.add(u, v), x),
                                {X.label(p), X.label(x), VL.label(u), VL.label(v)});
        }
        r.reg2.record(f.division_at(p, x, f.apply(p, u, x)) == u, {X.label(p), X.label(x), VL.label(u)});
      }
      for (Index y = 0; y < nx; ++y) {
        r.reg1.record(f.apply(p, f.division_at(p, x, y), x) == y, {X.label(p), X.label(x), X.label(y)});
      }
    }
    for (Index v = 0; v < nv; ++v) {
      r.inv1.record(f.pullback(v, p, p) == v, {X.label(p), VL.label(v)});
      for (Index q = 0; q < nx; ++q) {
        r.inv1b.record(f.translation(p, f.pullback(v, q, p)) == f.translation(q, v),
                       {X.label(p), X.label(q), VL.label(v)});
      }
    }
    for (Index q = 0; q < nx; ++q) {
      for (Index x = 0; x < nx; ++x) {
        for (Index y = 0; y < nx; ++y) {
          r.inv2.record(f.pullback(f.division_at(p, x, y), p, q) == f.division_at(q, x, y),
                        {X.label(p), X.label(q), X.label(x), X.label(y)});
        }
      }
    }
  }
  return r;
}

InducedAction induced_action(const ActionField& f) {
  const std::size_t nx = f.points().size();
  std::vector<Endofunction> maps;
  for (Index v = 0; v < f.vectors().order(); ++v) {
    std::vector<Index> images(nx);
    for (Index x = 0; x < nx; ++x) images[x] = f.apply(x, v, x);
    maps.emplace_back(f.points(), std::move(images));
  }
  Action a(f.vectors().base, f.points(), std::move(maps));
  auto report = classify(a, Variance::contravariant);
  auto space = verify_semipreaffine(f.vectors(), a);
  return InducedAction{std::move(a), std::move(report), std::move(space)};
}

ActionField constant_field(const PreaffineSpace& s) {
  return verify_field(s.vectors(), s.points(), std::vector<Action>(s.size(), s.action()),
                      s.kind() == SpaceKind::affine ? FieldKind::monoidal : FieldKind::premonoidal);
}

}  // namespace genaff
