#pragma once

// Action fields: one action Φ(p) of V on X per point p, all with the same
// image 𝒯. apply(p, v, x) is x + v̄^p and division_at(p, x, y) is (x→y)_p.

#include <cstddef>
#include <vector>

#include "genaff/actions.hpp"
#include "genaff/affine.hpp"
#include "genaff/groups.hpp"

namespace genaff {

// monoidal: every Φ(p) is a regular group action (a multiaffine space).
// premonoidal: every Φ(p) is regular, unital and closed as a set action.
enum class FieldKind { monoidal, premonoidal };

std::string_view field_kind_name(FieldKind k);

inline constexpr std::size_t kFieldTableCap = std::size_t{1} << 18;

class ActionField {
 public:
  const VectorGroup& vectors() const { return v_; }
  const FiniteSet& points() const { return x_; }
  FieldKind kind() const { return kind_; }
  bool constant() const { return constant_; }
  const Action& at(Index p) const { return per_point_[p]; }
  const std::vector<Action>& actions() const { return per_point_; }
  // 𝒯, in the order of Φ(first point)'s image.
  const std::vector<Endofunction>& common_image() const { return image_; }

  Index apply(Index p, Index v, Index x) const { return apply_[(p * nv_ + v) * nx_ + x]; }
  Index division_at(Index p, Index x, Index y) const { return div_[(p * nx_ + x) * nx_ + y]; }
  // Index into common_image() of v̄^p.
  Index translation_index(Index p, Index v) const { return tindex_[p * nv_ + v]; }
  const Endofunction& translation(Index p, Index v) const { return image_[translation_index(p, v)]; }
  // φ(p)⁻¹(t) for a translation index t.
  Index vector_for(Index p, Index t) const { return vfor_[p * nv_ + t]; }
  // (v̄^q)_p = φ(p)⁻¹(v̄^q).
  Index pullback(Index v, Index q, Index p) const { return vector_for(p, translation_index(q, v)); }

 private:
  friend ActionField verify_field(const VectorGroup&, const FiniteSet&, std::vector<Action>, FieldKind);
  ActionField(VectorGroup v, FiniteSet x, std::vector<Action> per_point, FieldKind kind);

  VectorGroup v_;
  FiniteSet x_;
  std::vector<Action> per_point_;
  FieldKind kind_;
  bool constant_ = true;
  std::size_t nv_, nx_;
  std::vector<Endofunction> image_;
  std::vector<Index> apply_, div_, tindex_, vfor_;
};

// Checks one action per point with domain V and carrier X
// (PreconditionError otherwise), per-point regularity and unitality, the
// per-point closedness required by `kind` (contravariant group closedness
// for monoidal, set closedness for premonoidal) and the common image
// ("common_image", witness (p, q, v): v̄^p is not in Φ(q)'s image).
ActionField verify_field(const VectorGroup& v, const FiniteSet& x, std::vector<Action> per_point,
                         FieldKind kind);

// Pointwise identities, exhaustive over points, vectors and carrier
// elements. Witness tuples list p first.
struct FieldLaws {
  LawCheck unital;        // x + 0̄^p = x
  LawCheck closed_group;  // x + ū^p + v̄^p = x + overline(u+v)^p
  LawCheck reg1;          // x + overline((x→y)_p)^p = y
  LawCheck reg2;          // (x → x+v̄^p)_p = v
  LawCheck inv1;          // (v̄^p)_p = v
  LawCheck inv1b;         // overline((v̄^q)_p)^p = v̄^q
  LawCheck inv2;          // (overline((x→y)_p)^p)_q = (x→y)_q
};

FieldLaws field_laws(const ActionField& f);

// The action x + v̄ := x + v̄^x.
struct InducedAction {
  Action action;
  ClassificationReport report;  // contravariant
  PreaffineSpace space;         // kind tells preaffine from strictly semipreaffine
};

InducedAction induced_action(const ActionField& f);

// Φ(p) = α for every p.
ActionField constant_field(const PreaffineSpace& s);

}  // namespace genaff
