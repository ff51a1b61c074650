#pragma once

// Preaffine spaces: a carrier X with a regular unital action of a vector
// group V. Notation is right-handed: add(x, v) is x + v̄, and x + ū + v̄ applies
// ū first, so x + ū + v̄ = seq(ū, v̄)(x).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "genaff/actions.hpp"
#include "genaff/error.hpp"
#include "genaff/groups.hpp"

namespace genaff {

enum class SpaceKind { affine, strictly_preaffine, strictly_semipreaffine };

std::string_view kind_name(SpaceKind k);

class PreaffineSpace {
 public:
  const VectorGroup& vectors() const { return v_; }
  const FiniteSet& points() const { return alpha_.carrier(); }
  const Action& action() const { return alpha_; }
  SpaceKind kind() const { return kind_; }
  std::size_t size() const { return points().size(); }

  // x + v̄
  Index add(Index x, Index v) const { return alpha_.apply(v, x); }
  // (x→y): the unique v with x + v̄ = y.
  Index division(Index x, Index y) const { return div_[x][y]; }
  const Endofunction& translation(Index v) const { return alpha_.map(v); }

 private:
  friend PreaffineSpace verify_preaffine(const VectorGroup&, const Action&);
  friend PreaffineSpace verify_semipreaffine(const VectorGroup&, const Action&);
  PreaffineSpace(VectorGroup v, Action alpha, std::vector<std::vector<Index>> div, SpaceKind kind);

  VectorGroup v_;
  Action alpha_;
  std::vector<std::vector<Index>> div_;
  SpaceKind kind_;
};

// Requires α's domain to be V's group (PreconditionError otherwise), then
// checks unitality ("unital", witness (0, x)), regularity ("regular") and
// closedness as sets in division form ("closed_set", witness (x, y, z)).
// The kind is affine iff x + ū + v̄ = x + overline(u+v) everywhere.
PreaffineSpace verify_preaffine(const VectorGroup& v, const Action& alpha);

// Accepts any regular action with 0̄ = ε_X. The kind is affine or
// strictly_preaffine when the action also passes verify_preaffine, else
// strictly_semipreaffine.
PreaffineSpace verify_semipreaffine(const VectorGroup& v, const Action& alpha);

// The image of a preaffine action as a group. table[i][j] is the index of
// seq(elements[i], elements[j]); of_vector[v] is the index of v̄.
struct TranslationGroup {
  FiniteGroup group;
  std::vector<Endofunction> elements;
  std::vector<Index> of_vector;
};

// Labels translations "bar(<v>)". Re-validates the group axioms and the
// fixed-point property. Throws PreconditionError on semipreaffine spaces.
TranslationGroup translation_group(const PreaffineSpace& s);

struct ChaslesReport {
  LawCheck vector_level;       // (x→y) + (y→z) = (x→z)
  LawCheck translation_level;  // overline(x→y) then overline(y→z) = overline(x→z)
  bool holds() const { return vector_level.holds; }
};

ChaslesReport chasles_holds(const PreaffineSpace& s);

// −overline(x→y) in the translation group; asserts it equals overline(y→x).
Endofunction neg_translation(const PreaffineSpace& s, Index x, Index y);

// x + ū + v̄ = x + v̄ + ū for all x, u, v; witnesses are (x, u, v).
LawCheck parallelogram_holds(const PreaffineSpace& s);

}  // namespace genaff
