#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "genaff/carriers.hpp"
#include "genaff/error.hpp"
#include "genaff/groups.hpp"

namespace genaff {

// What an action acts by: either a bare set or a group.
class ActionDomain {
 public:
  ActionDomain(FiniteSet set) : value_(std::move(set)) {}
  ActionDomain(FiniteGroup group) : value_(std::move(group)) {}

  bool is_group() const { return std::holds_alternative<FiniteGroup>(value_); }
  const FiniteSet& elements() const;
  // Throws PreconditionError on a bare-set domain.
  const FiniteGroup& group() const;
  std::size_t size() const { return elements().size(); }

  bool operator==(const ActionDomain& other) const;

 private:
  std::variant<FiniteSet, FiniteGroup> value_;
};

// α: G → F_X, stored as one endofunction per domain element.
class Action {
 public:
  Action(ActionDomain domain, FiniteSet carrier, std::vector<Endofunction> maps);

  const ActionDomain& domain() const { return domain_; }
  const FiniteSet& carrier() const { return carrier_; }
  const Endofunction& map(Index g) const { return maps_[g]; }
  const std::vector<Endofunction>& maps() const { return maps_; }
  Index apply(Index g, Index x) const { return maps_[g](x); }

  // Distinct maps in order of first occurrence.
  const std::vector<Endofunction>& image() const { return image_; }
  Index image_index(Index g) const { return image_index_[g]; }
  std::optional<Index> find_in_image(const Endofunction& f) const;

  bool operator==(const Action& other) const;

 private:
  ActionDomain domain_;
  FiniteSet carrier_;
  std::vector<Endofunction> maps_;
  std::vector<Endofunction> image_;
  std::vector<Index> image_index_;
};

// ḡ(x) = g□x; closed in the covariant sense.
Action left_regular_action(const FiniteGroup& g);
// ḡ(x) = x□g; closed in the contravariant sense.
Action right_regular_action(const FiniteGroup& g);
// Every domain element acts as the identity map.
Action trivial_action(const ActionDomain& domain, const FiniteSet& carrier);

// Calls visit on every action of `domain` on `carrier`, in lexicographic order
// of the concatenated image tables. visit returns false to stop early.
void for_each_action(const ActionDomain& domain, const FiniteSet& carrier,
                     const std::function<bool(const Action&)>& visit);

// Covariant: ḡ∘h̄ = overline(gh). Contravariant: h̄∘ḡ = overline(gh), i.e. ḡ
// first, then h̄.
enum class Variance { covariant, contravariant };

enum class Flag {
  unital_set,
  invertible_set,
  closed_set,
  reversible,
  transitive,
  free,
  regular,
  unital_group,
  invertible_group,
  closed_group_covariant,
  closed_group_contravariant,
  monoidal,
  premonoidal,
  injective_as_function,
};

std::string_view flag_name(Flag f);
std::optional<Flag> parse_flag(std::string_view name);
// Every flag in report order.
const std::vector<Flag>& all_flags();
bool is_group_flag(Flag f);

struct FlagResult {
  bool holds = true;
  // Lexicographically least counterexample when holds is false.
  std::optional<Witness> witness;
};

// Structure of the image ᾱ(G) under composition.
struct ImageStructure {
  std::size_t size = 0;
  bool closed = false;
  // Two-sided identity of the image, if closed and one exists.
  std::optional<Index> identity;
  bool identity_is_identity_map = false;
  bool is_group = false;
};

struct ClassificationReport {
  Variance variance = Variance::covariant;
  bool group_domain = false;
  std::vector<std::optional<FlagResult>> results;  // indexed by Flag
  ImageStructure image;

  // Throws PreconditionError for a group flag on a bare-set domain.
  const FlagResult& flag(Flag f) const;
  bool holds(Flag f) const { return flag(f).holds; }
  bool has(Flag f) const { return results[static_cast<std::size_t>(f)].has_value(); }
};

// Evaluates every flag by direct quantification. `variance` selects which
// closedness enters `monoidal`. Reversibility is computed three ways and a
// disagreement throws std::logic_error.
ClassificationReport classify(const Action& a, Variance variance = Variance::covariant);

// The image under composition, table[i][j] = image[i]∘image[j], labelled
// "bar(<g>)" by the first domain element naming each map. Empty unless the
// image is a group.
std::optional<FiniteGroup> image_group(const Action& a);

// x̄(g) = ḡ(x) for every g.
std::vector<Index> dual(const Action& a, Index x);
// Sorted list of distinct ḡ(x).
std::vector<Index> orbit(const Action& a, Index x);
// { g : ḡ(x) = y }, sorted.
std::vector<Index> conduit(const Action& a, Index x, Index y);
inline std::vector<Index> stabilizer(const Action& a, Index x) { return conduit(a, x, x); }

// y/x: the unique g with ḡ(x) = y. Throws PreconditionError unless the
// action is regular.
Index division(const Action& a, Index x, Index y);
// table[x][y] = y/x; same precondition.
std::vector<std::vector<Index>> division_table(const Action& a);

// β(g, x) = ḡ(x).
struct BinaryActionTable {
  ActionDomain domain;
  FiniteSet carrier;
  std::vector<std::vector<Index>> cells;

  bool operator==(const BinaryActionTable&) const = default;
};

BinaryActionTable to_binary(const Action& a);
Action from_binary(const BinaryActionTable& b);

// The same maps over the opposite group. Throws PreconditionError on a
// bare-set domain.
Action opposite_action(const Action& a);

}  // namespace genaff
